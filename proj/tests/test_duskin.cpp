#include <doctest.h>

#include <set>

#include "dusk/duskin.hpp"
#include "test_helpers.hpp"

using namespace dusk;

TEST_CASE("suspensions are valid 2-categories") {
  for (const FinCategory& D : {ordinal(-1), ordinal(0), ordinal(1), ordinal(2),
                               product(ordinal(1), ordinal(1)), testing::parallel_pair()}) {
    const MultiSuspension S = suspension(D);
    const auto v = validate_two_category(S.cat);
    INFO(v.message);
    CHECK(v.ok);
    CHECK(S.cat.num_objects == 2);
  }
}

TEST_CASE("suspension cell counts") {
  const MultiSuspension empty = suspension(ordinal(-1));
  CHECK(empty.cat.num_one_cells() == 2);
  CHECK(empty.cat.num_two_cells() == 2);

  // free 2-cell: id_x, id_y, f0, f1 and one non-identity 2-cell
  const MultiSuspension free2 = suspension(ordinal(1));
  CHECK(free2.cat.num_one_cells() == 4);
  CHECK(free2.cat.num_two_cells() == 5);
}

TEST_CASE("multi-point suspensions validate and match the factors") {
  const auto S = multi_suspension({ordinal(2), ordinal(0), ordinal(1)});  // [3|2,0,1]
  const auto v = validate_two_category(S.cat);
  INFO(v.message);
  CHECK(v.ok);
  CHECK(S.cat.num_objects == 4);
  CHECK(S.hom(0, 3).num_objects == 3 * 1 * 2);
  CHECK(S.hom(1, 3).num_objects == 1 * 2);
  CHECK(S.hom(2, 0).num_objects == 0);

  CHECK(multi_suspension({ordinal(1)}).cat == suspension(ordinal(1)).cat);

  // the two-width-zero object is the walking composable pair: all 2-cells
  // are identities and the 1-cells form the poset [2]
  const auto S2 = multi_suspension({ordinal(0), ordinal(0)});
  CHECK(validate_two_category(S2.cat).ok);
  CHECK(S2.cat.num_objects == 3);
  CHECK(S2.cat.num_one_cells() == 6);
  CHECK(S2.cat.num_two_cells() == 6);
}

TEST_CASE("nerve counts for the terminal suspension") {
  const MultiSuspension S = suspension(ordinal(0));
  for (int n = 0; n <= 4; ++n)
    CHECK(nerve_simplices(S.cat, n).size() == static_cast<size_t>(n) + 2);
}

TEST_CASE("nerve counts match matrix counts") {
  const MultiSuspension S = suspension(ordinal(1));
  CHECK(nerve_simplices(S.cat, 2).size() == simplices(ordinal(1), 2).size());
  CHECK(nerve_simplices(S.cat, 2).size() == 8);
  CHECK(nerve_simplices(S.cat, 3).size() == 16);
  CHECK(nerve_simplices(S.cat, 4).size() == 32);
  CHECK_THROWS_AS(nerve_simplices(S.cat, 5), std::invalid_argument);
}

TEST_CASE("nerve of the walking composable pair matches the 2-simplex") {
  const auto S = multi_suspension({ordinal(0), ordinal(0)});
  for (int n = 0; n <= 4; ++n)
    CHECK(nerve_simplices(S.cat, n).size() == static_cast<size_t>((n + 2) * (n + 3) / 2));
}

TEST_CASE("pasting relation") {
  const FinCategory D = ordinal(2);
  const MultiSuspension S = suspension(D);

  // fully degenerate at an object
  const int e = S.cat.id1[0];
  const Triangle constant{e, e, e, S.cat.id2[e]};
  CHECK(pasting_relation(S.cat, {constant, constant, constant, constant}).holds());

  // the three tetrahedra induced by the commutative square 0->1->2 hold
  const MatSimplex sq = thin_matrix(D, 1, 1, [](int a, int b) { return a + (1 - b); });
  const MatSimplex col = thin_matrix(D, 2, 0, [](int a, int) { return a; });
  const MatSimplex row = thin_matrix(D, 0, 2, [](int, int b) { return 2 - b; });
  for (const MatSimplex& m : {col, sq, row}) {
    const DuskinSimplex t = phi(S, m);
    CHECK(pasting_relation(S.cat, std::get<Tetrahedron>(t.data).face).holds());
  }

  // perturbing one 2-cell over a poset suspension can only break the
  // boundary, and that is reported distinctly
  const Tetrahedron tet = std::get<Tetrahedron>(phi(S, sq).data);
  Tetrahedron mutated = tet;
  mutated.face[2].theta = (tet.face[2].theta + 1) % S.cat.num_two_cells();
  const auto check = pasting_relation(S.cat, mutated.face);
  CHECK(check.status == PastingStatus::incompatible_boundary);

  // a genuine relation failure needs parallel 2-cells: over the
  // suspension of the parallel pair, matching edges with mismatched
  // diagonals violate the relation itself
  const FinCategory P = testing::parallel_pair();
  const MultiSuspension SP = suspension(P);
  auto one = [&](int o) { return SP.one_cell(0, 1, o); };
  auto two = [&](int m) { return SP.two_cell(0, 1, m); };
  const int idx = SP.cat.id1[0], idy = SP.cat.id1[1];
  const int u = 2, v = 3;  // the two parallel arrows of P
  const Triangle d3{idx, one(1), one(0), two(u)};   // theta_012 = u
  const Triangle d2{idx, one(0), one(0), two(P.identity[0])};
  const Triangle d1{one(0), idy, one(0), two(P.identity[0])};
  const Triangle d0{one(1), idy, one(0), two(v)};   // theta_123 = v
  const auto fails = pasting_relation(SP.cat, {d0, d1, d2, d3});
  CHECK(fails.status == PastingStatus::relation_fails);
  const Triangle d0_good{one(1), idy, one(0), two(u)};
  CHECK(pasting_relation(SP.cat, {d0_good, d1, d2, d3}).holds());
}

TEST_CASE("phi on low-dimensional matrices") {
  const FinCategory D = ordinal(2);
  const MultiSuspension S = suspension(D);

  // an object of D becomes the 1-cell it names
  const DuskinSimplex edge = phi(S, object_simplex(D, 1));
  CHECK(edge == DuskinSimplex{OneCellSimplexD{S.one_cell(0, 1, 1)}});
  CHECK(phi_inverse(S, edge) == object_simplex(D, 1));

  // the commutative square becomes the middle tetrahedron: edge 01 at x,
  // edge 23 at y, and the four 2-cells are the square's sides
  const MatSimplex sq = thin_matrix(D, 1, 1, [](int a, int b) { return a + (1 - b); });
  const Tetrahedron tet = std::get<Tetrahedron>(phi(S, sq).data);
  CHECK(tet.face[3].a == S.cat.id1[0]);
  CHECK(tet.face[1].b == S.cat.id1[1]);
  CHECK(tet.face[3].theta == S.two_cell(0, 1, sq.vert_arrow(0, 0)));
  CHECK(tet.face[2].theta == S.two_cell(0, 1, sq.vert_arrow(0, 1)));
  CHECK(tet.face[1].theta == S.two_cell(0, 1, sq.horz_arrow(0, 0)));
  CHECK(tet.face[0].theta == S.two_cell(0, 1, sq.horz_arrow(1, 0)));
}

TEST_CASE("phi and phi_inverse are mutually inverse up to dimension 3") {
  for (const FinCategory& D : {ordinal(2), testing::parallel_pair()}) {
    const MultiSuspension S = suspension(D);
    for (int n = 0; n <= 3; ++n) {
      const auto mats = simplices(D, n);
      const auto nerve = nerve_simplices(S.cat, n);
      CHECK(mats.size() == nerve.size());
      std::set<MatSimplex> seen;
      for (const auto& m : mats) {
        const DuskinSimplex t = phi(S, m);
        CHECK(phi_inverse(S, t) == m);
        seen.insert(m);
      }
      CHECK(seen.size() == mats.size());
      for (const auto& t : nerve) CHECK(phi(S, phi_inverse(S, t)) == t);
    }
  }
}

TEST_CASE("phi commutes with faces") {
  const FinCategory D = ordinal(2);
  const MultiSuspension S = suspension(D);
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : simplices(D, n)) {
      const DuskinSimplex t = phi(S, m);
      for (int i = 0; i <= n; ++i) CHECK(phi(S, face(D, m, i)) == duskin_face(S.cat, t, i));
    }
}

TEST_CASE("oracle equivalence where the pasting relation is non-vacuous") {
  // over a non-thin category the commuting-square constraint on the
  // matrix side and the pasting relation on the nerve side both cut the
  // counts down; they must cut them identically
  const FinCategory P = testing::parallel_pair();
  const MultiSuspension S = suspension(P);
  for (int n = 0; n <= 4; ++n)
    CHECK(nerve_simplices(S.cat, n).size() == simplices(P, n).size());
}

TEST_CASE("oracle equivalence over the commutative square poset") {
  // counts at n <= 4 and the full bijection at n <= 3, over a category
  // whose matrices have genuinely two-dimensional entries
  const FinCategory sq = product(ordinal(1), ordinal(1));
  const MultiSuspension S = suspension(sq);
  for (int n = 0; n <= 4; ++n)
    CHECK(nerve_simplices(S.cat, n).size() == simplices(sq, n).size());
  for (int n = 0; n <= 3; ++n) {
    std::set<MatSimplex> round;
    for (const auto& t : nerve_simplices(S.cat, n)) round.insert(phi_inverse(S, t));
    CHECK(round.size() == simplices(sq, n).size());
  }
}

TEST_CASE("phi rejects dimensions above three") {
  const MultiSuspension S = suspension(ordinal(1));
  CHECK_THROWS_AS(phi(S, empty_row_simplex(4)), std::invalid_argument);
  const DuskinSimplex four{FourSimplex{}};
  CHECK_THROWS_AS(phi_inverse(S, four), std::invalid_argument);
}
