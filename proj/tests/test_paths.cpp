#include <doctest.h>

#include <map>
#include <set>

#include "dusk/paths.hpp"

using namespace dusk;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < std::min(k, n - k); ++i) r = r * (n - i) / (i + 1);
  return r;
}

long long catalan(int m) {
  // C_m via the recurrence C_{m+1} = sum C_i C_{m-i}
  std::vector<long long> c{1};
  for (int i = 1; i <= m; ++i) {
    long long s = 0;
    for (int j = 0; j < i; ++j) s += c[j] * c[i - 1 - j];
    c.push_back(s);
  }
  return c[m];
}

}  // namespace

TEST_CASE("shuffle enumeration") {
  for (int m = 0; m <= 5; ++m) CHECK(enumerate_shuffles(0, m).size() == 1);
  CHECK(enumerate_shuffles(1, 2).size() == 3);
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; k + l <= 10 && l <= 5; ++l) {
      const auto all = enumerate_shuffles(k, l);
      CHECK(static_cast<long long>(all.size()) == binom(k + l, k));
      std::set<std::string> steps;
      for (const auto& s : all) {
        const auto v = validate_shuffle(s);
        INFO(v.message);
        CHECK(v.ok);
        steps.insert(s.steps());
      }
      CHECK(steps.size() == all.size());
    }
}

TEST_CASE("shuffle from steps round trip") {
  const Shuffle s = shuffle_from_steps(2, 3, "HVHHV");
  CHECK(s.steps() == "HVHHV");
  CHECK(validate_shuffle(s).ok);
  CHECK_THROWS_AS(shuffle_from_steps(2, 3, "HHHHH"), std::invalid_argument);
  CHECK_THROWS_AS(shuffle_from_steps(2, 3, "HV"), std::invalid_argument);
}

TEST_CASE("triangulation enumeration is Catalan") {
  CHECK(enumerate_triangulations(4).size() == 5);
  for (int n = 2; n <= 8; ++n)
    CHECK(static_cast<long long>(enumerate_triangulations(n).size()) == catalan(n - 1));
}

TEST_CASE("triangulations validate and are distinct") {
  for (int n = 2; n <= 7; ++n) {
    const auto ts = enumerate_triangulations(n);
    std::set<std::vector<std::array<int, 3>>> seen;
    for (const auto& t : ts) {
      const auto v = validate_triangulation(t);
      INFO(v.message);
      CHECK(v.ok);
      seen.insert(t.triangles);
    }
    CHECK(seen.size() == ts.size());
  }
}

TEST_CASE("constrained counts are binomial") {
  for (int n = 2; n <= 8; ++n) {
    const auto ts = enumerate_triangulations(n);
    for (int k = 0; k <= n - 1; ++k)
      CHECK(static_cast<long long>(filter_constrained(ts, k).size()) == binom(n - 1, k));
  }
  // the fans are the unique extreme cases
  const auto ts5 = enumerate_triangulations(5);
  const auto fan0 = filter_constrained(ts5, 0);
  REQUIRE(fan0.size() == 1);
  for (const auto& tr : fan0.front().triangles) CHECK(tr[0] == 0);
  const auto fan_top = filter_constrained(ts5, 4);
  REQUIRE(fan_top.size() == 1);
  for (const auto& tr : fan_top.front().triangles) CHECK(tr[2] == 5);
}

TEST_CASE("base polygon") {
  const auto ts = enumerate_triangulations(2);
  REQUIRE(ts.size() == 1);
  CHECK(satisfies_constraint(ts.front(), 0));
  CHECK(satisfies_constraint(ts.front(), 1));
  for (int k : {0, 1}) {
    const Shuffle s = triangulation_to_shuffle(ts.front(), 2, k);
    CHECK(s.steps() == (k == 0 ? "H" : "V"));
    CHECK(shuffle_to_triangulation(s, 2, k) == ts.front());
  }
}

TEST_CASE("bijection round trips exhaustively") {
  for (int n = 2; n <= 7; ++n) {
    const auto ts = enumerate_triangulations(n);
    for (int k = 0; k <= n - 1; ++k) {
      const auto constrained = filter_constrained(ts, k);
      std::set<std::string> images;
      for (const auto& t : constrained) {
        const Shuffle s = triangulation_to_shuffle(t, n, k);
        CHECK(validate_shuffle(s).ok);
        CHECK(shuffle_to_triangulation(s, n, k) == t);
        images.insert(s.steps());
      }
      CHECK(images.size() == constrained.size());
      for (const auto& s : enumerate_shuffles(k, n - 1 - k)) {
        const Triangulation t = shuffle_to_triangulation(s, n, k);
        CHECK(validate_triangulation(t).ok);
        CHECK(satisfies_constraint(t, k));
        CHECK(triangulation_to_shuffle(t, n, k) == s);
      }
    }
  }
}

TEST_CASE("unconstrained triangulations are rejected") {
  // the fan from vertex 0 places a triangle inside {1..n} when k >= 1
  const Triangulation fan{4, {{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}}};
  CHECK(satisfies_constraint(fan, 0));
  CHECK_FALSE(satisfies_constraint(fan, 2));
  CHECK_THROWS_AS(triangulation_to_shuffle(fan, 4, 2), std::invalid_argument);
}

TEST_CASE("monotone paths") {
  const FinCategory sq = product(ordinal(1), ordinal(1));
  // the generic commutative square as a matrix over the square poset
  const MatSimplex M = thin_matrix(sq, 1, 1, [](int a, int b) { return a * 2 + (1 - b); });
  const Shuffle top_right = shuffle_from_steps(1, 1, "HV");
  const LabeledPath p = monotone_path(M, top_right);
  CHECK(p.objects == std::vector<int>{0, 1, 3});
  CHECK(p.arrows == std::vector<int>{thin_mor(sq, 0, 1), thin_mor(sq, 1, 3)});

  // constant matrices give identity labels
  const FinCategory d2 = ordinal(2);
  const MatSimplex constant = thin_matrix(d2, 1, 2, [](int, int) { return 1; });
  for (const auto& s : enumerate_shuffles(1, 2))
    for (int arrow : monotone_path(constant, s).arrows) CHECK(arrow == d2.identity[1]);

  // endpoints are the two corners, for every shuffle of every shape
  for (const auto& m : simplices(d2, 4)) {
    if (!m.proper()) continue;
    for (const auto& s : enumerate_shuffles(m.k, m.l)) {
      const auto path = monotone_path(m, s);
      CHECK(path.objects.front() == m.entry(0, m.l));
      CHECK(path.objects.back() == m.entry(m.k, 0));
    }
  }
}

TEST_CASE("labeled triangulation compatibility") {
  const FinCategory d1 = ordinal(1);
  const MatSimplex type1 = thin_matrix(d1, 1, 1, [](int i, int j) { return i < j ? 0 : 1; });
  CHECK(labeled_triangulation_check(type1, Triangulation{3, {{{0, 1, 3}, {1, 2, 3}}}}));
  const MatSimplex type2 = thin_matrix(d1, 2, 1, [](int i, int j) { return i < j ? 0 : 1; });
  CHECK_FALSE(labeled_triangulation_check(type2, Triangulation{4, {{{0, 1, 2}, {0, 2, 4}, {2, 3, 4}}}}));
}

TEST_CASE("matrix reconstruction") {
  const FinCategory d2 = ordinal(2);
  // a one-row matrix is its own single path
  const MatSimplex row = thin_matrix(d2, 0, 3, [](int, int b) { return b == 0 ? 2 : (b == 1 ? 1 : 0); });
  const auto shuffles = enumerate_shuffles(0, 3);
  REQUIRE(shuffles.size() == 1);
  const MatSimplex rebuilt =
      reconstruct_matrix(d2, 4, 0, {{shuffles.front(), monotone_path(row, shuffles.front())}});
  CHECK(rebuilt == row);

  // every proper matrix is rebuilt from the set of all its paths
  for (const auto& s : simplices(d2, 4)) {
    if (!s.proper()) continue;
    std::vector<std::pair<Shuffle, LabeledPath>> inputs;
    for (const auto& sh : enumerate_shuffles(s.k, s.l)) inputs.emplace_back(sh, monotone_path(s, sh));
    CHECK(reconstruct_matrix(d2, 4, s.k, inputs) == s);
  }

  // partial coverage is rejected with the offending cell named
  const MatSimplex sq = thin_matrix(d2, 1, 1, [](int a, int b) { return a + (1 - b); });
  const Shuffle vh = shuffle_from_steps(1, 1, "VH");
  try {
    reconstruct_matrix(d2, 3, 1, {{vh, monotone_path(sq, vh)}});
    FAIL("expected a coverage error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("(0,0)") != std::string::npos);
  }

  // conflicting labels are rejected
  const Shuffle hv = shuffle_from_steps(1, 1, "HV");
  LabeledPath wrong = monotone_path(sq, hv);
  wrong.objects[0] = 2;
  CHECK_THROWS_AS(reconstruct_matrix(d2, 3, 1, {{vh, monotone_path(sq, vh)}, {hv, wrong}}),
                  std::invalid_argument);
}
