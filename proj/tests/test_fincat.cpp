#include <doctest.h>

#include <algorithm>

#include "dusk/fincat.hpp"
#include "test_helpers.hpp"

using namespace dusk;

TEST_CASE("ordinals") {
  CHECK(ordinal(-1).num_objects == 0);
  CHECK(ordinal(-1).num_morphisms() == 0);
  CHECK(ordinal(0).num_objects == 1);
  CHECK(ordinal(0).num_morphisms() == 1);
  CHECK(ordinal(2).num_objects == 3);
  CHECK(ordinal(2).num_morphisms() == 6);
  CHECK_THROWS_AS(ordinal(-2), std::invalid_argument);
  for (int n = -1; n <= 4; ++n) CHECK(validate_category(ordinal(n)).ok);
}

TEST_CASE("test categories validate") {
  CHECK(validate_category(testing::parallel_pair()).ok);
  CHECK(validate_category(testing::cyclic2()).ok);
  CHECK(validate_category(product(ordinal(1), ordinal(1))).ok);
  CHECK(validate_category(opposite(testing::parallel_pair())).ok);
  CHECK(validate_category(product(ordinal(2), opposite(ordinal(1)))).ok);
}

TEST_CASE("validate_category catches a broken table") {
  FinCategory c = ordinal(2);
  c.compose_table[static_cast<size_t>(1) * c.num_morphisms() + 0] = c.identity[0];
  const auto v = validate_category(c);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.message.empty());
}

TEST_CASE("opposite is an involution on the nose") {
  for (const FinCategory& c :
       {ordinal(0), ordinal(3), product(ordinal(1), ordinal(1)), testing::parallel_pair()}) {
    CHECK(opposite(opposite(c)) == c);
    CHECK(opposite(c).num_morphisms() == c.num_morphisms());
  }
  CHECK(opposite(ordinal(0)) == ordinal(0));
}

TEST_CASE("products") {
  CHECK(product(ordinal(-1), ordinal(3)).num_objects == 0);
  const FinCategory grid = product(ordinal(1), opposite(ordinal(1)));
  CHECK(grid.num_objects == 4);
  CHECK(grid.num_morphisms() == 9);
  CHECK(validate_category(grid).ok);
  // terminal unit acts as the identity with this object indexing
  CHECK(product(ordinal(0), ordinal(2)) == ordinal(2));
}

TEST_CASE("functor enumeration counts") {
  const CatPtr d1 = make_cat(ordinal(1));
  CHECK(enumerate_functors(make_cat(ordinal(-1)), d1).size() == 1);
  CHECK(enumerate_functors(d1, d1).size() == 3);
  const CatPtr grid = make_cat(product(ordinal(1), opposite(ordinal(1))));
  CHECK(enumerate_functors(grid, d1).size() == 6);
  for (int m = 0; m <= 6; ++m)
    CHECK(enumerate_functors(make_cat(ordinal(m)), d1).size() == static_cast<size_t>(m) + 2);
  // non-thin target: the arrow of [1] can land on either parallel arrow
  CHECK(enumerate_functors(d1, make_cat(testing::parallel_pair())).size() == 4);
  CHECK(enumerate_functors(make_cat(testing::cyclic2()), make_cat(testing::cyclic2())).size() == 2);
}

TEST_CASE("enumerated functors validate and come out ordered") {
  const CatPtr grid = make_cat(product(ordinal(1), opposite(ordinal(1))));
  const CatPtr d2 = make_cat(ordinal(2));
  const auto fs = enumerate_functors(grid, d2);
  CHECK(fs.size() == 20);  // monotone 2x2 grids over the 3-chain
  for (const auto& f : fs) CHECK(validate_functor(f).ok);
  for (size_t i = 0; i + 1 < fs.size(); ++i) {
    const auto key = [](const FunctorData& f) { return std::pair(f.obj_map, f.mor_map); };
    CHECK(key(fs[i]) < key(fs[i + 1]));
  }
}

TEST_CASE("validate_functor") {
  const CatPtr d2 = make_cat(ordinal(2));
  FunctorData ident{d2, d2, {}, {}};
  for (int o = 0; o < d2->num_objects; ++o) ident.obj_map.push_back(o);
  for (int m = 0; m < d2->num_morphisms(); ++m) ident.mor_map.push_back(m);
  CHECK(validate_functor(ident).ok);

  FunctorData constant{d2, d2, std::vector<int>(3, 1), std::vector<int>(6, d2->identity[1])};
  CHECK(validate_functor(constant).ok);

  // break one composite in a 3-object poset
  FunctorData broken = ident;
  broken.mor_map[thin_mor(*d2, 0, 2)] = d2->identity[0];
  const auto v = validate_functor(broken);
  CHECK_FALSE(v.ok);
  CHECK(v.message.find("not preserved") != std::string::npos);
}
