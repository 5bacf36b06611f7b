#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace dusk {

/// A finite 1-category stored as dense index tables.
///
/// Objects are 0..num_objects-1, morphisms 0..num_morphisms()-1.
/// compose_table[g * M + f] holds the index of g∘f when tgt(f) == src(g)
/// and -1 otherwise.  Equality of categories is structural (same tables).
struct FinCategory {
  int num_objects = 0;
  std::vector<int> mor_src;
  std::vector<int> mor_tgt;
  std::vector<int> identity;       // object -> identity morphism
  std::vector<int> compose_table;  // (g, f) -> g∘f, or -1

  int num_morphisms() const { return static_cast<int>(mor_src.size()); }

  bool composable(int g, int f) const { return mor_tgt[f] == mor_src[g]; }

  // g∘f; throws std::invalid_argument on non-composable pairs.
  int compose(int g, int f) const;

  bool operator==(const FinCategory&) const = default;
};

using CatPtr = std::shared_ptr<const FinCategory>;

inline CatPtr make_cat(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

struct ValidationResult {
  bool ok = true;
  std::string message;  // names the first violated law when !ok
};

// Checks table shapes, identity laws, totality of composition on
// composable pairs, and associativity by exhaustive triple scan.
ValidationResult validate_category(const FinCategory& c);

// The poset 0 < 1 < ... < n.  ordinal(-1) is the empty category,
// ordinal(0) the terminal one.  Rejects n < -1.
FinCategory ordinal(int n);

// Same objects and morphisms with src/tgt swapped and composition
// transposed; an involution on the nose.
FinCategory opposite(const FinCategory& c);

// Objects are pairs o1*|O2|+o2, morphisms pairs m1*|M2|+m2,
// composition componentwise.
FinCategory product(const FinCategory& c, const FinCategory& d);

// Morphisms a -> b in index order.
std::vector<int> hom_set(const FinCategory& c, int a, int b);

// The unique morphism a -> b of a thin category; throws if the hom-set
// does not have exactly one element.
int thin_mor(const FinCategory& c, int a, int b);

/// A functor between finite categories, given by its value tables.
struct FunctorData {
  CatPtr source;
  CatPtr target;
  std::vector<int> obj_map;  // source object -> target object
  std::vector<int> mor_map;  // source morphism -> target morphism
};

// True iff obj_map/mor_map preserve src/tgt, identities and every
// composite; diagnostics name the first offending morphism or pair.
ValidationResult validate_functor(const FunctorData& f);

// Every functor source -> target exactly once, ordered lexicographically
// by obj_map then mor_map.  Empty source yields exactly one functor.
std::vector<FunctorData> enumerate_functors(const CatPtr& source, const CatPtr& target);

// Streaming form of the same enumeration, for callers that must not
// hold the whole list.
void for_each_functor(const CatPtr& source, const CatPtr& target,
                      const std::function<void(const FunctorData&)>& fn);

}  // namespace dusk
