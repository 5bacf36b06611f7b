#pragma once

#include <vector>

#include "dusk/matset.hpp"

namespace dusk {

/// An n-simplex of the nerve of an (r+1)-point suspension: one matrix
/// per factor, all of dimension n, with nondecreasing types.
struct TupleSimplex {
  int n = 0;
  std::vector<MatSimplex> parts;  // part i over Ds[i]

  bool operator==(const TupleSimplex&) const = default;
  auto operator<=>(const TupleSimplex&) const = default;
};

ValidationResult validate_tuple(const std::vector<FinCategory>& Ds, const TupleSimplex& t);

// All tuples of Mat_n(D_i) simplices with type(part_1) <= ... <=
// type(part_r), ordered by the type vector then componentwise.
std::vector<TupleSimplex> tuple_simplices(const std::vector<FinCategory>& Ds, int n);

// The same count from per-type simplex counts, without materializing.
long long tuple_count(const std::vector<FinCategory>& Ds, int n);

// Componentwise face/degeneracy; type monotonicity is preserved and
// asserted.
TupleSimplex tuple_face(const std::vector<FinCategory>& Ds, const TupleSimplex& t, int i);
TupleSimplex tuple_degeneracy(const std::vector<FinCategory>& Ds, const TupleSimplex& t, int i);

// [ordinal(n_1), ..., ordinal(n_r)], checked against r.
std::vector<FinCategory> theta2_object(int r, const std::vector<int>& widths);

// Degeneracy-retraction test: t is degenerate iff
// tuple_degeneracy(tuple_face(t, i), i) == t for some i.
bool tuple_nondegenerate(const std::vector<FinCategory>& Ds, const TupleSimplex& t);

long long count_nondegenerate(const std::vector<FinCategory>& Ds, int n);

}  // namespace dusk
