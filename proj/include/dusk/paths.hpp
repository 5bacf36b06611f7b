#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dusk/matset.hpp"

namespace dusk {

/// A shuffle of the (k, l) grid: a functor [k+l] -> [k]x[l]^op with the
/// ordinate summation property alpha(i) + l - beta(i) = i.  Step i is
/// vertical when alpha increments and horizontal when beta decrements.
struct Shuffle {
  int k = 0, l = 0;
  std::vector<int> alpha, beta;  // k+l+1 values each

  int length() const { return k + l; }
  bool step_vertical(int i) const { return alpha[i + 1] == alpha[i] + 1; }
  std::string steps() const;  // over {H, V}

  bool operator==(const Shuffle&) const = default;
};

Shuffle shuffle_from_steps(int k, int l, const std::string& steps);
ValidationResult validate_shuffle(const Shuffle& s);

// All binomial(k+l, k) shuffles, in lexicographic step order with H < V.
std::vector<Shuffle> enumerate_shuffles(int k, int l);

/// A triangulation of the (n+1)-gon with vertices 0..n, stored as its
/// n-1 triangles (each a sorted vertex triple), sorted.
struct Triangulation {
  int n = 0;
  std::vector<std::array<int, 3>> triangles;

  bool operator==(const Triangulation&) const = default;
};

ValidationResult validate_triangulation(const Triangulation& t);

// All triangulations, C_{n-1} of them, in a deterministic order.
std::vector<Triangulation> enumerate_triangulations(int n);

// No triangle entirely inside {0..k} nor inside {k+1..n}.
bool satisfies_constraint(const Triangulation& t, int k);
std::vector<Triangulation> filter_constrained(const std::vector<Triangulation>& ts, int k);

// The inductive bijection: peel the triangle on edge (0,n); the triangle
// (0,n-1,n) contributes a horizontal first step, (0,1,n) a vertical
// one, and the recursion continues on the remaining n-gon (base case:
// the triangle (0,1,2) is the last step).  Equivalently a triangle
// contributes a vertical step iff its middle vertex is <= k.
Shuffle triangulation_to_shuffle(const Triangulation& t, int n, int k);
Triangulation shuffle_to_triangulation(const Shuffle& s, int n, int k);

/// The restriction of a matrix along a shuffle: the objects visited and
/// the connecting arrows.
struct LabeledPath {
  std::vector<int> objects;  // n of them
  std::vector<int> arrows;   // n-1 of them

  bool operator==(const LabeledPath&) const = default;
};

LabeledPath monotone_path(const MatSimplex& M, const Shuffle& s);

// True iff the triangulation is compatible with sigma's type, i.e. no
// restricted triangle is a degeneracy of a point.
bool labeled_triangulation_check(const MatSimplex& sigma, const Triangulation& t);

// Rebuilds the unique matrix restricting to all given paths.  Requires
// the shuffles to jointly cover every cell and every unit arrow of the
// grid, with consistent labels; throws std::invalid_argument naming the
// offending cell otherwise.
MatSimplex reconstruct_matrix(const FinCategory& D, int n, int k,
                              const std::vector<std::pair<Shuffle, LabeledPath>>& paths);

}  // namespace dusk
