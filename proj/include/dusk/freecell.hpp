#pragma once

#include "dusk/matset.hpp"

namespace dusk {

/// Index of one of the two non-degenerate n-simplices of Mat([1]):
/// sigma_n (primed = false) or sigma_n' (primed = true).
struct SigmaIndex {
  int n = 0;
  bool primed = false;
};

// The category [1] these simplices live over.
const FinCategory& free_cell_category();

// Closed-form construction.  For n = 2m the shapes are (m-1, m) and
// (m, m-1); for n = 2m+1 both are (m, m); entries follow the staircase
// rules i < j (unprimed) and i <= j (primed).  sigma_0 is the empty row
// of length 0 and sigma_0' the empty column of length 0.
MatSimplex sigma(const SigmaIndex& idx);

// Checks every displayed face identity of dimension 2m and 2m+1:
// d_i sigma = the stated sigma or degenerate sigma one dimension down.
// Diagnostics name the first failing relation.
ValidationResult verify_face_relations(int m);

/// Label of a 2-dimensional face of sigma_{2m}: either one of the two
/// non-degenerate 2-simplices or a degeneracy of a lower sigma.
enum class TwoFaceLabel {
  s0s0_sigma0_prime,  // doubly degenerate at x: empty column of length 2
  s0_sigma1_prime,    // column (0;0)
  sigma2_prime,       // column (0;1)
  s0_sigma1,          // column (1;1)
  s1_sigma1_prime,    // row (0,0)
  sigma2,             // row (0,1)
  s1_sigma1,          // row (1,1)
  s0s0_sigma0,        // doubly degenerate at y: empty row of length 2
};

const char* to_string(TwoFaceLabel label);

// The eight-case classification of sigma_{2m} restricted to a vertex
// triple i < j < k.  Throws on an out-of-range triple.
TwoFaceLabel two_skeleton_face(int m, int i, int j, int k);

// The 2-simplex each label denotes, built through the matset operations.
MatSimplex two_face_simplex(TwoFaceLabel label);

}  // namespace dusk
