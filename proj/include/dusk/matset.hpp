#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "dusk/fincat.hpp"

namespace dusk {

/// An n-simplex of Mat(D): a D-valued matrix of shape (k, l) with
/// k + l = n - 1 and k, l >= -1.
///
/// When k, l >= 0 the matrix is a functor [k]x[l]^op -> D stored as its
/// value grids: entry(a, b) is the object at row a, column b (the column
/// index b decreases along the direction of the horizontal arrows, so a
/// row reads entry(a,l) -> ... -> entry(a,0)); vert(a, b) is the arrow
/// entry(a,b) -> entry(a+1,b) and horz(a, b) the arrow
/// entry(a,b+1) -> entry(a,b).  Unit squares must commute in D.
///
/// k == -1 is the empty row of length l = n, l == -1 the empty column of
/// length k = n; these carry no data but are distinct simplices.
struct MatSimplex {
  int k = -1;
  int l = -1;
  std::vector<int> entries;  // (k+1)*(l+1) objects, row-major
  std::vector<int> vert;     // k*(l+1) arrows
  std::vector<int> horz;     // (k+1)*l arrows

  int dim() const { return k + l + 1; }
  bool is_empty_row() const { return k == -1; }
  bool is_empty_col() const { return l == -1; }
  bool proper() const { return k >= 0 && l >= 0; }

  int entry(int a, int b) const { return entries[static_cast<size_t>(a) * (l + 1) + b]; }
  int vert_arrow(int a, int b) const { return vert[static_cast<size_t>(a) * (l + 1) + b]; }
  int horz_arrow(int a, int b) const { return horz[static_cast<size_t>(a) * l + b]; }

  int& entry(int a, int b) { return entries[static_cast<size_t>(a) * (l + 1) + b]; }
  int& vert_arrow(int a, int b) { return vert[static_cast<size_t>(a) * (l + 1) + b]; }
  int& horz_arrow(int a, int b) { return horz[static_cast<size_t>(a) * l + b]; }

  bool operator==(const MatSimplex&) const = default;
  auto operator<=>(const MatSimplex&) const = default;
};

MatSimplex empty_row_simplex(int n);
MatSimplex empty_col_simplex(int n);

// The shape (0,0) simplex on a single object of D.
MatSimplex object_simplex(const FinCategory& D, int obj);

// Grid validity: array shapes, arrow endpoints, commuting unit squares.
ValidationResult validate_matrix(const FinCategory& D, const MatSimplex& s);

// The functor [k]x[l]^op -> D underlying a proper matrix; its source is
// product(ordinal(k), opposite(ordinal(l))) with object (a,b) indexed
// a*(l+1)+b.  Also defined for k = -1 or l = -1 (empty source).
FunctorData to_functor(const FinCategory& D, const MatSimplex& s);
MatSimplex from_functor(int k, int l, const FunctorData& f);

// type of the simplex: k (-1 for the empty row, n for the empty column)
int type_of(const MatSimplex& s);

// d_i: removes row i (0 <= i <= k) or column i-(k+1) (k+1 <= i <= n),
// composing the arrows across the removed line.
MatSimplex face(const FinCategory& D, const MatSimplex& s, int i);

// s_i: doubles row i or column i-(k+1), inserting identity arrows.
MatSimplex degeneracy(const FinCategory& D, const MatSimplex& s, int i);

// All n-simplices: empty row, then the proper shapes by increasing k in
// functor enumeration order, then the empty column.
std::vector<MatSimplex> simplices(const FinCategory& D, int n);

// Streaming form, one (k, l) block at a time in the same order.
void for_each_simplex(const FinCategory& D, int n, const std::function<void(const MatSimplex&)>& fn);

// Restriction along a strictly increasing vertex inclusion, as the
// composite of the complementary faces.
MatSimplex restrict_to_vertices(const FinCategory& D, const MatSimplex& s, const std::vector<int>& verts);

// Builds a proper matrix over a thin category from an entry rule; the
// connecting arrows are the unique ones of D.
MatSimplex thin_matrix(const FinCategory& D, int k, int l, const std::function<int(int, int)>& entry_at);

// True iff no two consecutive rows and no two consecutive columns
// coincide.  Two consecutive lines coincide when their entries and
// in-line arrows agree and the arrows connecting them are identities;
// equivalently the simplex is the degeneracy at that index.  Empty
// rows/columns of length >= 1 are degenerate, of length 0 not.
bool is_nondegenerate(const FinCategory& D, const MatSimplex& s);

// Unique filler of a compatible sphere of (n-1)-simplices, n >= 4.
// boundary[i] plays the role of the i-th face; the relations
// d_i t_j = d_{j-1} t_i (i < j) are validated first, the type pattern
// must match some x_k, and every admissible witness face must give the
// same entry or arrow (cross-asserted).  Throws std::invalid_argument
// on bad input.
MatSimplex coskeletal_fill(const FinCategory& D, const std::vector<MatSimplex>& boundary);

}  // namespace dusk
