#pragma once

#include <array>
#include <variant>
#include <vector>

#include "dusk/matset.hpp"

namespace dusk {

/// A strict finite 2-category as dense index tables.
///
/// 1-cells have src/tgt objects and compose through hcomp1 (g, f) -> g∘f.
/// 2-cells live between parallel 1-cells (cell2_src/cell2_tgt are 1-cell
/// indices); vcomp is vertical composition within a hom-category and
/// hcomp2 horizontal composition across adjacent homs.  Tables hold -1
/// where the composition is undefined.
struct TwoCategory {
  int num_objects = 0;
  std::vector<int> cell1_src, cell1_tgt;
  std::vector<int> id1;  // object -> identity 1-cell
  std::vector<int> hcomp1;
  std::vector<int> cell2_src, cell2_tgt;
  std::vector<int> id2;  // 1-cell -> identity 2-cell
  std::vector<int> vcomp, hcomp2;

  int num_one_cells() const { return static_cast<int>(cell1_src.size()); }
  int num_two_cells() const { return static_cast<int>(cell2_src.size()); }

  int compose1(int g, int f) const;   // g∘f, throws when undefined
  int vcompose(int b, int a) const;   // b after a
  int hcompose(int b, int a) const;   // b beside a (a's target object = b's source)
  int whisker_left(int g, int a) const { return hcompose(id2[g], a); }   // g ∘ α
  int whisker_right(int a, int f) const { return hcompose(a, id2[f]); }  // α ∘ f

  bool operator==(const TwoCategory&) const = default;
};

// Exhaustive check of all structure laws: hom-categories under vcomp,
// unit laws, associativity of both compositions, functoriality of
// hcomp2 and the interchange law.
ValidationResult validate_two_category(const TwoCategory& C);

/// The (r+1)-point suspension of categories D_1..D_r: objects 0..r,
/// hom(i,j) = D_{i+1} x ... x D_j for i < j (the terminal category on
/// the diagonal, empty below), composition by tuple concatenation.
/// Keeps the hom categories and index offsets so that cells can be
/// translated between the flat tables and per-hom local indices.
struct MultiSuspension {
  TwoCategory cat;
  std::vector<FinCategory> factors;  // D_1..D_r
  std::vector<FinCategory> homs;     // hom(i,j) for i <= j, row-major over pairs
  std::vector<int> cell1_offset;     // per hom pair, into the 1-cell index space
  std::vector<int> cell2_offset;

  int r() const { return static_cast<int>(factors.size()); }
  int pair_index(int i, int j) const;
  const FinCategory& hom(int i, int j) const { return homs[pair_index(i, j)]; }
  int one_cell(int i, int j, int local_obj) const { return cell1_offset[pair_index(i, j)] + local_obj; }
  int two_cell(int i, int j, int local_mor) const { return cell2_offset[pair_index(i, j)] + local_mor; }
  // inverse lookups; return the hom pair through the out-parameters
  int local_of_one_cell(int cell, int* i, int* j) const;
  int local_of_two_cell(int cell, int* i, int* j) const;
};

MultiSuspension multi_suspension(const std::vector<FinCategory>& Ds);

// Two-point case: objects x = 0, y = 1, hom(x,y) = D.
MultiSuspension suspension(const FinCategory& D);

/// Simplices of the Duskin nerve in dimension <= 4.
struct ObjectSimplexD {
  int object;
  bool operator==(const ObjectSimplexD&) const = default;
};
struct OneCellSimplexD {
  int cell;
  bool operator==(const OneCellSimplexD&) const = default;
};
// 2-simplex: 1-cells a (edge 01), b (edge 12), c (edge 02) and a 2-cell
// theta: c => b∘a.
struct Triangle {
  int a, b, c, theta;
  bool operator==(const Triangle&) const = default;
  auto operator<=>(const Triangle&) const = default;
};
// 3-simplex: the four triangle faces, face[i] = d_i, satisfying the
// pasting relation.
struct Tetrahedron {
  std::array<Triangle, 4> face;
  bool operator==(const Tetrahedron&) const = default;
  auto operator<=>(const Tetrahedron&) const = default;
};
// 4-simplex: five compatible tetrahedra (3-coskeletality adds no data).
struct FourSimplex {
  std::array<Tetrahedron, 5> face;
  bool operator==(const FourSimplex&) const = default;
};

struct DuskinSimplex {
  using Data = std::variant<ObjectSimplexD, OneCellSimplexD, Triangle, Tetrahedron, FourSimplex>;
  Data data;
  int dim() const { return static_cast<int>(data.index()); }
  bool operator==(const DuskinSimplex&) const = default;
};

enum class PastingStatus { ok, incompatible_boundary, relation_fails };

struct PastingCheck {
  PastingStatus status = PastingStatus::ok;
  std::string message;
  bool holds() const { return status == PastingStatus::ok; }
};

// face[i] of the would-be 3-simplex; boundary compatibility is reported
// distinctly from failure of the pasting relation itself.
PastingCheck pasting_relation(const TwoCategory& C, const std::array<Triangle, 4>& face);

// All n-simplices of the Duskin nerve, n <= 4, by direct enumeration
// (n <= 2), pasting-relation scan over boundary-compatible triangle
// quadruples (n = 3), and compatible-tuple assembly keyed on shared
// faces (n = 4).  Deterministic order.  Rejects n > 4.
std::vector<DuskinSimplex> nerve_simplices(const TwoCategory& C, int n);

// d_i of a nerve simplex, 1 <= dim <= 4.
DuskinSimplex duskin_face(const TwoCategory& C, const DuskinSimplex& s, int i);

// The isomorphism between D-valued matrices and nerve simplices of the
// two-point suspension, in dimension <= 3, together with its inverse.
DuskinSimplex phi(const MultiSuspension& S, const MatSimplex& s);
MatSimplex phi_inverse(const MultiSuspension& S, const DuskinSimplex& t);

// Collapse of an (r+1)-point suspension onto its two-point factor
// (1-based): objects below the factor go to x, those at or above it to
// y, and a cell keeps only its component in that factor.  `target` must
// be suspension(S.factors[factor-1]).
DuskinSimplex collapse_to_factor(const MultiSuspension& S, int factor, const MultiSuspension& target,
                                 const DuskinSimplex& t);

}  // namespace dusk
