#include "dusk/freecell.hpp"

#include <stdexcept>
#include <string>

namespace dusk {

const FinCategory& free_cell_category() {
  static const FinCategory c = ordinal(1);
  return c;
}

MatSimplex sigma(const SigmaIndex& idx) {
  if (idx.n < 0) throw std::invalid_argument("sigma: n must be >= 0");
  const FinCategory& D = free_cell_category();
  const int n = idx.n;
  int k, l;
  if (n % 2 == 0) {
    const int m = n / 2;
    k = idx.primed ? m : m - 1;
    l = idx.primed ? m - 1 : m;
  } else {
    k = l = n / 2;
  }
  if (idx.primed) return thin_matrix(D, k, l, [](int i, int j) { return i <= j ? 0 : 1; });
  return thin_matrix(D, k, l, [](int i, int j) { return i < j ? 0 : 1; });
}

namespace {

std::string sig_name(int n, bool primed) { return "sigma_" + std::to_string(n) + (primed ? "'" : ""); }

struct RelationChecker {
  const FinCategory& D = free_cell_category();
  ValidationResult result;

  MatSimplex sig(int n, bool primed) const { return sigma({n, primed}); }

  void expect(int n, bool primed, int i, const MatSimplex& expected, const std::string& rhs) {
    if (!result.ok) return;
    if (face(D, sig(n, primed), i) != expected)
      result = {false, "d_" + std::to_string(i) + " " + sig_name(n, primed) + " != " + rhs};
  }
};

}  // namespace

ValidationResult verify_face_relations(int m) {
  if (m < 1) throw std::invalid_argument("verify_face_relations: m must be >= 1");
  RelationChecker c;
  const FinCategory& D = free_cell_category();

  // dimension 2m
  for (int i = 0; i <= 2 * m; ++i) {
    if (i <= m - 1)
      c.expect(2 * m, false, i, degeneracy(D, c.sig(2 * m - 2, false), m - 1 + i),
               "s_" + std::to_string(m - 1 + i) + " " + sig_name(2 * m - 2, false));
    else if (i == m)
      c.expect(2 * m, false, i, c.sig(2 * m - 1, true), sig_name(2 * m - 1, true));
    else if (i <= 2 * m - 1)
      c.expect(2 * m, false, i, degeneracy(D, c.sig(2 * m - 2, false), i - m - 1),
               "s_" + std::to_string(i - m - 1) + " " + sig_name(2 * m - 2, false));
    else
      c.expect(2 * m, false, i, c.sig(2 * m - 1, false), sig_name(2 * m - 1, false));
  }
  for (int i = 0; i <= 2 * m; ++i) {
    if (i == 0)
      c.expect(2 * m, true, i, c.sig(2 * m - 1, false), sig_name(2 * m - 1, false));
    else if (i <= m - 1)
      c.expect(2 * m, true, i, degeneracy(D, c.sig(2 * m - 2, true), m - 1 + i),
               "s_" + std::to_string(m - 1 + i) + " " + sig_name(2 * m - 2, true));
    else if (i == m)
      c.expect(2 * m, true, i, c.sig(2 * m - 1, true), sig_name(2 * m - 1, true));
    else
      c.expect(2 * m, true, i, degeneracy(D, c.sig(2 * m - 2, true), i - m - 1),
               "s_" + std::to_string(i - m - 1) + " " + sig_name(2 * m - 2, true));
  }

  // dimension 2m+1
  for (int i = 0; i <= 2 * m + 1; ++i) {
    if (i <= m - 1)
      c.expect(2 * m + 1, false, i, degeneracy(D, c.sig(2 * m - 1, false), m + i),
               "s_" + std::to_string(m + i) + " " + sig_name(2 * m - 1, false));
    else if (i == m)
      c.expect(2 * m + 1, false, i, c.sig(2 * m, false), sig_name(2 * m, false));
    else if (i == m + 1)
      c.expect(2 * m + 1, false, i, c.sig(2 * m, true), sig_name(2 * m, true));
    else
      c.expect(2 * m + 1, false, i, degeneracy(D, c.sig(2 * m - 1, false), i - m - 2),
               "s_" + std::to_string(i - m - 2) + " " + sig_name(2 * m - 1, false));
  }
  for (int i = 0; i <= 2 * m + 1; ++i) {
    if (i == 0)
      c.expect(2 * m + 1, true, i, c.sig(2 * m, false), sig_name(2 * m, false));
    else if (i <= m)
      c.expect(2 * m + 1, true, i, degeneracy(D, c.sig(2 * m - 1, true), m - 1 + i),
               "s_" + std::to_string(m - 1 + i) + " " + sig_name(2 * m - 1, true));
    else if (i <= 2 * m)
      c.expect(2 * m + 1, true, i, degeneracy(D, c.sig(2 * m - 1, true), i - m - 1),
               "s_" + std::to_string(i - m - 1) + " " + sig_name(2 * m - 1, true));
    else
      c.expect(2 * m + 1, true, i, c.sig(2 * m, true), sig_name(2 * m, true));
  }

  return c.result;
}

const char* to_string(TwoFaceLabel label) {
  switch (label) {
    case TwoFaceLabel::s0s0_sigma0_prime: return "s0 s0 sigma_0'";
    case TwoFaceLabel::s0_sigma1_prime: return "s0 sigma_1'";
    case TwoFaceLabel::sigma2_prime: return "sigma_2'";
    case TwoFaceLabel::s0_sigma1: return "s0 sigma_1";
    case TwoFaceLabel::s1_sigma1_prime: return "s1 sigma_1'";
    case TwoFaceLabel::sigma2: return "sigma_2";
    case TwoFaceLabel::s1_sigma1: return "s1 sigma_1";
    case TwoFaceLabel::s0s0_sigma0: return "s0 s0 sigma_0";
  }
  return "?";
}

TwoFaceLabel two_skeleton_face(int m, int i, int j, int k) {
  if (m < 1) throw std::invalid_argument("two_skeleton_face: m must be >= 1");
  if (!(0 <= i && i < j && j < k && k <= 2 * m))
    throw std::invalid_argument("two_skeleton_face: need 0 <= i < j < k <= 2m");
  if (k <= m - 1) return TwoFaceLabel::s0s0_sigma0_prime;
  if (j < k - m) return TwoFaceLabel::s0_sigma1_prime;
  if (i < k - m && k - m <= j && j <= m - 1) return TwoFaceLabel::sigma2_prime;
  if (0 <= k - m && k - m <= i && j <= m - 1) return TwoFaceLabel::s0_sigma1;
  if (i < j - m && j - m < k - m) return TwoFaceLabel::s1_sigma1_prime;
  if (0 <= j - m && j - m <= i && i < k - m) return TwoFaceLabel::sigma2;
  if (0 <= j - m && j - m < k - m && k - m <= i && i <= m - 1) return TwoFaceLabel::s1_sigma1;
  if (m - 1 < i) return TwoFaceLabel::s0s0_sigma0;
  throw std::logic_error("two_skeleton_face: triple matches no case");
}

MatSimplex two_face_simplex(TwoFaceLabel label) {
  const FinCategory& D = free_cell_category();
  switch (label) {
    case TwoFaceLabel::s0s0_sigma0_prime: return empty_col_simplex(2);
    case TwoFaceLabel::s0_sigma1_prime: return degeneracy(D, sigma({1, true}), 0);
    case TwoFaceLabel::sigma2_prime: return sigma({2, true});
    case TwoFaceLabel::s0_sigma1: return degeneracy(D, sigma({1, false}), 0);
    case TwoFaceLabel::s1_sigma1_prime: return degeneracy(D, sigma({1, true}), 1);
    case TwoFaceLabel::sigma2: return sigma({2, false});
    case TwoFaceLabel::s1_sigma1: return degeneracy(D, sigma({1, false}), 1);
    case TwoFaceLabel::s0s0_sigma0: return empty_row_simplex(2);
  }
  throw std::logic_error("two_face_simplex: bad label");
}

}  // namespace dusk
