#include "dusk/matset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dusk {

MatSimplex empty_row_simplex(int n) {
  if (n < 0) throw std::invalid_argument("empty_row_simplex: n must be >= 0");
  MatSimplex s;
  s.k = -1;
  s.l = n;
  return s;
}

MatSimplex empty_col_simplex(int n) {
  if (n < 0) throw std::invalid_argument("empty_col_simplex: n must be >= 0");
  MatSimplex s;
  s.k = n;
  s.l = -1;
  return s;
}

MatSimplex object_simplex(const FinCategory& D, int obj) {
  if (obj < 0 || obj >= D.num_objects) throw std::invalid_argument("object_simplex: object out of range");
  MatSimplex s;
  s.k = 0;
  s.l = 0;
  s.entries = {obj};
  return s;
}

ValidationResult validate_matrix(const FinCategory& D, const MatSimplex& s) {
  auto fail = [](const std::string& m) { return ValidationResult{false, m}; };
  if (s.k < -1 || s.l < -1) return fail("shape indices below -1");
  if (s.k == -1 || s.l == -1) {
    if (s.k == -1 && s.l == -1) return fail("k and l cannot both be -1");
    if (!s.entries.empty() || !s.vert.empty() || !s.horz.empty())
      return fail("empty row/column must carry no data");
    return {};
  }
  const size_t K = s.k, L = s.l;
  if (s.entries.size() != (K + 1) * (L + 1)) return fail("entry grid size mismatch");
  if (s.vert.size() != K * (L + 1)) return fail("vertical arrow grid size mismatch");
  if (s.horz.size() != (K + 1) * L) return fail("horizontal arrow grid size mismatch");
  for (int e : s.entries)
    if (e < 0 || e >= D.num_objects) return fail("entry object out of range");
  for (int a = 0; a < s.k; ++a)
    for (int b = 0; b <= s.l; ++b) {
      const int m = s.vert_arrow(a, b);
      if (m < 0 || m >= D.num_morphisms()) return fail("vertical arrow out of range");
      if (D.mor_src[m] != s.entry(a, b) || D.mor_tgt[m] != s.entry(a + 1, b))
        return fail("vertical arrow (" + std::to_string(a) + "," + std::to_string(b) + ") has wrong endpoints");
    }
  for (int a = 0; a <= s.k; ++a)
    for (int b = 0; b < s.l; ++b) {
      const int m = s.horz_arrow(a, b);
      if (m < 0 || m >= D.num_morphisms()) return fail("horizontal arrow out of range");
      if (D.mor_src[m] != s.entry(a, b + 1) || D.mor_tgt[m] != s.entry(a, b))
        return fail("horizontal arrow (" + std::to_string(a) + "," + std::to_string(b) + ") has wrong endpoints");
    }
  for (int a = 0; a < s.k; ++a)
    for (int b = 0; b < s.l; ++b) {
      const int down_right = D.compose(s.vert_arrow(a, b), s.horz_arrow(a, b));
      const int right_down = D.compose(s.horz_arrow(a + 1, b), s.vert_arrow(a, b + 1));
      if (down_right != right_down)
        return fail("square at (" + std::to_string(a) + "," + std::to_string(b) + ") does not commute");
    }
  return {};
}

FunctorData to_functor(const FinCategory& D, const MatSimplex& s) {
  FunctorData f;
  f.source = make_cat(product(ordinal(s.k), opposite(ordinal(s.l))));
  f.target = make_cat(D);
  if (!s.proper()) return f;  // empty source, empty maps
  const FinCategory& P = *f.source;
  f.obj_map = s.entries;
  f.mor_map.resize(P.num_morphisms());
  const int L1 = s.l + 1;
  for (int m = 0; m < P.num_morphisms(); ++m) {
    const int a = P.mor_src[m] / L1, b = P.mor_src[m] % L1;
    const int a2 = P.mor_tgt[m] / L1, b2 = P.mor_tgt[m] % L1;
    // a <= a2, b >= b2: compose down column b, then right along row a2
    int arrow = D.identity[s.entry(a, b)];
    for (int i = a; i < a2; ++i) arrow = D.compose(s.vert_arrow(i, b), arrow);
    for (int j = b; j > b2; --j) arrow = D.compose(s.horz_arrow(a2, j - 1), arrow);
    f.mor_map[m] = arrow;
  }
  return f;
}

MatSimplex from_functor(int k, int l, const FunctorData& f) {
  MatSimplex s;
  s.k = k;
  s.l = l;
  if (k == -1 || l == -1) {
    if (k == -1 && l == -1) throw std::invalid_argument("from_functor: invalid shape");
    return s;
  }
  const FinCategory& P = *f.source;
  const int L1 = l + 1;
  if (P.num_objects != (k + 1) * L1) throw std::invalid_argument("from_functor: source shape mismatch");
  s.entries = f.obj_map;
  s.vert.resize(static_cast<size_t>(k) * L1);
  s.horz.resize(static_cast<size_t>(k + 1) * l);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b <= l; ++b)
      s.vert_arrow(a, b) = f.mor_map[thin_mor(P, a * L1 + b, (a + 1) * L1 + b)];
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b < l; ++b)
      s.horz_arrow(a, b) = f.mor_map[thin_mor(P, a * L1 + b + 1, a * L1 + b)];
  return s;
}

int type_of(const MatSimplex& s) { return s.k; }

namespace {

void check_face_index(const MatSimplex& s, int i, const char* what) {
  const int n = s.dim();
  if (i < 0 || i > n) throw std::invalid_argument(std::string(what) + ": index out of range");
}

MatSimplex remove_row(const FinCategory& D, const MatSimplex& s, int i) {
  MatSimplex r;
  r.k = s.k - 1;
  r.l = s.l;
  if (r.k == -1) return empty_row_simplex(s.l);
  const int L1 = s.l + 1;
  r.entries.resize(static_cast<size_t>(r.k + 1) * L1);
  r.vert.resize(static_cast<size_t>(r.k) * L1);
  r.horz.resize(static_cast<size_t>(r.k + 1) * s.l);
  auto old_row = [&](int a) { return a < i ? a : a + 1; };
  for (int a = 0; a <= r.k; ++a)
    for (int b = 0; b <= r.l; ++b) r.entry(a, b) = s.entry(old_row(a), b);
  for (int a = 0; a <= r.k; ++a)
    for (int b = 0; b < r.l; ++b) r.horz_arrow(a, b) = s.horz_arrow(old_row(a), b);
  for (int a = 0; a < r.k; ++a)
    for (int b = 0; b <= r.l; ++b) {
      if (a + 1 < i)
        r.vert_arrow(a, b) = s.vert_arrow(a, b);
      else if (a >= i)
        r.vert_arrow(a, b) = s.vert_arrow(a + 1, b);
      else  // the two arrows across the removed row compose
        r.vert_arrow(a, b) = D.compose(s.vert_arrow(i, b), s.vert_arrow(i - 1, b));
    }
  return r;
}

MatSimplex remove_col(const FinCategory& D, const MatSimplex& s, int j) {
  MatSimplex r;
  r.k = s.k;
  r.l = s.l - 1;
  if (r.l == -1) return empty_col_simplex(s.k);
  const int L1 = r.l + 1;
  r.entries.resize(static_cast<size_t>(r.k + 1) * L1);
  r.vert.resize(static_cast<size_t>(r.k) * L1);
  r.horz.resize(static_cast<size_t>(r.k + 1) * r.l);
  auto old_col = [&](int b) { return b < j ? b : b + 1; };
  for (int a = 0; a <= r.k; ++a)
    for (int b = 0; b <= r.l; ++b) r.entry(a, b) = s.entry(a, old_col(b));
  for (int a = 0; a < r.k; ++a)
    for (int b = 0; b <= r.l; ++b) r.vert_arrow(a, b) = s.vert_arrow(a, old_col(b));
  for (int a = 0; a <= r.k; ++a)
    for (int b = 0; b < r.l; ++b) {
      if (b + 1 < j)
        r.horz_arrow(a, b) = s.horz_arrow(a, b);
      else if (b >= j)
        r.horz_arrow(a, b) = s.horz_arrow(a, b + 1);
      else  // b+1 == j: arrows on both sides of the removed column compose
        r.horz_arrow(a, b) = D.compose(s.horz_arrow(a, j - 1), s.horz_arrow(a, j));
    }
  return r;
}

MatSimplex double_row(const FinCategory& D, const MatSimplex& s, int i) {
  MatSimplex r;
  r.k = s.k + 1;
  r.l = s.l;
  const int L1 = s.l + 1;
  r.entries.resize(static_cast<size_t>(r.k + 1) * L1);
  r.vert.resize(static_cast<size_t>(r.k) * L1);
  r.horz.resize(static_cast<size_t>(r.k + 1) * s.l);
  auto old_row = [&](int a) { return a <= i ? a : a - 1; };
  for (int a = 0; a <= r.k; ++a)
    for (int b = 0; b <= r.l; ++b) r.entry(a, b) = s.entry(old_row(a), b);
  for (int a = 0; a <= r.k; ++a)
    for (int b = 0; b < r.l; ++b) r.horz_arrow(a, b) = s.horz_arrow(old_row(a), b);
  for (int a = 0; a < r.k; ++a)
    for (int b = 0; b <= r.l; ++b) {
      if (a < i)
        r.vert_arrow(a, b) = s.vert_arrow(a, b);
      else if (a == i)
        r.vert_arrow(a, b) = D.identity[s.entry(i, b)];
      else
        r.vert_arrow(a, b) = s.vert_arrow(a - 1, b);
    }
  return r;
}

MatSimplex double_col(const FinCategory& D, const MatSimplex& s, int j) {
  MatSimplex r;
  r.k = s.k;
  r.l = s.l + 1;
  const int L1 = r.l + 1;
  r.entries.resize(static_cast<size_t>(r.k + 1) * L1);
  r.vert.resize(static_cast<size_t>(r.k) * L1);
  r.horz.resize(static_cast<size_t>(r.k + 1) * r.l);
  auto old_col = [&](int b) { return b <= j ? b : b - 1; };
  for (int a = 0; a <= r.k; ++a)
    for (int b = 0; b <= r.l; ++b) r.entry(a, b) = s.entry(a, old_col(b));
  for (int a = 0; a < r.k; ++a)
    for (int b = 0; b <= r.l; ++b) r.vert_arrow(a, b) = s.vert_arrow(a, old_col(b));
  for (int a = 0; a <= r.k; ++a)
    for (int b = 0; b < r.l; ++b) {
      if (b < j)
        r.horz_arrow(a, b) = s.horz_arrow(a, b);
      else if (b == j)
        r.horz_arrow(a, b) = D.identity[s.entry(a, j)];
      else
        r.horz_arrow(a, b) = s.horz_arrow(a, b - 1);
    }
  return r;
}

}  // namespace

MatSimplex face(const FinCategory& D, const MatSimplex& s, int i) {
  const int n = s.dim();
  if (n < 1) throw std::invalid_argument("face: simplex has dimension 0");
  check_face_index(s, i, "face");
  if (s.is_empty_row()) return empty_row_simplex(n - 1);
  if (s.is_empty_col()) return empty_col_simplex(n - 1);
  if (i <= s.k) return remove_row(D, s, i);
  return remove_col(D, s, i - (s.k + 1));
}

MatSimplex degeneracy(const FinCategory& D, const MatSimplex& s, int i) {
  check_face_index(s, i, "degeneracy");
  const int n = s.dim();
  if (s.is_empty_row()) return empty_row_simplex(n + 1);
  if (s.is_empty_col()) return empty_col_simplex(n + 1);
  if (i <= s.k) return double_row(D, s, i);
  return double_col(D, s, i - (s.k + 1));
}

void for_each_simplex(const FinCategory& D, int n, const std::function<void(const MatSimplex&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_simplex: n must be >= 0");
  fn(empty_row_simplex(n));
  const CatPtr target = make_cat(D);
  for (int k = 0; k <= n - 1; ++k) {
    const int l = n - 1 - k;
    const CatPtr source = make_cat(product(ordinal(k), opposite(ordinal(l))));
    // unit-arrow morphism indices of the grid, resolved once per shape
    const int L1 = l + 1;
    std::vector<int> vert_idx(static_cast<size_t>(k) * L1), horz_idx(static_cast<size_t>(k + 1) * l);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b <= l; ++b)
        vert_idx[static_cast<size_t>(a) * L1 + b] = thin_mor(*source, a * L1 + b, (a + 1) * L1 + b);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b < l; ++b)
        horz_idx[static_cast<size_t>(a) * l + b] = thin_mor(*source, a * L1 + b + 1, a * L1 + b);
    MatSimplex s;
    s.k = k;
    s.l = l;
    s.vert.resize(vert_idx.size());
    s.horz.resize(horz_idx.size());
    for_each_functor(source, target, [&](const FunctorData& f) {
      s.entries = f.obj_map;
      for (size_t i = 0; i < vert_idx.size(); ++i) s.vert[i] = f.mor_map[vert_idx[i]];
      for (size_t i = 0; i < horz_idx.size(); ++i) s.horz[i] = f.mor_map[horz_idx[i]];
      fn(s);
    });
  }
  fn(empty_col_simplex(n));
}

std::vector<MatSimplex> simplices(const FinCategory& D, int n) {
  std::vector<MatSimplex> out;
  for_each_simplex(D, n, [&](const MatSimplex& s) { out.push_back(s); });
  return out;
}

MatSimplex restrict_to_vertices(const FinCategory& D, const MatSimplex& s, const std::vector<int>& verts) {
  const int n = s.dim();
  for (size_t t = 0; t < verts.size(); ++t) {
    if (verts[t] < 0 || verts[t] > n) throw std::invalid_argument("restrict_to_vertices: vertex out of range");
    if (t + 1 < verts.size() && verts[t] >= verts[t + 1])
      throw std::invalid_argument("restrict_to_vertices: vertices must be strictly increasing");
  }
  if (verts.empty()) throw std::invalid_argument("restrict_to_vertices: empty vertex list");
  MatSimplex r = s;
  std::vector<char> keep(n + 1, 0);
  for (int v : verts) keep[v] = 1;
  for (int v = n; v >= 0; --v)
    if (!keep[v]) r = face(D, r, v);
  return r;
}

MatSimplex thin_matrix(const FinCategory& D, int k, int l, const std::function<int(int, int)>& entry_at) {
  if (k == -1 && l >= 0) return empty_row_simplex(l);
  if (l == -1 && k >= 0) return empty_col_simplex(k);
  if (k < 0 || l < 0) throw std::invalid_argument("thin_matrix: invalid shape");
  MatSimplex s;
  s.k = k;
  s.l = l;
  s.entries.resize(static_cast<size_t>(k + 1) * (l + 1));
  s.vert.resize(static_cast<size_t>(k) * (l + 1));
  s.horz.resize(static_cast<size_t>(k + 1) * l);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= l; ++b) s.entry(a, b) = entry_at(a, b);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b <= l; ++b) s.vert_arrow(a, b) = thin_mor(D, s.entry(a, b), s.entry(a + 1, b));
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b < l; ++b) s.horz_arrow(a, b) = thin_mor(D, s.entry(a, b + 1), s.entry(a, b));
  return s;
}

bool is_nondegenerate(const FinCategory& D, const MatSimplex& s) {
  if (s.is_empty_row() || s.is_empty_col()) return s.dim() == 0;
  // consecutive rows
  for (int a = 0; a + 1 <= s.k; ++a) {
    bool same = true;
    for (int b = 0; same && b <= s.l; ++b) {
      if (s.entry(a, b) != s.entry(a + 1, b)) same = false;
      if (same && s.vert_arrow(a, b) != D.identity[s.entry(a, b)]) same = false;
    }
    for (int b = 0; same && b < s.l; ++b)
      if (s.horz_arrow(a, b) != s.horz_arrow(a + 1, b)) same = false;
    if (same) return false;
  }
  // consecutive columns
  for (int b = 0; b + 1 <= s.l; ++b) {
    bool same = true;
    for (int a = 0; same && a <= s.k; ++a) {
      if (s.entry(a, b) != s.entry(a, b + 1)) same = false;
      if (same && s.horz_arrow(a, b) != D.identity[s.entry(a, b)]) same = false;
    }
    for (int a = 0; same && a < s.k; ++a)
      if (s.vert_arrow(a, b) != s.vert_arrow(a, b + 1)) same = false;
    if (same) return false;
  }
  return true;
}

namespace {

// Witness lookup for the filler: reads off the value of the would-be
// n-simplex at a cell or arrow from face tau_i, which misses row i
// (i <= k) or column i-(k+1).
struct FillerReader {
  const std::vector<MatSimplex>& tau;
  int k, l;

  int entry_via(int i, int a, int b) const {
    if (i <= k) return tau[i].entry(a < i ? a : a - 1, b);
    const int j = i - (k + 1);
    return tau[i].entry(a, b < j ? b : b - 1);
  }
  bool entry_witness_ok(int i, int a, int b) const { return i <= k ? a != i : b != i - (k + 1); }

  int vert_via(int i, int a, int b) const {
    if (i <= k) return tau[i].vert_arrow(a + 1 < i ? a : a - 1, b);
    const int j = i - (k + 1);
    return tau[i].vert_arrow(a, b < j ? b : b - 1);
  }
  bool vert_witness_ok(int i, int a, int b) const {
    return i <= k ? (a != i && a + 1 != i) : b != i - (k + 1);
  }

  int horz_via(int i, int a, int b) const {
    if (i <= k) return tau[i].horz_arrow(a < i ? a : a - 1, b);
    const int j = i - (k + 1);
    return tau[i].horz_arrow(a, b + 1 < j ? b : b - 1);
  }
  bool horz_witness_ok(int i, int a, int b) const {
    return i <= k ? a != i : (b != i - (k + 1) && b + 1 != i - (k + 1));
  }
};

}  // namespace

MatSimplex coskeletal_fill(const FinCategory& D, const std::vector<MatSimplex>& boundary) {
  const int n = static_cast<int>(boundary.size()) - 1;
  if (n < 4) throw std::invalid_argument("coskeletal_fill: need n >= 4, i.e. at least 5 faces");
  for (const auto& t : boundary)
    if (t.dim() != n - 1) throw std::invalid_argument("coskeletal_fill: face of wrong dimension");

  // compatibility relations d_i t_j = d_{j-1} t_i for i < j
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (face(D, boundary[j], i) != face(D, boundary[i], j - 1))
        throw std::invalid_argument("coskeletal_fill: boundary relation fails at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");

  // infer k from the face types
  std::vector<int> types(n + 1);
  for (int i = 0; i <= n; ++i) types[i] = type_of(boundary[i]);
  int k;
  if (std::all_of(types.begin(), types.end(), [](int t) { return t == -1; }))
    k = -1;
  else if (std::all_of(types.begin(), types.end(), [&](int t) { return t == n - 1; }))
    k = n;
  else {
    k = types[n];
    for (int i = 0; i <= n; ++i)
      if (types[i] != (i <= k ? k - 1 : k))
        throw std::invalid_argument("coskeletal_fill: face types match no type pattern");
    if (k < 0 || k > n - 1) throw std::invalid_argument("coskeletal_fill: face types match no type pattern");
  }

  if (k == -1) return empty_row_simplex(n);
  if (k == n) return empty_col_simplex(n);

  const int l = n - 1 - k;
  MatSimplex r;
  r.k = k;
  r.l = l;
  r.entries.resize(static_cast<size_t>(k + 1) * (l + 1));
  r.vert.resize(static_cast<size_t>(k) * (l + 1));
  r.horz.resize(static_cast<size_t>(k + 1) * l);

  FillerReader reader{boundary, k, l};
  auto fill_with = [&](auto ok, auto via, int a, int b, const char* what) {
    int value = -1;
    for (int i = 0; i <= n; ++i) {
      if (!(reader.*ok)(i, a, b)) continue;
      const int v = (reader.*via)(i, a, b);
      if (value == -1)
        value = v;
      else if (v != value)
        throw std::logic_error(std::string("coskeletal_fill: witness faces disagree on ") + what);
    }
    if (value == -1) throw std::logic_error("coskeletal_fill: no admissible witness face");
    return value;
  };

  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= l; ++b)
      r.entry(a, b) = fill_with(&FillerReader::entry_witness_ok, &FillerReader::entry_via, a, b, "an entry");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b <= l; ++b)
      r.vert_arrow(a, b) =
          fill_with(&FillerReader::vert_witness_ok, &FillerReader::vert_via, a, b, "a vertical arrow");
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b < l; ++b)
      r.horz_arrow(a, b) =
          fill_with(&FillerReader::horz_witness_ok, &FillerReader::horz_via, a, b, "a horizontal arrow");

  // functoriality of the assembled grid, checked through the functor view
  const ValidationResult grid = validate_matrix(D, r);
  if (!grid.ok) throw std::logic_error("coskeletal_fill: assembled grid invalid: " + grid.message);
  const ValidationResult fun = validate_functor(to_functor(D, r));
  if (!fun.ok) throw std::logic_error("coskeletal_fill: assembled functor invalid: " + fun.message);

  for (int i = 0; i <= n; ++i)
    if (face(D, r, i) != boundary[i]) throw std::logic_error("coskeletal_fill: filler does not restrict to boundary");
  return r;
}

}  // namespace dusk
