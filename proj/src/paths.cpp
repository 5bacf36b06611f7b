#include "dusk/paths.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dusk {

std::string Shuffle::steps() const {
  std::string s;
  for (int i = 0; i < length(); ++i) s += step_vertical(i) ? 'V' : 'H';
  return s;
}

Shuffle shuffle_from_steps(int k, int l, const std::string& steps) {
  if (k < 0 || l < 0) throw std::invalid_argument("shuffle_from_steps: negative shape");
  if (static_cast<int>(steps.size()) != k + l) throw std::invalid_argument("shuffle_from_steps: wrong step count");
  Shuffle s;
  s.k = k;
  s.l = l;
  s.alpha.push_back(0);
  s.beta.push_back(l);
  for (char c : steps) {
    if (c == 'V') {
      s.alpha.push_back(s.alpha.back() + 1);
      s.beta.push_back(s.beta.back());
    } else if (c == 'H') {
      s.alpha.push_back(s.alpha.back());
      s.beta.push_back(s.beta.back() - 1);
    } else {
      throw std::invalid_argument("shuffle_from_steps: steps must be over {H, V}");
    }
  }
  if (s.alpha.back() != k || s.beta.back() != 0)
    throw std::invalid_argument("shuffle_from_steps: step counts do not match the shape");
  return s;
}

ValidationResult validate_shuffle(const Shuffle& s) {
  auto fail = [](const std::string& m) { return ValidationResult{false, m}; };
  if (s.k < 0 || s.l < 0) return fail("negative shape");
  const size_t len = static_cast<size_t>(s.k) + s.l + 1;
  if (s.alpha.size() != len || s.beta.size() != len) return fail("value sequence length mismatch");
  if (s.alpha.front() != 0 || s.beta.front() != s.l) return fail("path must start at (0, l)");
  if (s.alpha.back() != s.k || s.beta.back() != 0) return fail("path must end at (k, 0)");
  for (int i = 0; i <= s.k + s.l; ++i) {
    if (s.alpha[i] < 0 || s.alpha[i] > s.k || s.beta[i] < 0 || s.beta[i] > s.l)
      return fail("path leaves the grid at step " + std::to_string(i));
    if (s.alpha[i] + s.l - s.beta[i] != i) return fail("ordinate summation fails at " + std::to_string(i));
  }
  for (int i = 0; i < s.k + s.l; ++i) {
    const bool v = s.alpha[i + 1] == s.alpha[i] + 1 && s.beta[i + 1] == s.beta[i];
    const bool h = s.alpha[i + 1] == s.alpha[i] && s.beta[i + 1] == s.beta[i] - 1;
    if (!v && !h) return fail("step " + std::to_string(i) + " moves by more than one");
  }
  return {};
}

std::vector<Shuffle> enumerate_shuffles(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("enumerate_shuffles: negative shape");
  std::vector<Shuffle> out;
  std::string steps;
  auto rec = [&](auto&& self, int dk, int dl) -> void {
    if (dk == 0 && dl == 0) {
      out.push_back(shuffle_from_steps(k, l, steps));
      return;
    }
    if (dl > 0) {
      steps.push_back('H');
      self(self, dk, dl - 1);
      steps.pop_back();
    }
    if (dk > 0) {
      steps.push_back('V');
      self(self, dk - 1, dl);
      steps.pop_back();
    }
  };
  rec(rec, k, l);
  return out;
}

ValidationResult validate_triangulation(const Triangulation& t) {
  auto fail = [](const std::string& m) { return ValidationResult{false, m}; };
  const int n = t.n;
  if (n < 2) return fail("polygon needs n >= 2");
  if (static_cast<int>(t.triangles.size()) != n - 1) return fail("expected n-1 triangles");
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& tr : t.triangles) {
    if (!(0 <= tr[0] && tr[0] < tr[1] && tr[1] < tr[2] && tr[2] <= n)) return fail("bad vertex triple");
    ++edge_count[{tr[0], tr[1]}];
    ++edge_count[{tr[0], tr[2]}];
    ++edge_count[{tr[1], tr[2]}];
  }
  for (const auto& [e, c] : edge_count) {
    const bool boundary = e.second == e.first + 1 || (e.first == 0 && e.second == n);
    if (boundary && c != 1) return fail("boundary edge used " + std::to_string(c) + " times");
    if (!boundary && c != 2) return fail("diagonal used " + std::to_string(c) + " times");
  }
  // diagonals must not cross
  std::vector<std::pair<int, int>> diags;
  for (const auto& [e, c] : edge_count)
    if (c == 2) diags.push_back(e);
  for (size_t i = 0; i < diags.size(); ++i)
    for (size_t j = i + 1; j < diags.size(); ++j) {
      const auto [a, b] = diags[i];
      const auto [c2, d] = diags[j];
      if ((a < c2 && c2 < b && b < d) || (c2 < a && a < d && d < b)) return fail("crossing diagonals");
    }
  return {};
}

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_triangulations: n must be >= 2");
  // recursion over contiguous vertex ranges [lo, hi]: the edge (lo, hi)
  // sits in the triangle (lo, m, hi) for each choice of apex lo < m < hi
  std::vector<std::array<int, 3>> acc;
  std::vector<Triangulation> out;
  auto splitter = [&](auto&& self, int lo, int hi, const std::function<void()>& done) -> void {
    if (hi - lo < 2) {
      done();
      return;
    }
    for (int m = lo + 1; m < hi; ++m) {
      acc.push_back({lo, m, hi});
      self(self, lo, m, [&] { self(self, m, hi, done); });
      acc.pop_back();
    }
  };
  splitter(splitter, 0, n, [&] {
    Triangulation t{n, acc};
    std::sort(t.triangles.begin(), t.triangles.end());
    out.push_back(std::move(t));
  });
  return out;
}

bool satisfies_constraint(const Triangulation& t, int k) {
  for (const auto& tr : t.triangles) {
    if (tr[2] <= k) return false;       // inside {0..k}
    if (tr[0] >= k + 1) return false;   // inside {k+1..n}
  }
  return true;
}

std::vector<Triangulation> filter_constrained(const std::vector<Triangulation>& ts, int k) {
  std::vector<Triangulation> out;
  for (const auto& t : ts)
    if (satisfies_constraint(t, k)) out.push_back(t);
  return out;
}

namespace {

// Recursion state of the bijection: the remaining polygon is the
// contiguous vertex range [lo, hi] in ORIGINAL labels, with the type
// boundary fixed between K and K+1; re-indexing to 0..hi-lo and
// constraint K-lo is implicit in these coordinates.
std::string peel_steps(std::map<std::pair<int, int>, std::array<int, 3>>& tri_of_edge, int lo, int hi, int K) {
  if (hi - lo == 2) {
    auto it = tri_of_edge.find({lo, hi});
    if (it == tri_of_edge.end() || it->second != std::array<int, 3>{lo, lo + 1, hi})
      throw std::invalid_argument("triangulation_to_shuffle: base triangle missing");
    return it->second[1] <= K ? "V" : "H";
  }
  auto it = tri_of_edge.find({lo, hi});
  if (it == tri_of_edge.end()) throw std::invalid_argument("triangulation_to_shuffle: edge (lo,hi) uncovered");
  const auto tr = it->second;
  if (tr == std::array<int, 3>{lo, hi - 1, hi}) {
    if (hi - 1 <= K) throw std::invalid_argument("triangulation_to_shuffle: constraint violated");
    return "H" + peel_steps(tri_of_edge, lo, hi - 1, K);
  }
  if (tr == std::array<int, 3>{lo, lo + 1, hi}) {
    if (lo + 1 > K) throw std::invalid_argument("triangulation_to_shuffle: constraint violated");
    return "V" + peel_steps(tri_of_edge, lo + 1, hi, K);
  }
  throw std::invalid_argument("triangulation_to_shuffle: triangle on the peel edge is not a fan triangle");
}

}  // namespace

Shuffle triangulation_to_shuffle(const Triangulation& t, int n, int k) {
  if (t.n != n) throw std::invalid_argument("triangulation_to_shuffle: polygon size mismatch");
  if (n < 2 || k < 0 || k > n - 1) throw std::invalid_argument("triangulation_to_shuffle: need n >= 2, 0 <= k <= n-1");
  const auto valid = validate_triangulation(t);
  if (!valid.ok) throw std::invalid_argument("triangulation_to_shuffle: " + valid.message);
  if (!satisfies_constraint(t, k)) throw std::invalid_argument("triangulation_to_shuffle: constraint violated");
  // index triangles by their (min, max) edge; by planarity the triangle
  // on a peel edge (lo, hi) is unique
  std::map<std::pair<int, int>, std::array<int, 3>> tri_of_edge;
  for (const auto& tr : t.triangles) tri_of_edge[{tr[0], tr[2]}] = tr;
  const std::string steps = peel_steps(tri_of_edge, 0, n, k);
  return shuffle_from_steps(k, n - 1 - k, steps);
}

Triangulation shuffle_to_triangulation(const Shuffle& s, int n, int k) {
  if (s.k != k || s.l != n - 1 - k) throw std::invalid_argument("shuffle_to_triangulation: shape mismatch");
  const auto valid = validate_shuffle(s);
  if (!valid.ok) throw std::invalid_argument("shuffle_to_triangulation: " + valid.message);
  Triangulation t;
  t.n = n;
  int lo = 0, hi = n;
  const std::string steps = s.steps();
  for (char c : steps) {
    if (hi - lo == 2) break;  // last step is the base triangle
    if (c == 'H') {
      t.triangles.push_back({lo, hi - 1, hi});
      --hi;
    } else {
      t.triangles.push_back({lo, lo + 1, hi});
      ++lo;
    }
  }
  t.triangles.push_back({lo, lo + 1, hi});
  std::sort(t.triangles.begin(), t.triangles.end());
  return t;
}

LabeledPath monotone_path(const MatSimplex& M, const Shuffle& s) {
  if (!M.proper()) throw std::invalid_argument("monotone_path: matrix must be proper");
  if (M.k != s.k || M.l != s.l) throw std::invalid_argument("monotone_path: shape mismatch");
  const auto valid = validate_shuffle(s);
  if (!valid.ok) throw std::invalid_argument("monotone_path: " + valid.message);
  LabeledPath p;
  for (int i = 0; i <= s.length(); ++i) p.objects.push_back(M.entry(s.alpha[i], s.beta[i]));
  for (int i = 0; i < s.length(); ++i) {
    if (s.step_vertical(i))
      p.arrows.push_back(M.vert_arrow(s.alpha[i], s.beta[i]));
    else
      p.arrows.push_back(M.horz_arrow(s.alpha[i], s.beta[i + 1]));
  }
  return p;
}

bool labeled_triangulation_check(const MatSimplex& sigma, const Triangulation& t) {
  const int k = type_of(sigma);
  const int n = sigma.dim();
  if (t.n != n) throw std::invalid_argument("labeled_triangulation_check: polygon size mismatch");
  if (k < 0 || k > n - 1) throw std::invalid_argument("labeled_triangulation_check: simplex must be proper");
  return satisfies_constraint(t, k);
}

MatSimplex reconstruct_matrix(const FinCategory& D, int n, int k,
                              const std::vector<std::pair<Shuffle, LabeledPath>>& paths) {
  if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("reconstruct_matrix: need 0 <= k <= n-1");
  const int l = n - 1 - k;
  MatSimplex m;
  m.k = k;
  m.l = l;
  m.entries.assign(static_cast<size_t>(k + 1) * (l + 1), -1);
  m.vert.assign(static_cast<size_t>(k) * (l + 1), -1);
  m.horz.assign(static_cast<size_t>(k + 1) * l, -1);

  auto put = [&](int& slot, int value, const std::string& what) {
    if (value < 0) throw std::invalid_argument("reconstruct_matrix: negative label at " + what);
    if (slot != -1 && slot != value)
      throw std::invalid_argument("reconstruct_matrix: conflicting labels at " + what);
    slot = value;
  };

  for (const auto& [s, p] : paths) {
    if (s.k != k || s.l != l) throw std::invalid_argument("reconstruct_matrix: shuffle shape mismatch");
    const auto v = validate_shuffle(s);
    if (!v.ok) throw std::invalid_argument("reconstruct_matrix: " + v.message);
    if (static_cast<int>(p.objects.size()) != n || static_cast<int>(p.arrows.size()) != n - 1)
      throw std::invalid_argument("reconstruct_matrix: path length mismatch");
    for (int i = 0; i <= s.length(); ++i) {
      const int a = s.alpha[i], b = s.beta[i];
      put(m.entry(a, b), p.objects[i],
          "cell (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (int i = 0; i < s.length(); ++i) {
      const int a = s.alpha[i], b = s.beta[i];
      if (s.step_vertical(i))
        put(m.vert_arrow(a, b), p.arrows[i],
            "vertical arrow (" + std::to_string(a) + "," + std::to_string(b) + ")");
      else
        put(m.horz_arrow(a, b - 1), p.arrows[i],
            "horizontal arrow (" + std::to_string(a) + "," + std::to_string(b - 1) + ")");
    }
  }

  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= l; ++b)
      if (m.entry(a, b) == -1)
        throw std::invalid_argument("reconstruct_matrix: cell (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") not covered");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b <= l; ++b)
      if (m.vert_arrow(a, b) == -1)
        throw std::invalid_argument("reconstruct_matrix: vertical arrow (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") not covered");
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b < l; ++b)
      if (m.horz_arrow(a, b) == -1)
        throw std::invalid_argument("reconstruct_matrix: horizontal arrow (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") not covered");

  const auto grid = validate_matrix(D, m);
  if (!grid.ok) throw std::invalid_argument("reconstruct_matrix: labels do not form a matrix: " + grid.message);
  return m;
}

}  // namespace dusk
