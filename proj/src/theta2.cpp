#include "dusk/theta2.hpp"

#include <algorithm>
#include <stdexcept>

namespace dusk {

ValidationResult validate_tuple(const std::vector<FinCategory>& Ds, const TupleSimplex& t) {
  auto fail = [](const std::string& m) { return ValidationResult{false, m}; };
  if (Ds.empty()) return fail("no factors");
  if (t.parts.size() != Ds.size()) return fail("part count mismatch");
  for (size_t i = 0; i < Ds.size(); ++i) {
    if (t.parts[i].dim() != t.n) return fail("part " + std::to_string(i) + " has wrong dimension");
    const auto v = validate_matrix(Ds[i], t.parts[i]);
    if (!v.ok) return fail("part " + std::to_string(i) + ": " + v.message);
  }
  for (size_t i = 0; i + 1 < t.parts.size(); ++i)
    if (type_of(t.parts[i]) > type_of(t.parts[i + 1]))
      return fail("types not nondecreasing at position " + std::to_string(i));
  return {};
}

std::vector<TupleSimplex> tuple_simplices(const std::vector<FinCategory>& Ds, int n) {
  if (Ds.empty()) throw std::invalid_argument("tuple_simplices: need at least one factor");
  const int r = static_cast<int>(Ds.size());
  // per factor, simplices grouped by type; simplices() returns them in
  // increasing type order already
  std::vector<std::vector<std::vector<MatSimplex>>> by_type(r);
  for (int i = 0; i < r; ++i) {
    by_type[i].assign(n + 2, {});
    for (MatSimplex& s : simplices(Ds[i], n)) by_type[i][type_of(s) + 1].push_back(std::move(s));
  }
  std::vector<TupleSimplex> out;
  std::vector<int> types(r);   // type + 1, in 0..n+1
  std::vector<int> choice(r);
  auto emit = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      TupleSimplex t;
      t.n = n;
      t.parts.reserve(r);
      for (int i = 0; i < r; ++i) t.parts.push_back(by_type[i][types[i]][choice[i]]);
      out.push_back(std::move(t));
      return;
    }
    for (choice[pos] = 0; choice[pos] < static_cast<int>(by_type[pos][types[pos]].size()); ++choice[pos])
      self(self, pos + 1);
  };
  auto pick_types = [&](auto&& self, int pos, int lo) -> void {
    if (pos == r) {
      emit(emit, 0);
      return;
    }
    for (types[pos] = lo; types[pos] <= n + 1; ++types[pos]) self(self, pos + 1, types[pos]);
  };
  pick_types(pick_types, 0, 0);
  return out;
}

long long tuple_count(const std::vector<FinCategory>& Ds, int n) {
  if (Ds.empty()) throw std::invalid_argument("tuple_count: need at least one factor");
  const int r = static_cast<int>(Ds.size());
  std::vector<std::vector<long long>> by_type(r, std::vector<long long>(n + 2, 0));
  for (int i = 0; i < r; ++i)
    for_each_simplex(Ds[i], n, [&](const MatSimplex& s) { ++by_type[i][type_of(s) + 1]; });
  // next[t] = tuples over the remaining factors with all types >= t
  // (shifted type indices 0..n+1); recurrence sums over the first type
  std::vector<long long> next(n + 3, 1);
  next[n + 2] = 0;
  for (int i = r - 1; i >= 0; --i) {
    std::vector<long long> cur(n + 3, 0);
    for (int t = n + 1; t >= 0; --t) cur[t] = cur[t + 1] + by_type[i][t] * next[t];
    next = std::move(cur);
  }
  return next[0];
}

TupleSimplex tuple_face(const std::vector<FinCategory>& Ds, const TupleSimplex& t, int i) {
  TupleSimplex r;
  r.n = t.n - 1;
  r.parts.reserve(t.parts.size());
  for (size_t p = 0; p < t.parts.size(); ++p) r.parts.push_back(face(Ds[p], t.parts[p], i));
  for (size_t p = 0; p + 1 < r.parts.size(); ++p)
    if (type_of(r.parts[p]) > type_of(r.parts[p + 1]))
      throw std::logic_error("tuple_face: type monotonicity broken");
  return r;
}

TupleSimplex tuple_degeneracy(const std::vector<FinCategory>& Ds, const TupleSimplex& t, int i) {
  TupleSimplex r;
  r.n = t.n + 1;
  r.parts.reserve(t.parts.size());
  for (size_t p = 0; p < t.parts.size(); ++p) r.parts.push_back(degeneracy(Ds[p], t.parts[p], i));
  for (size_t p = 0; p + 1 < r.parts.size(); ++p)
    if (type_of(r.parts[p]) > type_of(r.parts[p + 1]))
      throw std::logic_error("tuple_degeneracy: type monotonicity broken");
  return r;
}

std::vector<FinCategory> theta2_object(int r, const std::vector<int>& widths) {
  if (static_cast<int>(widths.size()) != r)
    throw std::invalid_argument("theta2_object: widths length does not match r");
  std::vector<FinCategory> out;
  out.reserve(widths.size());
  for (int w : widths) {
    if (w < 0) throw std::invalid_argument("theta2_object: widths must be >= 0");
    out.push_back(ordinal(w));
  }
  return out;
}

bool tuple_nondegenerate(const std::vector<FinCategory>& Ds, const TupleSimplex& t) {
  if (t.n == 0) return true;
  for (int i = 0; i <= t.n - 1; ++i)
    if (tuple_degeneracy(Ds, tuple_face(Ds, t, i), i) == t) return false;
  return true;
}

long long count_nondegenerate(const std::vector<FinCategory>& Ds, int n) {
  long long count = 0;
  for (const TupleSimplex& t : tuple_simplices(Ds, n))
    if (tuple_nondegenerate(Ds, t)) ++count;
  return count;
}

}  // namespace dusk
