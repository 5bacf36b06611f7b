#include "dusk/fincat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dusk {

int FinCategory::compose(int g, int f) const {
  const int m = num_morphisms();
  if (g < 0 || g >= m || f < 0 || f >= m)
    throw std::invalid_argument("compose: morphism index out of range");
  const int r = compose_table[static_cast<size_t>(g) * m + f];
  if (r < 0) throw std::invalid_argument("compose: pair not composable");
  return r;
}

ValidationResult validate_category(const FinCategory& c) {
  const int O = c.num_objects;
  const int M = c.num_morphisms();
  auto fail = [](const std::string& msg) { return ValidationResult{false, msg}; };

  if (O < 0) return fail("negative object count");
  if (static_cast<int>(c.mor_tgt.size()) != M) return fail("mor_src/mor_tgt size mismatch");
  if (static_cast<int>(c.identity.size()) != O) return fail("identity table size mismatch");
  if (c.compose_table.size() != static_cast<size_t>(M) * M) return fail("compose table size mismatch");

  for (int f = 0; f < M; ++f) {
    if (c.mor_src[f] < 0 || c.mor_src[f] >= O || c.mor_tgt[f] < 0 || c.mor_tgt[f] >= O)
      return fail("morphism " + std::to_string(f) + " has out-of-range endpoints");
  }
  for (int a = 0; a < O; ++a) {
    const int e = c.identity[a];
    if (e < 0 || e >= M) return fail("identity of object " + std::to_string(a) + " out of range");
    if (c.mor_src[e] != a || c.mor_tgt[e] != a)
      return fail("identity of object " + std::to_string(a) + " is not an endomorphism");
  }

  // composition defined exactly on composable pairs, with correct endpoints
  for (int g = 0; g < M; ++g) {
    for (int f = 0; f < M; ++f) {
      const int r = c.compose_table[static_cast<size_t>(g) * M + f];
      if (c.composable(g, f)) {
        if (r < 0 || r >= M)
          return fail("compose undefined on composable pair (" + std::to_string(g) + "," + std::to_string(f) + ")");
        if (c.mor_src[r] != c.mor_src[f] || c.mor_tgt[r] != c.mor_tgt[g])
          return fail("composite of (" + std::to_string(g) + "," + std::to_string(f) + ") has wrong endpoints");
      } else if (r != -1) {
        return fail("compose defined on non-composable pair (" + std::to_string(g) + "," + std::to_string(f) + ")");
      }
    }
  }

  // unit laws
  for (int f = 0; f < M; ++f) {
    if (c.compose_table[static_cast<size_t>(c.identity[c.mor_tgt[f]]) * M + f] != f)
      return fail("left unit law fails at morphism " + std::to_string(f));
    if (c.compose_table[static_cast<size_t>(f) * M + c.identity[c.mor_src[f]]] != f)
      return fail("right unit law fails at morphism " + std::to_string(f));
  }

  // associativity over all composable triples
  for (int h = 0; h < M; ++h)
    for (int g = 0; g < M; ++g) {
      if (!c.composable(h, g)) continue;
      const int hg = c.compose_table[static_cast<size_t>(h) * M + g];
      for (int f = 0; f < M; ++f) {
        if (!c.composable(g, f)) continue;
        const int gf = c.compose_table[static_cast<size_t>(g) * M + f];
        if (c.compose_table[static_cast<size_t>(h) * M + gf] !=
            c.compose_table[static_cast<size_t>(hg) * M + f])
          return fail("associativity fails at triple (" + std::to_string(h) + "," + std::to_string(g) + "," +
                      std::to_string(f) + ")");
      }
    }

  return {};
}

FinCategory ordinal(int n) {
  if (n < -1) throw std::invalid_argument("ordinal: n must be >= -1");
  FinCategory c;
  if (n == -1) return c;
  c.num_objects = n + 1;
  // morphism (i <= j) indexed lexicographically in (i, j)
  std::vector<std::vector<int>> idx(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      idx[i][j] = c.num_morphisms();
      c.mor_src.push_back(i);
      c.mor_tgt.push_back(j);
    }
  c.identity.resize(n + 1);
  for (int i = 0; i <= n; ++i) c.identity[i] = idx[i][i];
  const int M = c.num_morphisms();
  c.compose_table.assign(static_cast<size_t>(M) * M, -1);
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f)
      if (c.composable(g, f))
        c.compose_table[static_cast<size_t>(g) * M + f] = idx[c.mor_src[f]][c.mor_tgt[g]];
  return c;
}

FinCategory opposite(const FinCategory& c) {
  FinCategory o = c;
  std::swap(o.mor_src, o.mor_tgt);
  const int M = c.num_morphisms();
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f)
      o.compose_table[static_cast<size_t>(g) * M + f] = c.compose_table[static_cast<size_t>(f) * M + g];
  return o;
}

FinCategory product(const FinCategory& c, const FinCategory& d) {
  FinCategory p;
  p.num_objects = c.num_objects * d.num_objects;
  const int M1 = c.num_morphisms(), M2 = d.num_morphisms();
  const int M = M1 * M2;
  p.mor_src.resize(M);
  p.mor_tgt.resize(M);
  for (int m1 = 0; m1 < M1; ++m1)
    for (int m2 = 0; m2 < M2; ++m2) {
      const int m = m1 * M2 + m2;
      p.mor_src[m] = c.mor_src[m1] * d.num_objects + d.mor_src[m2];
      p.mor_tgt[m] = c.mor_tgt[m1] * d.num_objects + d.mor_tgt[m2];
    }
  p.identity.resize(p.num_objects);
  for (int o1 = 0; o1 < c.num_objects; ++o1)
    for (int o2 = 0; o2 < d.num_objects; ++o2)
      p.identity[o1 * d.num_objects + o2] = c.identity[o1] * M2 + d.identity[o2];
  p.compose_table.assign(static_cast<size_t>(M) * M, -1);
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      if (!p.composable(g, f)) continue;
      const int r1 = c.compose_table[static_cast<size_t>(g / M2) * M1 + f / M2];
      const int r2 = d.compose_table[static_cast<size_t>(g % M2) * M2 + f % M2];
      p.compose_table[static_cast<size_t>(g) * M + f] = r1 * M2 + r2;
    }
  return p;
}

std::vector<int> hom_set(const FinCategory& c, int a, int b) {
  std::vector<int> out;
  for (int f = 0; f < c.num_morphisms(); ++f)
    if (c.mor_src[f] == a && c.mor_tgt[f] == b) out.push_back(f);
  return out;
}

int thin_mor(const FinCategory& c, int a, int b) {
  const auto h = hom_set(c, a, b);
  if (h.size() != 1)
    throw std::invalid_argument("thin_mor: hom(" + std::to_string(a) + "," + std::to_string(b) + ") has " +
                                std::to_string(h.size()) + " elements");
  return h.front();
}

ValidationResult validate_functor(const FunctorData& f) {
  auto fail = [](const std::string& msg) { return ValidationResult{false, msg}; };
  if (!f.source || !f.target) return fail("null source or target");
  const FinCategory& S = *f.source;
  const FinCategory& T = *f.target;
  if (static_cast<int>(f.obj_map.size()) != S.num_objects) return fail("obj_map size mismatch");
  if (static_cast<int>(f.mor_map.size()) != S.num_morphisms()) return fail("mor_map size mismatch");
  for (int a = 0; a < S.num_objects; ++a)
    if (f.obj_map[a] < 0 || f.obj_map[a] >= T.num_objects)
      return fail("obj_map out of range at object " + std::to_string(a));
  for (int m = 0; m < S.num_morphisms(); ++m) {
    const int fm = f.mor_map[m];
    if (fm < 0 || fm >= T.num_morphisms()) return fail("mor_map out of range at morphism " + std::to_string(m));
    if (T.mor_src[fm] != f.obj_map[S.mor_src[m]] || T.mor_tgt[fm] != f.obj_map[S.mor_tgt[m]])
      return fail("source/target not preserved at morphism " + std::to_string(m));
  }
  for (int a = 0; a < S.num_objects; ++a)
    if (f.mor_map[S.identity[a]] != T.identity[f.obj_map[a]])
      return fail("identity not preserved at object " + std::to_string(a));
  const int M = S.num_morphisms();
  for (int g = 0; g < M; ++g)
    for (int m = 0; m < M; ++m) {
      const int c = S.compose_table[static_cast<size_t>(g) * M + m];
      if (c < 0) continue;
      if (f.mor_map[c] != T.compose(f.mor_map[g], f.mor_map[m]))
        return fail("composition not preserved at pair (" + std::to_string(g) + "," + std::to_string(m) + ")");
    }
  return {};
}

namespace {

struct FunctorSearch {
  const FinCategory& S;
  const FinCategory& T;
  const CatPtr& src_ptr;
  const CatPtr& tgt_ptr;
  std::vector<char> hom_nonempty;            // target O x O
  std::vector<std::vector<int>> hom_lists;   // target O x O morphism lists
  std::vector<std::vector<std::array<int, 2>>> factorizations;  // per source morphism
  std::vector<std::vector<int>> mors_at;     // morphisms whose larger endpoint is this object
  bool thin_target = true;
  std::vector<int> obj_map, mor_map;
  const std::function<void(const FunctorData&)>* emit = nullptr;

  FunctorSearch(const CatPtr& s, const CatPtr& t) : S(*s), T(*t), src_ptr(s), tgt_ptr(t) {
    const int TO = T.num_objects;
    hom_nonempty.assign(static_cast<size_t>(TO) * TO, 0);
    hom_lists.resize(static_cast<size_t>(TO) * TO);
    for (int m = 0; m < T.num_morphisms(); ++m) {
      hom_nonempty[static_cast<size_t>(T.mor_src[m]) * TO + T.mor_tgt[m]] = 1;
      hom_lists[static_cast<size_t>(T.mor_src[m]) * TO + T.mor_tgt[m]].push_back(m);
    }
    for (const auto& h : hom_lists)
      if (h.size() > 1) thin_target = false;
    const int M = S.num_morphisms();
    factorizations.resize(M);
    for (int g = 0; g < M; ++g)
      for (int f = 0; f < M; ++f) {
        const int c = S.compose_table[static_cast<size_t>(g) * M + f];
        if (c >= 0) factorizations[c].push_back({g, f});
      }
    mors_at.resize(S.num_objects);
    for (int m = 0; m < M; ++m) mors_at[std::max(S.mor_src[m], S.mor_tgt[m])].push_back(m);
  }

  bool obj_assignment_ok(int a) const {
    // every morphism between already-assigned objects must have a
    // non-empty target hom-set to land in; each is checked exactly once,
    // when its larger endpoint gets its value
    const int TO = T.num_objects;
    for (int m : mors_at[a])
      if (!hom_nonempty[static_cast<size_t>(obj_map[S.mor_src[m]]) * TO + obj_map[S.mor_tgt[m]]]) return false;
    return true;
  }

  void assign_objects(int a) {
    if (a == S.num_objects) {
      mor_map.assign(S.num_morphisms(), -1);
      for (int o = 0; o < S.num_objects; ++o) mor_map[S.identity[o]] = T.identity[obj_map[o]];
      assign_morphisms(0);
      return;
    }
    for (int v = 0; v < T.num_objects; ++v) {
      obj_map[a] = v;
      if (obj_assignment_ok(a)) assign_objects(a + 1);
    }
    obj_map[a] = -1;
  }

  // Composition check for the newly fixed morphism m: every composable
  // pair whose three participants are all assigned and whose maximum
  // index is m gets verified exactly once.  A thin target needs none of
  // this: parallel morphisms there are equal, so once endpoints match,
  // composites agree automatically.
  bool composition_ok(int m) const {
    if (thin_target) return true;
    const int M = S.num_morphisms();
    for (const auto& gf : factorizations[m]) {
      if (gf[0] > m || gf[1] > m) continue;
      if (mor_map[gf[0]] < 0 || mor_map[gf[1]] < 0) continue;
      if (T.compose(mor_map[gf[0]], mor_map[gf[1]]) != mor_map[m]) return false;
    }
    for (int g = 0; g <= m; ++g) {
      if (mor_map[g] < 0) continue;
      if (S.composable(m, g)) {
        const int c = S.compose_table[static_cast<size_t>(m) * M + g];
        if (c <= m && mor_map[c] >= 0 && T.compose(mor_map[m], mor_map[g]) != mor_map[c]) return false;
      }
      if (g != m && S.composable(g, m)) {
        const int c = S.compose_table[static_cast<size_t>(g) * M + m];
        if (c <= m && mor_map[c] >= 0 && T.compose(mor_map[g], mor_map[m]) != mor_map[c]) return false;
      }
    }
    return true;
  }

  void assign_morphisms(int m) {
    const int M = S.num_morphisms();
    while (m < M && mor_map[m] >= 0) {
      // identities were pre-assigned; still run their composition checks
      if (!composition_ok(m)) return;
      ++m;
    }
    if (m == M) {
      (*emit)(FunctorData{src_ptr, tgt_ptr, obj_map, mor_map});
      return;
    }
    const int TO = T.num_objects;
    const auto& cands = hom_lists[static_cast<size_t>(obj_map[S.mor_src[m]]) * TO + obj_map[S.mor_tgt[m]]];
    for (int v : cands) {
      mor_map[m] = v;
      if (composition_ok(m)) assign_morphisms(m + 1);
    }
    mor_map[m] = -1;
  }
};

}  // namespace

void for_each_functor(const CatPtr& source, const CatPtr& target,
                      const std::function<void(const FunctorData&)>& fn) {
  if (!source || !target) throw std::invalid_argument("for_each_functor: null category");
  FunctorSearch search(source, target);
  search.emit = &fn;
  search.obj_map.assign(source->num_objects, -1);
  search.assign_objects(0);
}

std::vector<FunctorData> enumerate_functors(const CatPtr& source, const CatPtr& target) {
  std::vector<FunctorData> out;
  for_each_functor(source, target, [&](const FunctorData& f) { out.push_back(f); });
  return out;
}

}  // namespace dusk
