#include "dusk/duskin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace dusk {

namespace {

int table_lookup(const std::vector<int>& t, int n, int b, int a, const char* what) {
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument(std::string(what) + ": index out of range");
  const int r = t[static_cast<size_t>(b) * n + a];
  if (r < 0) throw std::invalid_argument(std::string(what) + ": pair not composable");
  return r;
}

}  // namespace

int TwoCategory::compose1(int g, int f) const { return table_lookup(hcomp1, num_one_cells(), g, f, "compose1"); }
int TwoCategory::vcompose(int b, int a) const { return table_lookup(vcomp, num_two_cells(), b, a, "vcompose"); }
int TwoCategory::hcompose(int b, int a) const { return table_lookup(hcomp2, num_two_cells(), b, a, "hcompose"); }

ValidationResult validate_two_category(const TwoCategory& C) {
  auto fail = [](const std::string& m) { return ValidationResult{false, m}; };
  const int O = C.num_objects, N1 = C.num_one_cells(), N2 = C.num_two_cells();
  if (static_cast<int>(C.cell1_tgt.size()) != N1 || static_cast<int>(C.id1.size()) != O)
    return fail("1-cell table sizes");
  if (C.hcomp1.size() != static_cast<size_t>(N1) * N1) return fail("hcomp1 size");
  if (static_cast<int>(C.cell2_tgt.size()) != N2 || static_cast<int>(C.id2.size()) != N1)
    return fail("2-cell table sizes");
  if (C.vcomp.size() != static_cast<size_t>(N2) * N2 || C.hcomp2.size() != static_cast<size_t>(N2) * N2)
    return fail("2-cell composition table sizes");

  for (int f = 0; f < N1; ++f)
    if (C.cell1_src[f] < 0 || C.cell1_src[f] >= O || C.cell1_tgt[f] < 0 || C.cell1_tgt[f] >= O)
      return fail("1-cell endpoints out of range");
  for (int x = 0; x < O; ++x) {
    const int e = C.id1[x];
    if (e < 0 || e >= N1 || C.cell1_src[e] != x || C.cell1_tgt[e] != x) return fail("bad identity 1-cell");
  }
  for (int a = 0; a < N2; ++a) {
    const int s = C.cell2_src[a], t = C.cell2_tgt[a];
    if (s < 0 || s >= N1 || t < 0 || t >= N1) return fail("2-cell endpoints out of range");
    if (C.cell1_src[s] != C.cell1_src[t] || C.cell1_tgt[s] != C.cell1_tgt[t])
      return fail("2-cell " + std::to_string(a) + " not between parallel 1-cells");
  }
  for (int f = 0; f < N1; ++f) {
    const int e = C.id2[f];
    if (e < 0 || e >= N2 || C.cell2_src[e] != f || C.cell2_tgt[e] != f) return fail("bad identity 2-cell");
  }

  auto h1 = [&](int g, int f) { return C.hcomp1[static_cast<size_t>(g) * N1 + f]; };
  // hcomp1 is a category structure on objects and 1-cells
  for (int g = 0; g < N1; ++g)
    for (int f = 0; f < N1; ++f) {
      const int r = h1(g, f);
      if (C.cell1_tgt[f] == C.cell1_src[g]) {
        if (r < 0) return fail("hcomp1 undefined on composable pair");
        if (C.cell1_src[r] != C.cell1_src[f] || C.cell1_tgt[r] != C.cell1_tgt[g])
          return fail("hcomp1 endpoints wrong");
      } else if (r != -1) {
        return fail("hcomp1 defined on non-composable pair");
      }
    }
  for (int f = 0; f < N1; ++f)
    if (h1(C.id1[C.cell1_tgt[f]], f) != f || h1(f, C.id1[C.cell1_src[f]]) != f)
      return fail("1-cell unit law fails");
  for (int h = 0; h < N1; ++h)
    for (int g = 0; g < N1; ++g) {
      if (C.cell1_tgt[g] != C.cell1_src[h]) continue;
      for (int f = 0; f < N1; ++f) {
        if (C.cell1_tgt[f] != C.cell1_src[g]) continue;
        if (h1(h, h1(g, f)) != h1(h1(h, g), f)) return fail("hcomp1 associativity fails");
      }
    }

  auto v2 = [&](int b, int a) { return C.vcomp[static_cast<size_t>(b) * N2 + a]; };
  for (int b = 0; b < N2; ++b)
    for (int a = 0; a < N2; ++a) {
      const int r = v2(b, a);
      if (C.cell2_tgt[a] == C.cell2_src[b]) {
        if (r < 0) return fail("vcomp undefined on composable pair");
        if (C.cell2_src[r] != C.cell2_src[a] || C.cell2_tgt[r] != C.cell2_tgt[b]) return fail("vcomp endpoints wrong");
      } else if (r != -1) {
        return fail("vcomp defined on non-composable pair");
      }
    }
  for (int a = 0; a < N2; ++a)
    if (v2(C.id2[C.cell2_tgt[a]], a) != a || v2(a, C.id2[C.cell2_src[a]]) != a) return fail("vertical unit law fails");
  for (int c = 0; c < N2; ++c)
    for (int b = 0; b < N2; ++b) {
      if (C.cell2_tgt[b] != C.cell2_src[c]) continue;
      for (int a = 0; a < N2; ++a) {
        if (C.cell2_tgt[a] != C.cell2_src[b]) continue;
        if (v2(c, v2(b, a)) != v2(v2(c, b), a)) return fail("vcomp associativity fails");
      }
    }

  auto obj_composable = [&](int b, int a) {
    return C.cell1_tgt[C.cell2_src[a]] == C.cell1_src[C.cell2_src[b]];
  };
  auto h2 = [&](int b, int a) { return C.hcomp2[static_cast<size_t>(b) * N2 + a]; };
  for (int b = 0; b < N2; ++b)
    for (int a = 0; a < N2; ++a) {
      const int r = h2(b, a);
      if (obj_composable(b, a)) {
        if (r < 0) return fail("hcomp2 undefined on composable pair");
        if (C.cell2_src[r] != h1(C.cell2_src[b], C.cell2_src[a]) ||
            C.cell2_tgt[r] != h1(C.cell2_tgt[b], C.cell2_tgt[a]))
          return fail("hcomp2 endpoints wrong");
      } else if (r != -1) {
        return fail("hcomp2 defined on non-composable pair");
      }
    }
  // hcomp2 on identities, associativity, interchange
  for (int g = 0; g < N1; ++g)
    for (int f = 0; f < N1; ++f) {
      if (C.cell1_tgt[f] != C.cell1_src[g]) continue;
      if (h2(C.id2[g], C.id2[f]) != C.id2[h1(g, f)]) return fail("hcomp2 of identity 2-cells fails");
    }
  for (int c = 0; c < N2; ++c)
    for (int b = 0; b < N2; ++b) {
      if (!obj_composable(c, b)) continue;
      for (int a = 0; a < N2; ++a) {
        if (!obj_composable(b, a)) continue;
        if (h2(c, h2(b, a)) != h2(h2(c, b), a)) return fail("hcomp2 associativity fails");
      }
    }
  for (int b2 = 0; b2 < N2; ++b2)
    for (int b1 = 0; b1 < N2; ++b1) {
      if (C.cell2_tgt[b1] != C.cell2_src[b2]) continue;
      for (int a2 = 0; a2 < N2; ++a2) {
        if (!obj_composable(b2, a2)) continue;
        for (int a1 = 0; a1 < N2; ++a1) {
          if (C.cell2_tgt[a1] != C.cell2_src[a2]) continue;
          if (h2(v2(b2, b1), v2(a2, a1)) != v2(h2(b2, a2), h2(b1, a1))) return fail("interchange law fails");
        }
      }
    }

  return {};
}

int MultiSuspension::pair_index(int i, int j) const {
  const int n = static_cast<int>(factors.size()) + 1;
  if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("pair_index: out of range");
  return i * n + j;
}

int MultiSuspension::local_of_one_cell(int cell, int* i, int* j) const {
  const int n = r() + 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int p = a * n + b;
      const int count = homs[p].num_objects;
      if (cell >= cell1_offset[p] && cell < cell1_offset[p] + count) {
        *i = a;
        *j = b;
        return cell - cell1_offset[p];
      }
    }
  throw std::invalid_argument("local_of_one_cell: cell out of range");
}

int MultiSuspension::local_of_two_cell(int cell, int* i, int* j) const {
  const int n = r() + 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int p = a * n + b;
      const int count = homs[p].num_morphisms();
      if (cell >= cell2_offset[p] && cell < cell2_offset[p] + count) {
        *i = a;
        *j = b;
        return cell - cell2_offset[p];
      }
    }
  throw std::invalid_argument("local_of_two_cell: cell out of range");
}

MultiSuspension multi_suspension(const std::vector<FinCategory>& Ds) {
  if (Ds.empty()) throw std::invalid_argument("multi_suspension: need at least one category");
  MultiSuspension S;
  S.factors = Ds;
  const int r = static_cast<int>(Ds.size());
  const int n = r + 1;
  S.homs.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i > j) {
        S.homs[i * n + j] = ordinal(-1);
        continue;
      }
      FinCategory h = ordinal(0);
      for (int t = i; t < j; ++t) h = product(h, Ds[t]);  // factors D_{i+1}..D_j
      S.homs[i * n + j] = std::move(h);
    }

  TwoCategory& C = S.cat;
  C.num_objects = n;
  S.cell1_offset.resize(static_cast<size_t>(n) * n);
  S.cell2_offset.resize(static_cast<size_t>(n) * n);
  std::vector<int> cell_i, cell_j, cell_local;   // per 1-cell
  std::vector<int> two_i, two_j, two_local;      // per 2-cell
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int p = i * n + j;
      const FinCategory& h = S.homs[p];
      S.cell1_offset[p] = C.num_one_cells();
      for (int o = 0; o < h.num_objects; ++o) {
        C.cell1_src.push_back(i);
        C.cell1_tgt.push_back(j);
        cell_i.push_back(i);
        cell_j.push_back(j);
        cell_local.push_back(o);
      }
      S.cell2_offset[p] = C.num_two_cells();
      for (int m = 0; m < h.num_morphisms(); ++m) {
        C.cell2_src.push_back(S.cell1_offset[p] + h.mor_src[m]);
        C.cell2_tgt.push_back(S.cell1_offset[p] + h.mor_tgt[m]);
        two_i.push_back(i);
        two_j.push_back(j);
        two_local.push_back(m);
      }
    }

  C.id1.resize(n);
  for (int i = 0; i < n; ++i) C.id1[i] = S.one_cell(i, i, 0);
  const int N1 = C.num_one_cells(), N2 = C.num_two_cells();
  C.id2.resize(N1);
  for (int f = 0; f < N1; ++f)
    C.id2[f] = S.two_cell(cell_i[f], cell_j[f], S.homs[cell_i[f] * n + cell_j[f]].identity[cell_local[f]]);

  // tuple concatenation: the composite's local index is big-endian, the
  // first leg's factors being most significant
  C.hcomp1.assign(static_cast<size_t>(N1) * N1, -1);
  for (int g = 0; g < N1; ++g)
    for (int f = 0; f < N1; ++f) {
      if (cell_j[f] != cell_i[g]) continue;
      const int i = cell_i[f], j = cell_j[f], k2 = cell_j[g];
      C.hcomp1[static_cast<size_t>(g) * N1 + f] =
          S.one_cell(i, k2, cell_local[f] * S.homs[j * n + k2].num_objects + cell_local[g]);
    }

  C.vcomp.assign(static_cast<size_t>(N2) * N2, -1);
  for (int b = 0; b < N2; ++b)
    for (int a = 0; a < N2; ++a) {
      if (C.cell2_tgt[a] != C.cell2_src[b]) continue;
      const FinCategory& h = S.homs[two_i[a] * n + two_j[a]];
      C.vcomp[static_cast<size_t>(b) * N2 + a] =
          S.two_cell(two_i[a], two_j[a],
                     h.compose_table[static_cast<size_t>(two_local[b]) * h.num_morphisms() + two_local[a]]);
    }

  C.hcomp2.assign(static_cast<size_t>(N2) * N2, -1);
  for (int b = 0; b < N2; ++b)
    for (int a = 0; a < N2; ++a) {
      if (two_j[a] != two_i[b]) continue;
      const int i = two_i[a], j = two_j[a], k2 = two_j[b];
      C.hcomp2[static_cast<size_t>(b) * N2 + a] =
          S.two_cell(i, k2, two_local[a] * S.homs[j * n + k2].num_morphisms() + two_local[b]);
    }

  return S;
}

MultiSuspension suspension(const FinCategory& D) { return multi_suspension({D}); }

namespace {

ValidationResult triangle_valid(const TwoCategory& C, const Triangle& t) {
  auto fail = [](const std::string& m) { return ValidationResult{false, m}; };
  const int N1 = C.num_one_cells(), N2 = C.num_two_cells();
  if (t.a < 0 || t.a >= N1 || t.b < 0 || t.b >= N1 || t.c < 0 || t.c >= N1) return fail("triangle edge out of range");
  if (t.theta < 0 || t.theta >= N2) return fail("triangle 2-cell out of range");
  if (C.cell1_tgt[t.a] != C.cell1_src[t.b]) return fail("triangle legs not composable");
  if (C.cell1_src[t.c] != C.cell1_src[t.a] || C.cell1_tgt[t.c] != C.cell1_tgt[t.b])
    return fail("triangle long edge has wrong endpoints");
  const int ba = C.hcomp1[static_cast<size_t>(t.b) * N1 + t.a];
  if (C.cell2_src[t.theta] != t.c || C.cell2_tgt[t.theta] != ba)
    return fail("triangle 2-cell is not c => b∘a");
  return {};
}

}  // namespace

PastingCheck pasting_relation(const TwoCategory& C, const std::array<Triangle, 4>& face) {
  for (int i = 0; i < 4; ++i) {
    const auto v = triangle_valid(C, face[i]);
    if (!v.ok) return {PastingStatus::incompatible_boundary, "face " + std::to_string(i) + ": " + v.message};
  }
  const int f01 = face[3].a, f12 = face[3].b, f02 = face[3].c;
  const int f13 = face[2].b, f03 = face[2].c, f23 = face[1].b;
  auto mismatch = [&](bool bad, const char* what) {
    return bad ? PastingCheck{PastingStatus::incompatible_boundary, what} : PastingCheck{};
  };
  if (auto c = mismatch(face[2].a != f01, "faces 2 and 3 disagree on edge 01"); !c.holds()) return c;
  if (auto c = mismatch(face[1].a != f02, "faces 1 and 3 disagree on edge 02"); !c.holds()) return c;
  if (auto c = mismatch(face[1].c != f03, "faces 1 and 2 disagree on edge 03"); !c.holds()) return c;
  if (auto c = mismatch(face[0].a != f12, "faces 0 and 3 disagree on edge 12"); !c.holds()) return c;
  if (auto c = mismatch(face[0].c != f13, "faces 0 and 2 disagree on edge 13"); !c.holds()) return c;
  if (auto c = mismatch(face[0].b != f23, "faces 0 and 1 disagree on edge 23"); !c.holds()) return c;

  // both sides normalized to a single vertical composite in hom(v0, v3)
  const int lhs = C.vcompose(C.whisker_left(f23, face[3].theta), face[1].theta);
  const int rhs = C.vcompose(C.whisker_right(face[0].theta, f01), face[2].theta);
  if (lhs != rhs) return {PastingStatus::relation_fails, "pasting relation fails"};
  return {};
}

namespace {

std::vector<Triangle> all_triangles(const TwoCategory& C) {
  std::vector<Triangle> out;
  const int N1 = C.num_one_cells(), N2 = C.num_two_cells();
  for (int a = 0; a < N1; ++a)
    for (int b = 0; b < N1; ++b) {
      if (C.cell1_tgt[a] != C.cell1_src[b]) continue;
      const int ba = C.hcomp1[static_cast<size_t>(b) * N1 + a];
      for (int c = 0; c < N1; ++c) {
        if (C.cell1_src[c] != C.cell1_src[a] || C.cell1_tgt[c] != C.cell1_tgt[b]) continue;
        for (int theta = 0; theta < N2; ++theta)
          if (C.cell2_src[theta] == c && C.cell2_tgt[theta] == ba) out.push_back({a, b, c, theta});
      }
    }
  return out;
}

std::vector<Tetrahedron> all_tetrahedra(const TwoCategory& C, const std::vector<Triangle>& tris) {
  // d3 = (f01,f12,f02,.), d1 = (f02,f23,f03,.), d2 = (f01,f13,f03,.),
  // d0 = (f12,f23,f13,.)
  std::vector<Tetrahedron> out;
  std::map<int, std::vector<int>> by_a;
  std::map<std::pair<int, int>, std::vector<int>> by_ac;
  std::map<std::array<int, 3>, std::vector<int>> by_abc;
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
    by_a[tris[t].a].push_back(t);
    by_ac[{tris[t].a, tris[t].c}].push_back(t);
    by_abc[{tris[t].a, tris[t].b, tris[t].c}].push_back(t);
  }
  for (const Triangle& d3 : tris) {
    auto it1 = by_a.find(d3.c);
    if (it1 == by_a.end()) continue;
    for (int i1 : it1->second) {
      const Triangle& d1 = tris[i1];
      auto it2 = by_ac.find({d3.a, d1.c});
      if (it2 == by_ac.end()) continue;
      for (int i2 : it2->second) {
        const Triangle& d2 = tris[i2];
        auto it0 = by_abc.find({d3.b, d1.b, d2.b});
        if (it0 == by_abc.end()) continue;
        for (int i0 : it0->second) {
          const Triangle& d0 = tris[i0];
          const std::array<Triangle, 4> faces{d0, d1, d2, d3};
          if (pasting_relation(C, faces).holds()) out.push_back(Tetrahedron{faces});
        }
      }
    }
  }
  return out;
}

std::vector<FourSimplex> all_four_simplices(const std::vector<Tetrahedron>& tets) {
  std::vector<FourSimplex> out;
  std::map<Triangle, std::vector<int>> by0;
  std::map<std::pair<Triangle, Triangle>, std::vector<int>> by01;
  std::map<std::array<Triangle, 3>, std::vector<int>> by012;
  std::map<std::array<Triangle, 4>, std::vector<int>> by0123;
  for (int t = 0; t < static_cast<int>(tets.size()); ++t) {
    const auto& f = tets[t].face;
    by0[f[0]].push_back(t);
    by01[{f[0], f[1]}].push_back(t);
    by012[{f[0], f[1], f[2]}].push_back(t);
    by0123[{f[0], f[1], f[2], f[3]}].push_back(t);
  }
  for (const Tetrahedron& T0 : tets) {
    auto it1 = by0.find(T0.face[0]);
    if (it1 == by0.end()) continue;
    for (int i1 : it1->second) {
      const Tetrahedron& T1 = tets[i1];
      auto it2 = by01.find({T0.face[1], T1.face[1]});
      if (it2 == by01.end()) continue;
      for (int i2 : it2->second) {
        const Tetrahedron& T2 = tets[i2];
        auto it3 = by012.find({T0.face[2], T1.face[2], T2.face[2]});
        if (it3 == by012.end()) continue;
        for (int i3 : it3->second) {
          const Tetrahedron& T3 = tets[i3];
          auto it4 = by0123.find({T0.face[3], T1.face[3], T2.face[3], T3.face[3]});
          if (it4 == by0123.end()) continue;
          for (int i4 : it4->second) out.push_back(FourSimplex{{T0, T1, T2, T3, tets[i4]}});
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<DuskinSimplex> nerve_simplices(const TwoCategory& C, int n) {
  if (n < 0 || n > 4) throw std::invalid_argument("nerve_simplices: n must be in 0..4");
  std::vector<DuskinSimplex> out;
  if (n == 0) {
    for (int o = 0; o < C.num_objects; ++o) out.push_back({ObjectSimplexD{o}});
    return out;
  }
  if (n == 1) {
    for (int c = 0; c < C.num_one_cells(); ++c) out.push_back({OneCellSimplexD{c}});
    return out;
  }
  const std::vector<Triangle> tris = all_triangles(C);
  if (n == 2) {
    for (const Triangle& t : tris) out.push_back({t});
    return out;
  }
  const std::vector<Tetrahedron> tets = all_tetrahedra(C, tris);
  if (n == 3) {
    for (const Tetrahedron& t : tets) out.push_back({t});
    return out;
  }
  for (const FourSimplex& s : all_four_simplices(tets)) out.push_back({s});
  return out;
}

DuskinSimplex duskin_face(const TwoCategory& C, const DuskinSimplex& s, int i) {
  const int d = s.dim();
  if (d < 1) throw std::invalid_argument("duskin_face: dimension 0 has no faces");
  if (i < 0 || i > d) throw std::invalid_argument("duskin_face: index out of range");
  switch (d) {
    case 1: {
      const int c = std::get<OneCellSimplexD>(s.data).cell;
      return {ObjectSimplexD{i == 0 ? C.cell1_tgt[c] : C.cell1_src[c]}};
    }
    case 2: {
      const Triangle& t = std::get<Triangle>(s.data);
      return {OneCellSimplexD{i == 0 ? t.b : (i == 1 ? t.c : t.a)}};
    }
    case 3:
      return {std::get<Tetrahedron>(s.data).face[i]};
    default:
      return {std::get<FourSimplex>(s.data).face[i]};
  }
}

namespace {

struct SuspensionView {
  const MultiSuspension& S;
  int x, y, idx, idy;

  explicit SuspensionView(const MultiSuspension& s) : S(s) {
    if (s.r() != 1) throw std::invalid_argument("phi: two-point suspension required");
    x = 0;
    y = 1;
    idx = s.cat.id1[0];
    idy = s.cat.id1[1];
  }
  int one(int obj) const { return S.one_cell(0, 1, obj); }
  int two(int mor) const { return S.two_cell(0, 1, mor); }
  int obj_of(int cell) const {
    int i, j;
    const int local = S.local_of_one_cell(cell, &i, &j);
    if (i != 0 || j != 1) throw std::invalid_argument("phi_inverse: 1-cell not in hom(x,y)");
    return local;
  }
  int mor_of(int cell) const {
    int i, j;
    const int local = S.local_of_two_cell(cell, &i, &j);
    if (i != 0 || j != 1) throw std::invalid_argument("phi_inverse: 2-cell not in hom(x,y)");
    return local;
  }
};

Triangle constant_triangle(const TwoCategory& C, int obj) {
  const int e = C.id1[obj];
  return {e, e, e, C.id2[e]};
}

}  // namespace

DuskinSimplex phi(const MultiSuspension& S, const MatSimplex& s) {
  const SuspensionView V(S);
  const int n = s.dim();
  if (n > 3) throw std::invalid_argument("phi: dimension must be <= 3");
  if (s.is_empty_row() || s.is_empty_col()) {
    const int o = s.is_empty_row() ? V.y : V.x;
    switch (n) {
      case 0: return {ObjectSimplexD{o}};
      case 1: return {OneCellSimplexD{S.cat.id1[o]}};
      case 2: return {constant_triangle(S.cat, o)};
      default: {
        const Triangle t = constant_triangle(S.cat, o);
        return {Tetrahedron{{t, t, t, t}}};
      }
    }
  }
  switch (n) {
    case 1:
      return {OneCellSimplexD{V.one(s.entry(0, 0))}};
    case 2:
      if (s.k == 1)  // column: a = id_x, theta the vertical arrow
        return {Triangle{V.idx, V.one(s.entry(1, 0)), V.one(s.entry(0, 0)), V.two(s.vert_arrow(0, 0))}};
      // row: b = id_y, theta the horizontal arrow
      return {Triangle{V.one(s.entry(0, 0)), V.idy, V.one(s.entry(0, 1)), V.two(s.horz_arrow(0, 0))}};
    case 3: {
      const FinCategory& D = S.factors[0];
      Tetrahedron t;
      for (int i = 0; i <= 3; ++i) t.face[i] = std::get<Triangle>(phi(S, face(D, s, i)).data);
      const auto check = pasting_relation(S.cat, t.face);
      if (!check.holds()) throw std::logic_error("phi: image tetrahedron invalid: " + check.message);
      return {t};
    }
    default:
      throw std::invalid_argument("phi: dimension 0 matrices are empty rows/columns");
  }
}

namespace {

struct FactorCollapse {
  const MultiSuspension& S;
  int factor;  // 1-based
  const MultiSuspension& target;

  // big-endian digit of a local tuple index at our factor, for a tuple
  // spanning factors up to j
  int digit(int j, int local, bool morphism) const {
    int suffix = 1;
    for (int t = factor + 1; t <= j; ++t)
      suffix *= morphism ? S.factors[t - 1].num_morphisms() : S.factors[t - 1].num_objects;
    const int base = morphism ? S.factors[factor - 1].num_morphisms() : S.factors[factor - 1].num_objects;
    return (local / suffix) % base;
  }

  int obj(int o) const { return o < factor ? 0 : 1; }

  int one(int cell) const {
    int i, j;
    const int local = S.local_of_one_cell(cell, &i, &j);
    if (j < factor) return target.cat.id1[0];
    if (i >= factor) return target.cat.id1[1];
    return target.one_cell(0, 1, digit(j, local, false));
  }

  int two(int cell) const {
    int i, j;
    const int local = S.local_of_two_cell(cell, &i, &j);
    if (j < factor) return target.cat.id2[target.cat.id1[0]];
    if (i >= factor) return target.cat.id2[target.cat.id1[1]];
    return target.two_cell(0, 1, digit(j, local, true));
  }

  Triangle tri(const Triangle& t) const { return {one(t.a), one(t.b), one(t.c), two(t.theta)}; }

  Tetrahedron tet(const Tetrahedron& t) const {
    Tetrahedron out;
    for (int i = 0; i < 4; ++i) out.face[i] = tri(t.face[i]);
    return out;
  }
};

}  // namespace

DuskinSimplex collapse_to_factor(const MultiSuspension& S, int factor, const MultiSuspension& target,
                                 const DuskinSimplex& t) {
  if (factor < 1 || factor > S.r()) throw std::invalid_argument("collapse_to_factor: factor out of range");
  if (target.r() != 1 || !(target.factors[0] == S.factors[factor - 1]))
    throw std::invalid_argument("collapse_to_factor: target is not the suspension of that factor");
  const FactorCollapse c{S, factor, target};
  switch (t.dim()) {
    case 0: return {ObjectSimplexD{c.obj(std::get<ObjectSimplexD>(t.data).object)}};
    case 1: return {OneCellSimplexD{c.one(std::get<OneCellSimplexD>(t.data).cell)}};
    case 2: return {c.tri(std::get<Triangle>(t.data))};
    case 3: return {c.tet(std::get<Tetrahedron>(t.data))};
    default: {
      const auto& fs = std::get<FourSimplex>(t.data);
      FourSimplex out;
      for (int i = 0; i < 5; ++i) out.face[i] = c.tet(fs.face[i]);
      return {out};
    }
  }
}

MatSimplex phi_inverse(const MultiSuspension& S, const DuskinSimplex& t) {
  const SuspensionView V(S);
  const int n = t.dim();
  if (n > 3) throw std::invalid_argument("phi_inverse: dimension must be <= 3");
  const FinCategory& D = S.factors[0];

  auto from_obj = [&](int o, int dim) {
    return o == V.y ? empty_row_simplex(dim) : empty_col_simplex(dim);
  };

  switch (n) {
    case 0:
      return from_obj(std::get<ObjectSimplexD>(t.data).object, 0);
    case 1: {
      const int c = std::get<OneCellSimplexD>(t.data).cell;
      if (c == V.idx) return empty_col_simplex(1);
      if (c == V.idy) return empty_row_simplex(1);
      return object_simplex(D, V.obj_of(c));
    }
    case 2: {
      const Triangle& tr = std::get<Triangle>(t.data);
      const auto valid = triangle_valid(S.cat, tr);
      if (!valid.ok) throw std::invalid_argument("phi_inverse: " + valid.message);
      if (tr.a == V.idx && tr.b == V.idx) return empty_col_simplex(2);
      if (tr.a == V.idy) return empty_row_simplex(2);
      MatSimplex m;
      if (tr.a == V.idx) {  // type 1 column
        m.k = 1;
        m.l = 0;
        m.entries = {V.obj_of(tr.c), V.obj_of(tr.b)};
        m.vert = {V.mor_of(tr.theta)};
      } else {  // type 0 row
        m.k = 0;
        m.l = 1;
        m.entries = {V.obj_of(tr.a), V.obj_of(tr.c)};
        m.horz = {V.mor_of(tr.theta)};
      }
      return m;
    }
    default: {
      const Tetrahedron& tet = std::get<Tetrahedron>(t.data);
      const auto check = pasting_relation(S.cat, tet.face);
      if (!check.holds()) throw std::invalid_argument("phi_inverse: " + check.message);
      const int f01 = tet.face[3].a, f12 = tet.face[3].b, f02 = tet.face[3].c;
      const int f13 = tet.face[2].b, f03 = tet.face[2].c, f23 = tet.face[1].b;
      const int v0 = S.cat.cell1_src[f01], v1 = S.cat.cell1_tgt[f01];
      const int v2 = S.cat.cell1_tgt[f12], v3 = S.cat.cell1_tgt[f23];
      const std::array<int, 4> verts{v0, v1, v2, v3};
      int k = -1;
      for (int i = 0; i < 4; ++i)
        if (verts[i] == V.x) k = i;
      if (k == -1) return empty_row_simplex(3);
      if (k == 3) return empty_col_simplex(3);
      MatSimplex m;
      if (k == 0) {
        m.k = 0;
        m.l = 2;
        m.entries = {V.obj_of(f01), V.obj_of(f02), V.obj_of(f03)};
        m.horz = {V.mor_of(tet.face[3].theta), V.mor_of(tet.face[1].theta)};
      } else if (k == 1) {
        m.k = 1;
        m.l = 1;
        m.entries = {V.obj_of(f02), V.obj_of(f03), V.obj_of(f12), V.obj_of(f13)};
        m.vert = {V.mor_of(tet.face[3].theta), V.mor_of(tet.face[2].theta)};
        m.horz = {V.mor_of(tet.face[1].theta), V.mor_of(tet.face[0].theta)};
      } else {
        m.k = 2;
        m.l = 0;
        m.entries = {V.obj_of(f03), V.obj_of(f13), V.obj_of(f23)};
        m.vert = {V.mor_of(tet.face[2].theta), V.mor_of(tet.face[0].theta)};
      }
      const auto valid = validate_matrix(D, m);
      if (!valid.ok) throw std::logic_error("phi_inverse: assembled matrix invalid: " + valid.message);
      return m;
    }
  }
}

}  // namespace dusk
