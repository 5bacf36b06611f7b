#include "dusk/json_io.hpp"

#include <stdexcept>

namespace dusk {

using nlohmann::json;

json encode(const FinCategory& c) {
  json j;
  j["objects"] = json::array();
  for (int o = 0; o < c.num_objects; ++o) j["objects"].push_back(o);
  j["morphisms"] = json::array();
  for (int m = 0; m < c.num_morphisms(); ++m)
    j["morphisms"].push_back({{"id", m}, {"src", c.mor_src[m]}, {"tgt", c.mor_tgt[m]}});
  j["identities"] = c.identity;
  j["compose"] = json::array();
  const int M = c.num_morphisms();
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      const int r = c.compose_table[static_cast<size_t>(g) * M + f];
      if (r >= 0) j["compose"].push_back({g, f, r});
    }
  return j;
}

json encode(const FunctorData& f) {
  return json{{"obj_map", f.obj_map}, {"mor_map", f.mor_map}};
}

json encode(const MatSimplex& s) {
  if (s.is_empty_row()) return json{{"k", -1}, {"n", s.dim()}};
  if (s.is_empty_col()) return json{{"l", -1}, {"n", s.dim()}};
  return json{{"k", s.k}, {"l", s.l}, {"entries", s.entries}, {"vert_arrows", s.vert}, {"horz_arrows", s.horz}};
}

json encode(const TupleSimplex& t) {
  json parts = json::array();
  for (const auto& p : t.parts) parts.push_back(encode(p));
  return json{{"n", t.n}, {"parts", parts}};
}

json encode(const TwoCategory& c) {
  json j;
  j["objects"] = c.num_objects;
  j["one_cells"] = json::array();
  for (int f = 0; f < c.num_one_cells(); ++f)
    j["one_cells"].push_back({{"id", f}, {"src", c.cell1_src[f]}, {"tgt", c.cell1_tgt[f]}});
  j["identities1"] = c.id1;
  j["two_cells"] = json::array();
  for (int a = 0; a < c.num_two_cells(); ++a)
    j["two_cells"].push_back({{"id", a}, {"src", c.cell2_src[a]}, {"tgt", c.cell2_tgt[a]}});
  j["identities2"] = c.id2;
  auto table = [](const std::vector<int>& t, int n) {
    json out = json::array();
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) {
        const int r = t[static_cast<size_t>(b) * n + a];
        if (r >= 0) out.push_back({b, a, r});
      }
    return out;
  };
  j["hcomp1"] = table(c.hcomp1, c.num_one_cells());
  j["vcomp"] = table(c.vcomp, c.num_two_cells());
  j["hcomp2"] = table(c.hcomp2, c.num_two_cells());
  return j;
}

namespace {

json encode_triangle(const Triangle& t) {
  return json{{"a", t.a}, {"b", t.b}, {"c", t.c}, {"theta", t.theta}};
}

json encode_tetrahedron(const Tetrahedron& t) {
  json faces = json::array();
  for (const auto& f : t.face) faces.push_back(encode_triangle(f));
  return json{{"faces", faces}};
}

}  // namespace

json encode(const DuskinSimplex& s) {
  json j;
  j["dim"] = s.dim();
  switch (s.dim()) {
    case 0: j["object"] = std::get<ObjectSimplexD>(s.data).object; break;
    case 1: j["one_cell"] = std::get<OneCellSimplexD>(s.data).cell; break;
    case 2: j.update(encode_triangle(std::get<Triangle>(s.data))); break;
    case 3: j.update(encode_tetrahedron(std::get<Tetrahedron>(s.data))); break;
    default: {
      json faces = json::array();
      for (const auto& f : std::get<FourSimplex>(s.data).face) faces.push_back(encode_tetrahedron(f));
      j["faces"] = faces;
    }
  }
  return j;
}

json encode(const Shuffle& s) { return json{{"k", s.k}, {"l", s.l}, {"steps", s.steps()}}; }

json encode(const Triangulation& t) {
  json tris = json::array();
  for (const auto& tr : t.triangles) tris.push_back({tr[0], tr[1], tr[2]});
  return json{{"n", t.n}, {"triangles", tris}};
}

json encode(const LabeledPath& p) { return json{{"objects", p.objects}, {"arrows", p.arrows}}; }

FinCategory decode_fincategory(const json& j) {
  FinCategory c;
  c.num_objects = static_cast<int>(j.at("objects").size());
  const auto& mors = j.at("morphisms");
  const int M = static_cast<int>(mors.size());
  c.mor_src.resize(M);
  c.mor_tgt.resize(M);
  for (const auto& m : mors) {
    const int id = m.at("id").get<int>();
    if (id < 0 || id >= M) throw std::invalid_argument("decode_fincategory: morphism id out of range");
    c.mor_src[id] = m.at("src").get<int>();
    c.mor_tgt[id] = m.at("tgt").get<int>();
  }
  c.identity = j.at("identities").get<std::vector<int>>();
  c.compose_table.assign(static_cast<size_t>(M) * M, -1);
  for (const auto& t : j.at("compose")) {
    const int g = t.at(0).get<int>(), f = t.at(1).get<int>(), r = t.at(2).get<int>();
    c.compose_table[static_cast<size_t>(g) * M + f] = r;
  }
  const auto v = validate_category(c);
  if (!v.ok) throw std::invalid_argument("decode_fincategory: " + v.message);
  return c;
}

MatSimplex decode_matsimplex(const json& j) {
  MatSimplex s;
  if (j.contains("k") && j.at("k").get<int>() == -1) return empty_row_simplex(j.at("n").get<int>());
  if (j.contains("l") && j.at("l").get<int>() == -1) return empty_col_simplex(j.at("n").get<int>());
  s.k = j.at("k").get<int>();
  s.l = j.at("l").get<int>();
  s.entries = j.at("entries").get<std::vector<int>>();
  s.vert = j.at("vert_arrows").get<std::vector<int>>();
  s.horz = j.at("horz_arrows").get<std::vector<int>>();
  return s;
}

}  // namespace dusk
