#include "dusk/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dusk/freecell.hpp"

namespace dusk::cli {

using nlohmann::json;

const char* to_string(CommandResult::Status s) {
  switch (s) {
    case CommandResult::Status::ok: return "ok";
    case CommandResult::Status::violation: return "violation";
    default: return "error";
  }
}

namespace {

CommandResult error_result(const std::string& msg) {
  CommandResult r;
  r.status = CommandResult::Status::error;
  r.diagnostics.push_back(msg);
  return r;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < std::min(k, n - k); ++i) r = r * (n - i) / (i + 1);
  return r;
}

// first-counterexample reporting
struct Reporter {
  CommandResult res;
  bool ok() const { return res.status == CommandResult::Status::ok; }
  void violation(const std::string& msg) {
    if (!ok()) return;
    res.status = CommandResult::Status::violation;
    res.diagnostics.push_back(msg);
  }
};

}  // namespace

CategorySpec parse_category_spec(const std::string& text) {
  CategorySpec spec;
  spec.text = text;
  if (text == "square") {
    spec.single = product(ordinal(1), ordinal(1));
    return spec;
  }
  if (text.rfind("ordinal:", 0) == 0) {
    spec.single = ordinal(std::stoi(text.substr(8)));
    return spec;
  }
  if (text.rfind("theta:", 0) == 0) {
    // theta:[r|n1,...,nr]
    const std::string body = text.substr(6);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw std::invalid_argument("category spec: expected theta:[r|n1,...,nr]");
    const std::string inner = body.substr(1, body.size() - 2);
    const size_t bar = inner.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("category spec: missing | in theta object");
    const int r = std::stoi(inner.substr(0, bar));
    std::vector<int> widths;
    std::stringstream ws(inner.substr(bar + 1));
    std::string tok;
    while (std::getline(ws, tok, ',')) widths.push_back(std::stoi(tok));
    spec.is_tuple = true;
    spec.factors = theta2_object(r, widths);
    return spec;
  }
  throw std::invalid_argument("unknown category spec: " + text);
}

CommandResult cmd_enumerate(const std::string& spec_text, const EnumerateOptions& opt, std::ostream& lines) {
  CategorySpec spec;
  try {
    spec = parse_category_spec(spec_text);
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
  if (opt.dim < 0) return error_result("dimension must be >= 0");
  if (opt.dim > opt.budget)
    return error_result("dimension " + std::to_string(opt.dim) + " beyond budget " + std::to_string(opt.budget) +
                        " (raise with --budget)");
  CommandResult r;
  long long count = 0;
  if (opt.oracle) {
    if (opt.dim > 4) return error_result("the nerve oracle is bounded by dimension 4");
    if (opt.nondegenerate) return error_result("--nondegenerate is not defined on the oracle side");
    const MultiSuspension S = spec.is_tuple ? multi_suspension(spec.factors) : suspension(spec.single);
    for (const DuskinSimplex& t : nerve_simplices(S.cat, opt.dim)) {
      ++count;
      if (!opt.count_only) lines << encode(t) << "\n";
    }
  } else if (!spec.is_tuple) {
    for_each_simplex(spec.single, opt.dim, [&](const MatSimplex& s) {
      if (opt.nondegenerate && !is_nondegenerate(spec.single, s)) return;
      ++count;
      if (!opt.count_only) lines << encode(s) << "\n";
    });
  } else if (opt.count_only && !opt.nondegenerate) {
    count = tuple_count(spec.factors, opt.dim);
  } else {
    for (const TupleSimplex& t : tuple_simplices(spec.factors, opt.dim)) {
      if (opt.nondegenerate && !tuple_nondegenerate(spec.factors, t)) continue;
      ++count;
      if (!opt.count_only) lines << encode(t) << "\n";
    }
  }
  r.payload = json{{"count", count}};
  r.streamed = !opt.count_only;
  return r;
}

namespace {

std::vector<std::pair<std::string, FinCategory>> scan_categories(const std::string& cat_spec,
                                                                 std::vector<std::string> defaults) {
  std::vector<std::pair<std::string, FinCategory>> out;
  if (!cat_spec.empty()) defaults = {cat_spec};
  for (const auto& text : defaults) {
    CategorySpec spec = parse_category_spec(text);
    if (spec.is_tuple) throw std::invalid_argument("this suite needs a single category, not a theta object");
    out.emplace_back(text, std::move(spec.single));
  }
  return out;
}

void check_identities_on(Reporter& rep, const std::string& name, const FinCategory& D, int n,
                         const std::vector<MatSimplex>& sims) {
  auto ctx = [&](const MatSimplex& s, const std::string& what) {
    std::ostringstream os;
    os << "D=" << name << " n=" << n << " " << what << " (simplex " << encode(s) << ")";
    return os.str();
  };
  for (const MatSimplex& s : sims) {
    if (!rep.ok()) return;
    const auto valid = validate_matrix(D, s);
    if (!valid.ok) rep.violation(ctx(s, "invalid matrix: " + valid.message));
    const auto fun_valid = validate_functor(to_functor(D, s));
    if (!fun_valid.ok) rep.violation(ctx(s, "functor view invalid: " + fun_valid.message));

    // d_i d_j = d_{j-1} d_i for i < j
    if (n >= 2)
      for (int j = 1; j <= n && rep.ok(); ++j)
        for (int i = 0; i < j && rep.ok(); ++i)
          if (face(D, face(D, s, j), i) != face(D, face(D, s, i), j - 1))
            rep.violation(ctx(s, "d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" +
                                     std::to_string(j - 1) + " d_" + std::to_string(i)));
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int j = 0; j <= n && rep.ok(); ++j)
      for (int i = 0; i <= j && rep.ok(); ++i)
        if (degeneracy(D, degeneracy(D, s, j), i) != degeneracy(D, degeneracy(D, s, i), j + 1))
          rep.violation(ctx(s, "s_" + std::to_string(i) + " s_" + std::to_string(j) + " != s_" +
                                   std::to_string(j + 1) + " s_" + std::to_string(i)));
    // d_i s_j relations
    for (int j = 0; j <= n && rep.ok(); ++j) {
      const MatSimplex sj = degeneracy(D, s, j);
      for (int i = 0; i <= n + 1 && rep.ok(); ++i) {
        const MatSimplex dis = face(D, sj, i);
        if (i == j || i == j + 1) {
          if (dis != s) rep.violation(ctx(s, "d_" + std::to_string(i) + " s_" + std::to_string(j) + " != id"));
        } else if (i < j) {
          if (dis != degeneracy(D, face(D, s, i), j - 1))
            rep.violation(ctx(s, "d_" + std::to_string(i) + " s_" + std::to_string(j) + " != s_" +
                                     std::to_string(j - 1) + " d_" + std::to_string(i)));
        } else {
          if (dis != degeneracy(D, face(D, s, i - 1), j))
            rep.violation(ctx(s, "d_" + std::to_string(i) + " s_" + std::to_string(j) + " != s_" +
                                     std::to_string(j) + " d_" + std::to_string(i - 1)));
        }
      }
    }
    // the type map is simplicial
    if (n >= 1)
      for (int i = 0; i <= n && rep.ok(); ++i) {
        const int expected = i <= s.k ? s.k - 1 : s.k;
        if (type_of(face(D, s, i)) != expected) rep.violation(ctx(s, "type_of(d_" + std::to_string(i) + ") wrong"));
      }
    for (int i = 0; i <= n && rep.ok(); ++i) {
      const int expected = s.is_empty_row() ? -1 : (i <= s.k ? s.k + 1 : s.k);
      if (type_of(degeneracy(D, s, i)) != expected)
        rep.violation(ctx(s, "type_of(s_" + std::to_string(i) + ") wrong"));
    }
    // degeneracy retraction: degenerate iff s_i d_i fixes it for some i
    if (n >= 1 && rep.ok()) {
      bool retract = false;
      for (int i = 0; i <= n - 1 && !retract; ++i)
        if (degeneracy(D, face(D, s, i), i) == s) retract = true;
      if (retract == is_nondegenerate(D, s))
        rep.violation(ctx(s, "degeneracy retraction disagrees with is_nondegenerate"));
    }
  }
}

void mutation_probes(Reporter& rep, std::uint64_t seed) {
  // thin targets: any single-entry mutation must break a preservation law
  std::mt19937_64 rng(seed);
  const CatPtr grid = make_cat(product(ordinal(1), opposite(ordinal(1))));
  for (const auto& target : {ordinal(2), product(ordinal(1), ordinal(1))}) {
    const CatPtr tgt = make_cat(target);
    const auto functors = enumerate_functors(grid, tgt);
    for (const FunctorData& f : functors) {
      const auto v = validate_functor(f);
      if (!v.ok) {
        rep.violation("enumerated functor fails validation: " + v.message);
        return;
      }
    }
    for (int probe = 0; probe < 25 && rep.ok(); ++probe) {
      FunctorData f = functors[rng() % functors.size()];
      if (rng() % 2 == 0) {
        const int m = static_cast<int>(rng() % f.mor_map.size());
        const int other = (f.mor_map[m] + 1 + static_cast<int>(rng() % (target.num_morphisms() - 1))) %
                          target.num_morphisms();
        f.mor_map[m] = other;
      } else {
        const int o = static_cast<int>(rng() % f.obj_map.size());
        f.obj_map[o] = (f.obj_map[o] + 1 + static_cast<int>(rng() % (target.num_objects - 1))) % target.num_objects;
      }
      if (validate_functor(f).ok) rep.violation("mutated functor passed validation");
    }
  }
}

CommandResult verify_simplicial_identities(const VerifyOptions& opt) {
  Reporter rep;
  const int max_dim = opt.dim < 0 ? 5 : opt.dim;
  const auto cats = scan_categories(opt.cat, {"ordinal:0", "ordinal:1", "ordinal:2", "square"});
  long long scanned = 0;
  for (const auto& [name, D] : cats)
    for (int n = 0; n <= max_dim && rep.ok(); ++n) {
      const auto sims = simplices(D, n);
      scanned += static_cast<long long>(sims.size());
      check_identities_on(rep, name, D, n, sims);
    }
  if (rep.ok()) mutation_probes(rep, opt.seed);
  rep.res.payload = json{{"simplices_scanned", scanned}, {"max_dim", max_dim}};
  return rep.res;
}

// Boundary spheres of dimension n are (n+1)-tuples of (n-1)-simplices
// satisfying d_i t_j = d_{j-1} t_i; at n = 4 they are found by prefix
// indexing on the face tuples.
std::vector<std::array<int, 5>> spheres_dim4(const FinCategory& D, const std::vector<MatSimplex>& mat3) {
  const int N = static_cast<int>(mat3.size());
  std::vector<std::array<MatSimplex, 4>> fc(N);
  for (int t = 0; t < N; ++t)
    for (int i = 0; i < 4; ++i) fc[t][i] = face(D, mat3[t], i);
  std::map<MatSimplex, std::vector<int>> by0;
  std::map<std::vector<MatSimplex>, std::vector<int>> by01, by012, by0123;
  for (int t = 0; t < N; ++t) {
    by0[fc[t][0]].push_back(t);
    by01[{fc[t][0], fc[t][1]}].push_back(t);
    by012[{fc[t][0], fc[t][1], fc[t][2]}].push_back(t);
    by0123[{fc[t][0], fc[t][1], fc[t][2], fc[t][3]}].push_back(t);
  }
  std::vector<std::array<int, 5>> out;
  for (int t0 = 0; t0 < N; ++t0) {
    auto i1 = by0.find(fc[t0][0]);
    if (i1 == by0.end()) continue;
    for (int t1 : i1->second) {
      auto i2 = by01.find({fc[t0][1], fc[t1][1]});
      if (i2 == by01.end()) continue;
      for (int t2 : i2->second) {
        auto i3 = by012.find({fc[t0][2], fc[t1][2], fc[t2][2]});
        if (i3 == by012.end()) continue;
        for (int t3 : i3->second) {
          auto i4 = by0123.find({fc[t0][3], fc[t1][3], fc[t2][3], fc[t3][3]});
          if (i4 == by0123.end()) continue;
          for (int t4 : i4->second) out.push_back({t0, t1, t2, t3, t4});
        }
      }
    }
  }
  return out;
}

CommandResult verify_coskeletal(const VerifyOptions& opt) {
  Reporter rep;
  const auto cats = scan_categories(opt.cat, {"ordinal:1", "ordinal:2"});
  json stats = json::array();
  for (const auto& [name, D] : cats) {
    if (!rep.ok()) break;
    const auto mat3 = simplices(D, 3);
    const auto mat4 = simplices(D, 4);
    const auto spheres = spheres_dim4(D, mat3);

    // boundaries of genuine 4-simplices, keyed for the cross-check
    std::map<std::vector<MatSimplex>, int> boundary_of;
    for (int s = 0; s < static_cast<int>(mat4.size()); ++s) {
      std::vector<MatSimplex> bd;
      for (int i = 0; i <= 4; ++i) bd.push_back(face(D, mat4[s], i));
      if (!boundary_of.emplace(std::move(bd), s).second)
        rep.violation("D=" + name + ": two distinct 4-simplices share a boundary");
    }
    if (rep.ok() && spheres.size() != mat4.size())
      rep.violation("D=" + name + ": sphere count " + std::to_string(spheres.size()) + " != 4-simplex count " +
                    std::to_string(mat4.size()));
    for (const auto& sph : spheres) {
      if (!rep.ok()) break;
      std::vector<MatSimplex> bd;
      for (int i = 0; i <= 4; ++i) bd.push_back(mat3[sph[i]]);
      const auto it = boundary_of.find(bd);
      if (it == boundary_of.end()) {
        rep.violation("D=" + name + ": compatible sphere is no 4-simplex boundary");
        break;
      }
      MatSimplex filled;
      try {
        filled = coskeletal_fill(D, bd);
      } catch (const std::exception& e) {
        rep.violation("D=" + name + ": fill failed: " + e.what());
        break;
      }
      if (filled != mat4[it->second]) rep.violation("D=" + name + ": fill returned a different simplex");
    }
    // round trip one dimension up
    if (rep.ok())
      for (const MatSimplex& s : simplices(D, 5)) {
        std::vector<MatSimplex> bd;
        for (int i = 0; i <= 5; ++i) bd.push_back(face(D, s, i));
        if (coskeletal_fill(D, bd) != s) {
          rep.violation("D=" + name + ": 5-dimensional fill round trip failed");
          break;
        }
      }
    stats.push_back({{"category", name}, {"spheres", spheres.size()}, {"four_simplices", mat4.size()}});
  }
  rep.res.payload = json{{"scans", stats}};
  return rep.res;
}

int duskin_vertex(const TwoCategory& C, DuskinSimplex s, int v) {
  while (s.dim() > v) s = duskin_face(C, s, s.dim());
  while (s.dim() > 0) s = duskin_face(C, s, 0);
  return std::get<ObjectSimplexD>(s.data).object;
}

CommandResult verify_phi_oracle(const VerifyOptions& opt) {
  Reporter rep;
  const int max_dim = std::min(opt.dim < 0 ? 4 : opt.dim, 4);
  const auto cats = scan_categories(opt.cat, {"ordinal:0", "ordinal:1", "ordinal:2"});
  json stats = json::array();
  for (const auto& [name, D] : cats) {
    if (!rep.ok()) break;
    const MultiSuspension S = suspension(D);
    const auto cat_valid = validate_two_category(S.cat);
    if (!cat_valid.ok) {
      rep.violation("D=" + name + ": suspension invalid: " + cat_valid.message);
      break;
    }
    json per_dim = json::array();
    for (int n = 0; n <= max_dim && rep.ok(); ++n) {
      const auto mats = simplices(D, n);
      const auto nerv = nerve_simplices(S.cat, n);
      per_dim.push_back({{"n", n}, {"count", mats.size()}});
      if (mats.size() != nerv.size()) {
        rep.violation("D=" + name + " n=" + std::to_string(n) + ": |Mat| " + std::to_string(mats.size()) +
                      " != |nerve| " + std::to_string(nerv.size()));
        continue;
      }
      if (n <= 3) {
        // bijectivity: each image occurs in the nerve list exactly once
        std::vector<DuskinSimplex> images;
        for (const MatSimplex& m : mats) images.push_back(phi(S, m));
        for (const DuskinSimplex& t : nerv) {
          const auto hits = std::count(images.begin(), images.end(), t);
          if (hits != 1) {
            rep.violation("D=" + name + " n=" + std::to_string(n) + ": phi image multiplicity " +
                          std::to_string(hits));
            break;
          }
        }
        // face commutation and both round trips
        for (size_t idx = 0; idx < mats.size() && rep.ok(); ++idx) {
          const MatSimplex& m = mats[idx];
          if (phi_inverse(S, images[idx]) != m) rep.violation("D=" + name + ": phi_inverse(phi(m)) != m");
          if (n >= 1)
            for (int i = 0; i <= n && rep.ok(); ++i)
              if (!(phi(S, face(D, m, i)) == duskin_face(S.cat, images[idx], i)))
                rep.violation("D=" + name + " n=" + std::to_string(n) + ": phi does not commute with d_" +
                              std::to_string(i));
          // type k matrices land on simplices whose last x-vertex is k
          if (rep.ok()) {
            int last_x = -1;
            for (int v = 0; v <= n; ++v)
              if (duskin_vertex(S.cat, images[idx], v) == 0) last_x = v;
            if (last_x != type_of(m))
              rep.violation("D=" + name + " n=" + std::to_string(n) + ": last x-vertex != type");
          }
        }
        for (const DuskinSimplex& t : nerv)
          if (rep.ok() && !(phi(S, phi_inverse(S, t)) == t))
            rep.violation("D=" + name + " n=" + std::to_string(n) + ": phi(phi_inverse(t)) != t");
      } else {
        // n = 4: nerve simplex -> five tetrahedra -> matrices -> filler
        const auto mat4 = mats;
        std::map<MatSimplex, int> index_of;
        for (int i = 0; i < static_cast<int>(mat4.size()); ++i) index_of[mat4[i]] = i;
        std::vector<char> hit(mat4.size(), 0);
        for (const DuskinSimplex& t : nerv) {
          if (!rep.ok()) break;
          const auto& fs = std::get<FourSimplex>(t.data);
          std::vector<MatSimplex> bd;
          for (int i = 0; i <= 4; ++i) bd.push_back(phi_inverse(S, DuskinSimplex{fs.face[i]}));
          MatSimplex filled;
          try {
            filled = coskeletal_fill(D, bd);
          } catch (const std::exception& e) {
            rep.violation("D=" + name + " n=4: fill of transported boundary failed: " + std::string(e.what()));
            break;
          }
          const auto it = index_of.find(filled);
          if (it == index_of.end() || hit[it->second]) {
            rep.violation("D=" + name + " n=4: transported fill not a bijection");
            break;
          }
          hit[it->second] = 1;
        }
      }
    }
    stats.push_back({{"category", name}, {"dims", per_dim}});
  }
  rep.res.payload = json{{"scans", stats}};
  return rep.res;
}

CommandResult verify_freecell(const VerifyOptions& opt) {
  Reporter rep;
  for (int m = 1; m <= std::max(1, opt.max_m) && rep.ok(); ++m) {
    const auto v = verify_face_relations(m);
    if (!v.ok) rep.violation("m=" + std::to_string(m) + ": " + v.message);
  }
  rep.res.payload = json{{"max_m", std::max(1, opt.max_m)}};
  return rep.res;
}

}  // namespace

CommandResult cmd_bijection(int n, int k, bool verify_roundtrip, std::ostream& lines) {
  if (n < 2) return error_result("bijection: need n >= 2");
  if (k != -1 && (k < 0 || k > n - 1)) return error_result("bijection: need 0 <= k <= n-1");
  Reporter rep;
  const auto all = enumerate_triangulations(n);
  json counts = json::array();
  for (int kk = (k == -1 ? 0 : k); kk <= (k == -1 ? n - 1 : k); ++kk) {
    const auto constrained = filter_constrained(all, kk);
    const auto shuffles = enumerate_shuffles(kk, n - 1 - kk);
    const long long expect = binomial(n - 1, kk);
    counts.push_back({{"k", kk},
                      {"triangulations", constrained.size()},
                      {"shuffles", shuffles.size()},
                      {"binomial", expect}});
    if (static_cast<long long>(constrained.size()) != expect)
      rep.violation("k=" + std::to_string(kk) + ": constrained triangulation count != binomial");
    if (static_cast<long long>(shuffles.size()) != expect)
      rep.violation("k=" + std::to_string(kk) + ": shuffle count != binomial");
    if (verify_roundtrip) {
      for (const auto& t : constrained) {
        if (!rep.ok()) break;
        const Shuffle s = triangulation_to_shuffle(t, n, kk);
        if (validate_shuffle(s).ok == false) rep.violation("image shuffle invalid");
        if (!(shuffle_to_triangulation(s, n, kk) == t))
          rep.violation("k=" + std::to_string(kk) + ": triangulation round trip failed");
      }
      for (const auto& s : shuffles) {
        if (!rep.ok()) break;
        const Triangulation t = shuffle_to_triangulation(s, n, kk);
        if (!satisfies_constraint(t, kk)) rep.violation("image triangulation violates the constraint");
        if (!(triangulation_to_shuffle(t, n, kk) == s))
          rep.violation("k=" + std::to_string(kk) + ": shuffle round trip failed");
      }
    }
    if (k != -1)
      for (const auto& t : constrained) {
        const Shuffle s = triangulation_to_shuffle(t, n, kk);
        lines << json{{"triangulation", encode(t)}, {"shuffle", encode(s)}} << "\n";
      }
  }
  rep.res.payload = json{{"n", n}, {"counts", counts}};
  rep.res.streamed = k != -1;
  return rep.res;
}

CommandResult cmd_verify(const std::string& suite, const VerifyOptions& opt) {
  try {
    if (suite == "simplicial-identities") return verify_simplicial_identities(opt);
    if (suite == "coskeletal") return verify_coskeletal(opt);
    if (suite == "phi-oracle") return verify_phi_oracle(opt);
    if (suite == "freecell-relations") return verify_freecell(opt);
    if (suite == "bijection") {
      std::ostringstream sink;
      return cmd_bijection(opt.n, -1, true, sink);
    }
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
  return error_result("unknown suite: " + suite +
                      " (expected simplicial-identities, coskeletal, phi-oracle, freecell-relations, bijection)");
}

CommandResult cmd_reconstruct(const nlohmann::json& input) {
  try {
    FinCategory D;
    const auto& cat = input.at("category");
    if (cat.is_string()) {
      CategorySpec spec = parse_category_spec(cat.get<std::string>());
      if (spec.is_tuple) return error_result("reconstruct: category must be a single category");
      D = std::move(spec.single);
    } else {
      D = decode_fincategory(cat);
    }
    const int n = input.at("n").get<int>();
    const int k = input.at("k").get<int>();
    std::vector<std::pair<Shuffle, LabeledPath>> paths;
    for (const auto& p : input.at("paths")) {
      Shuffle s = shuffle_from_steps(k, n - 1 - k, p.at("steps").get<std::string>());
      LabeledPath lp{p.at("objects").get<std::vector<int>>(), p.at("arrows").get<std::vector<int>>()};
      paths.emplace_back(std::move(s), std::move(lp));
    }
    const MatSimplex m = reconstruct_matrix(D, n, k, paths);
    CommandResult r;
    r.payload = json{{"matrix", encode(m)}};
    return r;
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

CommandResult cmd_appendix_example() {
  Reporter rep;
  // the symbolic grid poset: objects p_ij, i in {0,1}, j in {0,1,2},
  // with an arrow p_ij -> p_i'j' iff i <= i' and j >= j'
  const FinCategory P = product(ordinal(1), opposite(ordinal(2)));
  auto pname = [](int o) { return "p" + std::to_string(o / 3) + std::to_string(o % 3); };
  const MatSimplex expected = thin_matrix(P, 1, 2, [](int a, int b) { return a * 3 + b; });

  const std::vector<Triangulation> tris = {
      {4, {{{0, 1, 4}, {1, 2, 3}, {1, 3, 4}}}},
      {4, {{{0, 1, 3}, {0, 3, 4}, {1, 2, 3}}}},
      {4, {{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}}},
  };
  const std::vector<std::string> expected_steps = {"VHH", "HVH", "HHV"};
  const std::vector<std::vector<int>> path_objects = {{2, 5, 4, 3}, {2, 1, 4, 3}, {2, 1, 0, 3}};

  std::vector<std::pair<Shuffle, LabeledPath>> inputs;
  json paths_out = json::array();
  for (size_t t = 0; t < tris.size(); ++t) {
    if (!labeled_triangulation_check(expected, tris[t])) {
      rep.violation("triangulation " + std::to_string(t) + " not compatible with a type-1 simplex");
      break;
    }
    const Shuffle s = triangulation_to_shuffle(tris[t], 4, 1);
    if (s.steps() != expected_steps[t]) {
      rep.violation("triangulation " + std::to_string(t) + " maps to steps " + s.steps() + ", expected " +
                    expected_steps[t]);
      break;
    }
    LabeledPath lp;
    lp.objects = path_objects[t];
    for (size_t i = 0; i + 1 < lp.objects.size(); ++i)
      lp.arrows.push_back(thin_mor(P, lp.objects[i], lp.objects[i + 1]));
    if (!(monotone_path(expected, s) == lp)) {
      rep.violation("path " + std::to_string(t) + " does not match the restriction of the expected matrix");
      break;
    }
    json names = json::array();
    for (int o : lp.objects) names.push_back(pname(o));
    paths_out.push_back({{"steps", s.steps()}, {"objects", names}});
    inputs.emplace_back(s, std::move(lp));
  }

  if (rep.ok()) {
    MatSimplex got;
    try {
      got = reconstruct_matrix(P, 4, 1, inputs);
    } catch (const std::exception& e) {
      rep.violation(std::string("reconstruction failed: ") + e.what());
    }
    if (rep.ok() && !(got == expected)) rep.violation("reconstructed matrix differs from the expected display");
  }

  // display rows read with the column index decreasing
  json rows = json::array();
  for (int a = 0; a <= 1; ++a) {
    json row = json::array();
    for (int b = 2; b >= 0; --b) row.push_back(pname(expected.entry(a, b)));
    rows.push_back(row);
  }
  rep.res.payload = json{{"matrix_rows", rows}, {"paths", paths_out}};
  return rep.res;
}

CommandResult cmd_freecell(const FreecellOptions& opt, std::ostream& lines) {
  if (opt.check_relations) {
    VerifyOptions v;
    v.max_m = opt.max_m;
    return cmd_verify("freecell-relations", v);
  }
  if (opt.list_nondegenerate) {
    if (opt.dim < 0) return error_result("freecell: --dim required with --list-nondegenerate");
    CommandResult r;
    for (bool primed : {false, true}) lines << encode(sigma({opt.dim, primed})) << "\n";
    r.payload = json{{"count", 2}};
    r.streamed = true;
    return r;
  }
  return error_result("freecell: pass --check-relations or --list-nondegenerate");
}

CommandResult cmd_theta2(const Theta2Options& opt, std::ostream& lines) {
  if (opt.widths.empty()) return error_result("theta2: --widths required");
  std::string spec = "theta:[" + std::to_string(opt.widths.size()) + "|";
  for (size_t i = 0; i < opt.widths.size(); ++i)
    spec += (i ? "," : "") + std::to_string(opt.widths[i]);
  spec += "]";
  EnumerateOptions e;
  e.dim = opt.dim;
  e.nondegenerate = opt.nondegenerate;
  e.count_only = opt.count_only;
  e.budget = opt.budget;
  return cmd_enumerate(spec, e, lines);
}

}  // namespace dusk::cli
