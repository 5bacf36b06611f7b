// Acceptance gate: one pass/fail line per criterion, exit 0 only if all
// pass.  Criteria 1 and 5 carry wall-clock bounds (10 s and 60 s).

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dusk/cli.hpp"
#include "dusk/duskin.hpp"
#include "dusk/freecell.hpp"
#include "dusk/paths.hpp"
#include "dusk/theta2.hpp"

using namespace dusk;
using cli::CommandResult;

namespace {

struct Gate {
  int failed = 0;

  void run(const std::string& name, double time_limit_s, const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && time_limit_s > 0 && secs > time_limit_s) {
      ok = false;
      detail = "time limit exceeded";
    }
    if (!ok) ++failed;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << std::fixed << std::setprecision(2) << "  (" << secs
              << " s)";
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
  }
};

bool suite_ok(const CommandResult& r, std::string& detail) {
  if (r.status == CommandResult::Status::ok) return true;
  detail = r.diagnostics.empty() ? "failed" : r.diagnostics.front();
  return false;
}

bool criterion_free_cell(std::string& detail) {
  const FinCategory D = ordinal(1);
  for (int n = 1; n <= 8; ++n) {
    cli::EnumerateOptions opt;
    opt.dim = n;
    opt.nondegenerate = true;
    opt.count_only = true;
    std::ostringstream sink;
    const CommandResult r = cli::cmd_enumerate("ordinal:1", opt, sink);
    if (r.status != CommandResult::Status::ok || r.payload.at("count") != 2) {
      detail = "n=" + std::to_string(n) + ": count != 2";
      return false;
    }
    std::set<MatSimplex> nd;
    for (const auto& s : simplices(D, n))
      if (is_nondegenerate(D, s)) nd.insert(s);
    if (nd != std::set<MatSimplex>{sigma({n, false}), sigma({n, true})}) {
      detail = "n=" + std::to_string(n) + ": survivors differ from sigma_n, sigma_n'";
      return false;
    }
  }
  return true;
}

bool criterion_face_relations(std::string& detail) {
  for (int m = 1; m <= 4; ++m) {
    const auto v = verify_face_relations(m);
    if (!v.ok) {
      detail = "m=" + std::to_string(m) + ": " + v.message;
      return false;
    }
  }
  return true;
}

bool criterion_interval(std::string& detail) {
  const FinCategory D = ordinal(0);
  for (int n = 0; n <= 10; ++n) {
    const auto sims = simplices(D, n);
    if (sims.size() != static_cast<size_t>(n) + 2) {
      detail = "n=" + std::to_string(n) + ": count != n+2";
      return false;
    }
    std::set<int> types;
    for (const auto& s : sims) types.insert(type_of(s));
    if (static_cast<int>(types.size()) != n + 2 || *types.begin() != -1 || *types.rbegin() != n) {
      detail = "n=" + std::to_string(n) + ": types do not realize -1..n";
      return false;
    }
    if (n >= 1)
      for (const auto& s : sims)
        for (int i = 0; i <= n; ++i) {
          const int expected = i <= s.k ? s.k - 1 : s.k;
          if (type_of(face(D, s, i)) != expected) {
            detail = "face-type case table fails";
            return false;
          }
        }
  }
  return true;
}

bool criterion_identities(std::string& detail) {
  cli::VerifyOptions opt;
  opt.dim = 5;
  return suite_ok(cli::cmd_verify("simplicial-identities", opt), detail);
}

bool criterion_coskeletal(std::string& detail) {
  return suite_ok(cli::cmd_verify("coskeletal", {}), detail);
}

bool criterion_oracle(std::string& detail) {
  cli::VerifyOptions opt;
  opt.dim = 4;
  return suite_ok(cli::cmd_verify("phi-oracle", opt), detail);
}

bool criterion_tuples(std::string& detail) {
  const std::vector<std::vector<FinCategory>> cases{theta2_object(2, {1, 1}), theta2_object(2, {2, 0})};
  for (size_t c = 0; c < cases.size(); ++c) {
    const auto& Ds = cases[c];
    const MultiSuspension S = multi_suspension(Ds);
    const auto v = validate_two_category(S.cat);
    if (!v.ok) {
      detail = v.message;
      return false;
    }
    for (int n = 0; n <= 3; ++n) {
      const auto tuples = tuple_simplices(Ds, n);
      const auto nerve = nerve_simplices(S.cat, n);
      if (tuples.size() != nerve.size()) {
        detail = "case " + std::to_string(c) + " n=" + std::to_string(n) + ": tuple count " +
                 std::to_string(tuples.size()) + " != nerve count " + std::to_string(nerve.size());
        return false;
      }
      // the type-vector condition characterizes membership in the
      // product of the factor matrix sets
      std::set<TupleSimplex> members(tuples.begin(), tuples.end());
      if (members.size() != tuples.size()) {
        detail = "duplicate tuples";
        return false;
      }
      const auto parts0 = simplices(Ds[0], n);
      const auto parts1 = simplices(Ds[1], n);
      long long monotone = 0;
      for (const auto& p0 : parts0)
        for (const auto& p1 : parts1) {
          TupleSimplex t{n, {p0, p1}};
          const bool cond = type_of(p0) <= type_of(p1);
          if (cond) ++monotone;
          if (cond != (members.count(t) == 1)) {
            detail = "type-vector condition does not characterize membership";
            return false;
          }
        }
      if (monotone != static_cast<long long>(tuples.size())) {
        detail = "membership count mismatch";
        return false;
      }
    }
  }
  return true;
}

bool criterion_bijection(std::string& detail) {
  for (int n = 2; n <= 7; ++n) {
    std::ostringstream sink;
    const CommandResult r = cli::cmd_bijection(n, -1, true, sink);
    if (r.status != CommandResult::Status::ok) {
      detail = "n=" + std::to_string(n) + ": " + (r.diagnostics.empty() ? "failed" : r.diagnostics.front());
      return false;
    }
    for (const auto& row : r.payload.at("counts"))
      if (row.at("triangulations") != row.at("binomial") || row.at("shuffles") != row.at("binomial")) {
        detail = "n=" + std::to_string(n) + ": counts differ from binomial";
        return false;
      }
  }
  return true;
}

bool criterion_worked_example(std::string& detail) {
  const CommandResult r = cli::cmd_appendix_example();
  if (!suite_ok(r, detail)) return false;
  const nlohmann::json expected_rows{{"p02", "p01", "p00"}, {"p12", "p11", "p10"}};
  if (r.payload.at("matrix_rows") != expected_rows) {
    detail = "reconstructed rows differ from the expected display";
    return false;
  }
  return true;
}

bool criterion_two_skeleton(std::string& detail) {
  const FinCategory& D = free_cell_category();
  for (int m = 1; m <= 4; ++m) {
    const MatSimplex s = sigma({2 * m, false});
    for (int i = 0; i <= 2 * m; ++i)
      for (int j = i + 1; j <= 2 * m; ++j)
        for (int k = j + 1; k <= 2 * m; ++k)
          if (two_face_simplex(two_skeleton_face(m, i, j, k)) != restrict_to_vertices(D, s, {i, j, k})) {
            detail = "m=" + std::to_string(m) + " triple (" + std::to_string(i) + "," + std::to_string(j) +
                     "," + std::to_string(k) + ")";
            return false;
          }
  }
  return true;
}

bool supplement_properties(std::string& detail) {
  // degeneracy retraction on everything enumerated here
  for (const FinCategory& D : {ordinal(0), ordinal(1), ordinal(2), product(ordinal(1), ordinal(1))})
    for (int n = 1; n <= 5; ++n)
      for (const auto& s : simplices(D, n)) {
        bool retract = false;
        for (int i = 0; i <= n - 1 && !retract; ++i)
          if (degeneracy(D, face(D, s, i), i) == s) retract = true;
        if (retract == is_nondegenerate(D, s)) {
          detail = "degeneracy retraction mismatch";
          return false;
        }
      }
  const auto Ds = theta2_object(2, {1, 1});
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : tuple_simplices(Ds, n)) {
      bool retract = false;
      for (int i = 0; i <= n - 1 && !retract; ++i)
        if (tuple_degeneracy(Ds, tuple_face(Ds, t, i), i) == t) retract = true;
      if (retract == tuple_nondegenerate(Ds, t)) {
        detail = "tuple retraction mismatch";
        return false;
      }
    }

  // constructed functors validate; single-entry mutations against thin
  // targets never do
  std::mt19937_64 rng(2026);
  const CatPtr grid = make_cat(product(ordinal(2), opposite(ordinal(1))));
  for (const FinCategory& target : {ordinal(2), product(ordinal(1), ordinal(1))}) {
    const CatPtr tgt = make_cat(target);
    const auto fs = enumerate_functors(grid, tgt);
    for (const auto& f : fs)
      if (!validate_functor(f).ok) {
        detail = "constructed functor failed validation";
        return false;
      }
    for (int probe = 0; probe < 50; ++probe) {
      FunctorData f = fs[rng() % fs.size()];
      if (rng() % 2 == 0) {
        const size_t m = rng() % f.mor_map.size();
        f.mor_map[m] =
            (f.mor_map[m] + 1 + static_cast<int>(rng() % (target.num_morphisms() - 1))) % target.num_morphisms();
      } else {
        const size_t o = rng() % f.obj_map.size();
        f.obj_map[o] = (f.obj_map[o] + 1 + static_cast<int>(rng() % (target.num_objects - 1))) % target.num_objects;
      }
      if (validate_functor(f).ok) {
        detail = "mutated functor passed validation";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  Gate gate;
  gate.run("criterion 1: two non-degenerate simplices over ordinal:1, n <= 8", 10.0, criterion_free_cell);
  gate.run("criterion 2: face relation tables, m = 1..4", 0, criterion_face_relations);
  gate.run("criterion 3: Mat(ordinal:0) is the interval, n <= 10", 0, criterion_interval);
  gate.run("criterion 4: simplicial identities, four categories, n <= 5", 0, criterion_identities);
  gate.run("criterion 5: unique sphere fillers over ordinal:1 and ordinal:2", 60.0, criterion_coskeletal);
  gate.run("criterion 6: nerve oracle equivalence and phi, n <= 4", 0, criterion_oracle);
  gate.run("criterion 7: tuple description of multi-point suspensions, n <= 3", 0, criterion_tuples);
  gate.run("criterion 8: triangulation/shuffle bijection, n <= 7", 0, criterion_bijection);
  gate.run("criterion 9: worked reconstruction example, exact symbolic match", 0, criterion_worked_example);
  gate.run("criterion 10: two-skeleton classification, m <= 4", 0, criterion_two_skeleton);
  gate.run("supplement: retraction and functor-validation properties", 0, supplement_properties);

  if (gate.failed == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << gate.failed << " criterion(s) failed\n";
  return 1;
}
