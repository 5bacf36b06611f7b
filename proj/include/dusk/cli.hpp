#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dusk/json_io.hpp"

namespace dusk::cli {

struct CommandResult {
  enum class Status { ok, violation, error };
  Status status = Status::ok;
  nlohmann::json payload;
  std::vector<std::string> diagnostics;  // non-empty when status == violation
  bool streamed = false;                 // JSON-lines were written; keep stdout line-oriented

  int exit_code() const {
    return status == Status::ok ? 0 : (status == Status::violation ? 2 : 1);
  }
};

const char* to_string(CommandResult::Status s);

/// Built-in category specs: "ordinal:m" (m >= -1), "square" ([1]x[1]),
/// "theta:[r|n1,...,nr]" (a list of ordinals).
struct CategorySpec {
  bool is_tuple = false;
  FinCategory single;                // when !is_tuple
  std::vector<FinCategory> factors;  // when is_tuple
  std::string text;
};

CategorySpec parse_category_spec(const std::string& text);  // throws std::invalid_argument

struct EnumerateOptions {
  int dim = 0;
  bool nondegenerate = false;
  bool count_only = false;
  bool oracle = false;  // enumerate nerve simplices of the suspension instead (dim <= 4)
  int budget = 10;
};

// Streams simplices (or tuple simplices) as JSON-lines to `lines`.
CommandResult cmd_enumerate(const std::string& spec, const EnumerateOptions& opt, std::ostream& lines);

struct VerifyOptions {
  int max_m = 3;        // freecell-relations
  std::string cat;      // optional category spec for the scan suites
  int dim = -1;         // dimension cap; suites pick their defaults
  int n = 6;            // bijection polygon parameter
  std::uint64_t seed = 0;
};

// suite in {simplicial-identities, coskeletal, phi-oracle,
// freecell-relations, bijection}; reports the first counterexample.
CommandResult cmd_verify(const std::string& suite, const VerifyOptions& opt);

// Per-k counts and, with verify_roundtrip, the mutual-inverse check;
// streams triangulation/shuffle pairs when 0 <= k <= n-1.
CommandResult cmd_bijection(int n, int k, bool verify_roundtrip, std::ostream& lines);

// Input: {"category": spec-string | category object, "n":, "k":,
//         "paths": [{"steps":, "objects":, "arrows":}]}
CommandResult cmd_reconstruct(const nlohmann::json& input);

// The worked 4-simplex reconstruction demo over the symbolic grid poset
// with objects p_ij: three labeled triangulations, their monotone
// paths, and the reconstructed 2x3 matrix.
CommandResult cmd_appendix_example();

struct FreecellOptions {
  bool check_relations = false;
  int max_m = 4;
  bool list_nondegenerate = false;
  int dim = -1;
};

CommandResult cmd_freecell(const FreecellOptions& opt, std::ostream& lines);

struct Theta2Options {
  std::vector<int> widths;
  int dim = 0;
  bool nondegenerate = false;
  bool count_only = false;
  int budget = 10;
};

CommandResult cmd_theta2(const Theta2Options& opt, std::ostream& lines);

}  // namespace dusk::cli
