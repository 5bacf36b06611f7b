#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dusk/cli.hpp"

namespace {

int finish(const dusk::cli::CommandResult& r, bool as_json) {
  if (as_json) {
    nlohmann::json out{{"status", dusk::cli::to_string(r.status)},
                       {"payload", r.payload},
                       {"diagnostics", r.diagnostics}};
    // one line when simplices were streamed, so stdout stays JSON-lines
    std::cout << (r.streamed ? out.dump() : out.dump(2)) << "\n";
  } else {
    if (!r.payload.is_null()) (r.streamed ? std::cerr : std::cout) << r.payload.dump(2) << "\n";
    for (const auto& d : r.diagnostics) std::cerr << dusk::cli::to_string(r.status) << ": " << d << "\n";
  }
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumeration, verification and bijection tools for nerves of suspension 2-categories"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::uint64_t seed = 0;
  int budget = -1;
  app.add_flag("--json", as_json, "emit the full command result as JSON");
  app.add_option("--seed", seed, "seed for randomized property checks");
  app.add_option("--budget", budget, "raise the enumeration dimension budget");

  auto* enumerate = app.add_subcommand("enumerate", "stream simplices as JSON-lines");
  std::string enum_spec;
  dusk::cli::EnumerateOptions enum_opt;
  enumerate->add_option("spec", enum_spec, "ordinal:m | square | theta:[r|n1,...,nr]")->required();
  enumerate->add_option("--dim", enum_opt.dim, "simplex dimension")->required();
  enumerate->add_flag("--nondegenerate", enum_opt.nondegenerate, "only non-degenerate simplices");
  enumerate->add_flag("--count-only", enum_opt.count_only, "emit the count instead of the simplices");
  enumerate->add_flag("--oracle", enum_opt.oracle, "enumerate nerve simplices of the suspension (dim <= 4)");

  auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
  std::string suite;
  dusk::cli::VerifyOptions verify_opt;
  verify->add_option("suite", suite,
                     "simplicial-identities | coskeletal | phi-oracle | freecell-relations | bijection")
      ->required();
  verify->add_option("--max-m", verify_opt.max_m, "relation table bound (freecell-relations)");
  verify->add_option("--cat", verify_opt.cat, "category spec for the scan suites");
  verify->add_option("--dim", verify_opt.dim, "dimension cap");
  verify->add_option("--n", verify_opt.n, "polygon parameter (bijection)");

  auto* bijection = app.add_subcommand("bijection", "triangulation <-> shuffle correspondence");
  int bij_n = 0, bij_k = -1;
  bool bij_verify = false;
  bijection->add_option("--n", bij_n, "polygon parameter")->required();
  bijection->add_option("--k", bij_k, "type (default: all)");
  bijection->add_flag("--verify", bij_verify, "check the two maps are mutually inverse");

  auto* reconstruct = app.add_subcommand("reconstruct", "rebuild a matrix from labeled monotone paths");
  std::string input_file;
  reconstruct->add_option("--input", input_file, "JSON input file")->required();

  app.add_subcommand("appendix-example", "run the worked 4-simplex reconstruction example");

  auto* freecell = app.add_subcommand("freecell", "the two non-degenerate simplices over ordinal:1");
  dusk::cli::FreecellOptions free_opt;
  freecell->add_flag("--check-relations", free_opt.check_relations, "verify the face relation tables");
  freecell->add_option("--max-m", free_opt.max_m, "relation table bound");
  freecell->add_flag("--list-nondegenerate", free_opt.list_nondegenerate, "emit sigma and sigma'");
  freecell->add_option("--dim", free_opt.dim, "dimension for --list-nondegenerate");

  auto* theta2 = app.add_subcommand("theta2", "tuple simplices of a theta object");
  dusk::cli::Theta2Options theta_opt;
  theta2->add_option("--widths", theta_opt.widths, "n1,...,nr")->required()->delimiter(',');
  theta2->add_option("--dim", theta_opt.dim, "simplex dimension")->required();
  theta2->add_flag("--nondegenerate", theta_opt.nondegenerate, "only non-degenerate tuples");
  theta2->add_flag("--count-only", theta_opt.count_only, "emit the count instead of the tuples");

  CLI11_PARSE(app, argc, argv);

  verify_opt.seed = seed;
  if (budget > 0) {
    enum_opt.budget = budget;
    theta_opt.budget = budget;
    if (verify_opt.dim < 0) verify_opt.dim = budget;  // suite dimension cap unless --dim given
  }

  if (enumerate->parsed()) return finish(dusk::cli::cmd_enumerate(enum_spec, enum_opt, std::cout), as_json);
  if (verify->parsed()) return finish(dusk::cli::cmd_verify(suite, verify_opt), as_json);
  if (bijection->parsed()) return finish(dusk::cli::cmd_bijection(bij_n, bij_k, bij_verify, std::cout), as_json);
  if (reconstruct->parsed()) {
    std::ifstream in(input_file);
    if (!in) {
      std::cerr << "error: cannot open " << input_file << "\n";
      return 1;
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    return finish(dusk::cli::cmd_reconstruct(j), as_json);
  }
  if (app.get_subcommand("appendix-example")->parsed())
    return finish(dusk::cli::cmd_appendix_example(), as_json);
  if (freecell->parsed()) return finish(dusk::cli::cmd_freecell(free_opt, std::cout), as_json);
  if (theta2->parsed()) return finish(dusk::cli::cmd_theta2(theta_opt, std::cout), as_json);
  return 1;
}
