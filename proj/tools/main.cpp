// mfnps: energy levels of the quartic anharmonic oscillator from the
// self-consistent nonlinear perturbation series.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mfnps/mfnps.hpp"
#include "render.hpp"

namespace {

using namespace mfnps;
using namespace mfnps::cli;

struct RunConfig {
  double lambda = 1.0;
  int state = 0;
  int order = 15;
  std::string scheme = "chain:1";
  bool ground_params = false;
  double tolerance = 1e-14;
  int max_iterations = 500;
  std::string format = "table";
  int table_id = 0;
  double oracle_tolerance = 1e-9;
  int dimension = 0;
};

SchemeSpec resolve_scheme(const RunConfig& cfg) {
  // Ground-state parameters: the variational frequencies are solved for n = 0
  // and applied unchanged to the requested state. Chain parameters never
  // depend on n.
  return parse_scheme(cfg.scheme, cfg.lambda, cfg.ground_params ? 0 : cfg.state);
}

SolverOptions solver_options(const RunConfig& cfg) {
  return {cfg.tolerance, cfg.max_iterations};
}

int run_energy(const RunConfig& cfg) {
  const auto solution = self_consistent_energy(resolve_scheme(cfg), cfg.state,
                                               cfg.order, solver_options(cfg));
  std::cout << render_energy(solution, parse_format(cfg.format));
  return exit_code(solution);
}

int run_table(const RunConfig& cfg) {
  if (!is_valid_table_id(cfg.table_id)) {
    std::cerr << "error: unknown table id " << cfg.table_id
              << " (valid: 1, 2, 3, 5, 6, 7, 8, 9)\n";
    return kExitInvalidInput;
  }
  const auto table = compute_table(cfg.table_id, solver_options(cfg));
  std::cout << render_table(table, parse_format(cfg.format));
  return kExitConverged;
}

int run_oracle(const RunConfig& cfg) {
  OracleResult result;
  if (cfg.dimension > 0) {
    result = diagonalize(cfg.lambda, static_cast<std::size_t>(cfg.dimension),
                         static_cast<std::size_t>(cfg.state) + 1);
  } else {
    result = converged_levels(cfg.lambda, cfg.state, cfg.oracle_tolerance);
  }
  std::cout << render_oracle(result, parse_format(cfg.format));
  return kExitConverged;
}

int run_compare(const RunConfig& cfg) {
  Comparison cmp;
  cmp.series = self_consistent_energy(resolve_scheme(cfg), cfg.state, cfg.order,
                                      solver_options(cfg));
  cmp.oracle = oracle_energy(cfg.lambda, cfg.state, cfg.oracle_tolerance);
  std::cout << render_compare(cmp, parse_format(cfg.format));
  return exit_code(cmp.series);
}

void add_solver_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--lambda", cfg.lambda, "Coupling constant (>= 0)")->required();
  cmd->add_option("--state", cfg.state, "State index n")->check(CLI::NonNegativeNumber);
  cmd->add_option("--order", cfg.order, "Series order K")->check(CLI::NonNegativeNumber);
  cmd->add_option("--scheme", cfg.scheme, "chain:k | var1 | var2 | unsplit");
  cmd->add_flag("--ground-params", cfg.ground_params,
                "Use ground-state splitting parameters for every state");
  cmd->add_option("--tolerance", cfg.tolerance, "Fixed-point tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iterations", cfg.max_iterations, "Iteration budget")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv(kFormatEnv)) cfg.format = env;

  CLI::App app{"Anharmonic oscillator levels from the nonlinear perturbation series"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format: table | csv | json (default $" +
                                             std::string(kFormatEnv) + " or table)")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto* energy = app.add_subcommand("energy", "Self-consistent energy of one state");
  add_solver_flags(energy, cfg);

  auto* table = app.add_subcommand("table", "Reproduce a reference table");
  table->add_option("--id", cfg.table_id, "Table id: 1, 2, 3, 5, 6, 7, 8 or 9")->required();
  table->add_option("--tolerance", cfg.tolerance, "Fixed-point tolerance")
      ->check(CLI::PositiveNumber);
  table->add_option("--max-iterations", cfg.max_iterations, "Iteration budget")
      ->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Direct diagonalization in a truncated basis");
  oracle->add_option("--lambda", cfg.lambda, "Coupling constant (>= 0)")->required();
  oracle->add_option("--state", cfg.state, "Highest level to report")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--dimension", cfg.dimension,
                     "Fixed basis size (default: grow until converged)")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--oracle-tolerance", cfg.oracle_tolerance,
                     "Basis convergence threshold")
      ->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "Series energy against the oracle");
  add_solver_flags(compare, cfg);
  compare->add_option("--oracle-tolerance", cfg.oracle_tolerance,
                      "Basis convergence threshold")
      ->check(CLI::PositiveNumber);

  // Format may also follow the subcommand.
  for (auto* cmd : {energy, table, oracle, compare}) {
    cmd->add_option("--format", cfg.format, "Output format: table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    parse_format(cfg.format);
    if (energy->parsed()) return run_energy(cfg);
    if (table->parsed()) return run_table(cfg);
    if (oracle->parsed()) return run_oracle(cfg);
    return run_compare(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
}
