#pragma once

#include <optional>
#include <string>

#include "mfnps/oracle.hpp"
#include "mfnps/solver.hpp"
#include "mfnps/tables.hpp"

namespace mfnps::cli {

enum class OutputFormat { Table, Csv, Json };

/// Throws InputError on anything but "table", "csv" or "json".
OutputFormat parse_format(const std::string& name);

/// Environment variable holding the default output format.
inline constexpr const char* kFormatEnv = "MFNPS_FORMAT";

/// 16 significant digits; the printed string is the value's canonical form.
std::string format_value(double value);

/// The double a rendered value parses back to.
double rendered(double value);

std::string render_energy(const EnergySolution& solution, OutputFormat format);
std::string render_table(const ComputedTable& table, OutputFormat format);
std::string render_oracle(const OracleResult& result, OutputFormat format);

struct Comparison {
  EnergySolution series;
  double oracle = 0.0;
};

std::string render_compare(const Comparison& cmp, OutputFormat format);

/// Exit code for a solve: 0 Converged, 2 otherwise.
int exit_code(const EnergySolution& solution);

inline constexpr int kExitConverged = 0;
inline constexpr int kExitNoConvergence = 2;
inline constexpr int kExitInvalidInput = 3;
inline constexpr int kExitNumericalFailure = 4;

}  // namespace mfnps::cli
