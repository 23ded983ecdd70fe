#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfnps/splitparams.hpp"

namespace mfnps {

enum class SolveStatus { Converged, NoConvergence, SmallDenominator };

std::string to_string(SolveStatus status);

struct SolverOptions {
  /// Acceptance threshold on |g(E) - E|, scaled by max(1, |E|).
  double tolerance = 1e-14;
  /// Budget for the damped iteration; the bracketed stage gets the same again.
  int max_iterations = 500;
};

struct EnergySolution {
  SchemeSpec scheme;
  int state_n = 0;
  int order_K = 0;
  std::optional<double> energy;  // empty unless Converged
  int iterations = 0;
  double final_residual = 0.0;
  SolveStatus status = SolveStatus::NoConvergence;

  bool converged() const noexcept { return status == SolveStatus::Converged; }
};

/// Solves E = g(E) at order K for state n.
///
/// Damped iteration E <- E + beta (g(E) - E) starts at the diagonal element
/// with beta = 1 and halves beta (down to 1/16) whenever the residual changes
/// sign. If the budget runs out while the iterate sits close to a root, a
/// bracketed search finishes the job. A fixed point is only accepted between
/// the neighbouring same-parity levels E0_{n-2} < E < E0_{n+2}: beyond them
/// the iteration has jumped to a branch belonging to another state, which is
/// reported as NoConvergence, as are non-finite iterates and |E| > 1e6.
EnergySolution self_consistent_energy(const SchemeSpec& scheme, int state_n,
                                      int order_K,
                                      const SolverOptions& options = {});

struct ConvergenceTable {
  SchemeSpec scheme;
  int state_n = 0;
  double lambda = 0.0;
  std::vector<EnergySolution> rows;  // rows[K] for K = 0..K_max
};

/// One independent solve per order K = 0..K_max.
ConvergenceTable convergence_table(const SchemeSpec& scheme, int state_n,
                                   int K_max, const SolverOptions& options = {});

/// Leading significant digits shared by two values (16 when equal, 0 when
/// their decimal exponents differ).
int shared_significant_digits(double a, double b);

/// Shared significant digits of the last two converged rows.
/// Throws UndefinedMeasureError with fewer than two converged rows.
int digits_stabilized(const ConvergenceTable& table);

}  // namespace mfnps
