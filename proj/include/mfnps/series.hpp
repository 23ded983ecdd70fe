#pragma once

#include <cstddef>
#include <vector>

#include "mfnps/hamiltonian.hpp"

namespace mfnps {

/// Right-hand side of the nonlinear energy series at a fixed trial energy.
struct SeriesEvaluation {
  int target_n = 0;
  double trial_E = 0.0;
  int order_K = 0;
  /// T_0 ... T_K. T_0 is the diagonal element, T_1 is always zero, and T_j
  /// sums every closed walk of j couplings that avoids the target state in
  /// between, each intermediate state m weighted by 1/(E - E0_m).
  std::vector<double> per_order_terms;
  double total = 0.0;
};

/// Smallest basis holding every walk of order K from state n.
std::size_t required_dimension(int target_n, int order_K);

/// Relative guard on |E - E0_m| below which a denominator is rejected.
inline constexpr double kDenominatorGuard = 1e-12;

/// Evaluates g(E) by propagating the amplitude vector
///   v_1[m] = <m|H_N|n> / (E - E0_m),
///   v_{i+1}[m] = sum_m' <m|H_N|m'> v_i[m'] / (E - E0_m),   m != n,
/// with T_j = sum_m <n|H_N|m> v_{j-1}[m].
/// Throws DimensionError if the operator is smaller than required_dimension
/// and SmallDenominatorError on a near-degenerate contributing state.
SeriesEvaluation evaluate_series(const BandedOperator& op, int target_n,
                                 double trial_E, int order_K);

/// g(E) - E.
double residual(const BandedOperator& op, int target_n, double trial_E,
                int order_K);

}  // namespace mfnps
