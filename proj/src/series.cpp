#include "mfnps/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfnps/errors.hpp"

namespace mfnps {

namespace {

constexpr std::size_t kOffsets[] = {4, 2};

// (H_N v)[m] for one row, visiting neighbours in a fixed order so the result
// does not depend on how far the basis extends beyond the walk support.
double apply_row(const BandedOperator& op, const std::vector<double>& v,
                 std::size_t m) {
  const std::size_t dim = op.dimension();
  double acc = 0.0;
  for (std::size_t d : kOffsets) {
    if (m >= d) acc += op.coupling(m - d, m) * v[m - d];
  }
  for (std::size_t d : {std::size_t{2}, std::size_t{4}}) {
    if (m + d < dim) acc += op.coupling(m, m + d) * v[m + d];
  }
  return acc;
}

}  // namespace

std::size_t required_dimension(int target_n, int order_K) {
  return static_cast<std::size_t>(target_n) +
         4 * static_cast<std::size_t>(order_K) + 1;
}

SeriesEvaluation evaluate_series(const BandedOperator& op, int target_n,
                                 double trial_E, int order_K) {
  if (target_n < 0) throw InputError("state index must be non-negative");
  if (order_K < 0) throw InputError("order must be non-negative");
  if (!std::isfinite(trial_E)) throw InputError("trial energy must be finite");
  if (op.dimension() < required_dimension(target_n, order_K)) {
    throw DimensionError("operator dimension " +
                         std::to_string(op.dimension()) + " is below n + 4K + 1 = " +
                         std::to_string(required_dimension(target_n, order_K)));
  }

  const auto n = static_cast<std::size_t>(target_n);
  const std::size_t dim = op.dimension();
  const double guard = kDenominatorGuard * std::max(1.0, std::abs(trial_E));

  SeriesEvaluation out;
  out.target_n = target_n;
  out.trial_E = trial_E;
  out.order_K = order_K;
  out.per_order_terms.assign(static_cast<std::size_t>(order_K) + 1, 0.0);
  out.per_order_terms[0] = op.diag(n);

  if (order_K >= 2) {
    std::vector<double> v(dim, 0.0);
    std::vector<double> next(dim, 0.0);

    auto divide = [&](std::size_t m, double numerator) {
      if (numerator == 0.0) return 0.0;
      const double den = trial_E - op.diag(m);
      if (std::abs(den) < guard) {
        throw SmallDenominatorError(
            "near-degenerate intermediate state " + std::to_string(m),
            static_cast<int>(m));
      }
      return numerator / den;
    };

    for (std::size_t m = 0; m < dim; ++m) {
      if (m != n) v[m] = divide(m, op.coupling(m, n));
    }
    for (int j = 2; j <= order_K; ++j) {
      out.per_order_terms[static_cast<std::size_t>(j)] = apply_row(op, v, n);
      if (j == order_K) break;
      for (std::size_t m = 0; m < dim; ++m) {
        next[m] = m == n ? 0.0 : divide(m, apply_row(op, v, m));
      }
      v.swap(next);
    }
  }

  double total = 0.0;
  for (double t : out.per_order_terms) total += t;
  out.total = total;
  return out;
}

double residual(const BandedOperator& op, int target_n, double trial_E,
                int order_K) {
  return evaluate_series(op, target_n, trial_E, order_K).total - trial_E;
}

}  // namespace mfnps
