#include "mfnps/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "mfnps/errors.hpp"
#include "mfnps/hamiltonian.hpp"
#include "mfnps/series.hpp"

namespace mfnps {

namespace {

constexpr double kDivergenceBound = 1e6;
constexpr double kMinDamping = 1.0 / 16.0;
// Relative residual under which an unfinished iteration counts as stalled
// near a root rather than wandering.
constexpr double kStallResidual = 1e-6;

struct Window {
  double lower;
  double upper;
  bool contains(double e) const noexcept { return e > lower && e < upper; }
};

Window admissible_window(const BandedOperator& op, std::size_t n) {
  const double inf = std::numeric_limits<double>::infinity();
  return {n >= 2 ? op.diag(n - 2) : -inf,
          n + 2 < op.dimension() ? op.diag(n + 2) : inf};
}

bool diverged(double e) { return !std::isfinite(e) || std::abs(e) > kDivergenceBound; }

double scaled(double tol, double e) { return tol * std::max(1.0, std::abs(e)); }

class Evaluator {
 public:
  Evaluator(const BandedOperator& op, int n, int K) : op_(op), n_(n), K_(K) {}
  double operator()(double e) {
    ++count;
    return evaluate_series(op_, n_, e, K_).total - e;
  }
  int count = 0;

 private:
  const BandedOperator& op_;
  int n_;
  int K_;
};

// Bracket a sign change of F around `center` inside the window, then refine.
std::optional<double> bracketed_refine(Evaluator& F, double center,
                                       double center_residual,
                                       const Window& window,
                                       const SolverOptions& options,
                                       double& final_residual) {
  double step = std::max(4.0 * std::abs(center_residual),
                         1e-12 * std::max(1.0, std::abs(center)));
  const int budget_end = F.count + options.max_iterations;
  double a = center, b = center, fa = center_residual, fb = center_residual;
  bool found = false;
  while (F.count + 2 <= budget_end) {
    a = center - step;
    b = center + step;
    if (!window.contains(a) || !window.contains(b)) break;
    fa = F(a);
    fb = F(b);
    if (!std::isfinite(fa) || !std::isfinite(fb)) break;
    if (fa * fb <= 0.0) {
      found = true;
      break;
    }
    step *= 2.0;
  }
  if (!found) return std::nullopt;

  auto tol = [](double lo, double hi) {
    return std::abs(hi - lo) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                    std::max(std::abs(lo), std::abs(hi));
  };
  std::uintmax_t iters =
      static_cast<std::uintmax_t>(std::max(1, budget_end - F.count));
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      [&F](double e) { return F(e); }, a, b, fa, fb, tol, iters);
  double best = 0.5 * (lo + hi);
  double r = F(best);
  for (double cand : {lo, hi}) {
    const double rc = F(cand);
    if (std::abs(rc) < std::abs(r)) {
      r = rc;
      best = cand;
    }
  }
  final_residual = r;
  if (std::abs(r) <= scaled(options.tolerance, best)) return best + r;
  return std::nullopt;
}

}  // namespace

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged:
      return "Converged";
    case SolveStatus::NoConvergence:
      return "NoConvergence";
    case SolveStatus::SmallDenominator:
      return "SmallDenominator";
  }
  return "Unknown";
}

EnergySolution self_consistent_energy(const SchemeSpec& scheme, int state_n,
                                      int order_K,
                                      const SolverOptions& options) {
  if (state_n < 0) throw InputError("state index must be non-negative");
  if (order_K < 0) throw InputError("order must be non-negative");
  if (!(options.tolerance > 0.0)) throw InputError("tolerance must be positive");
  if (options.max_iterations < 1) {
    throw InputError("iteration budget must be positive");
  }

  EnergySolution out;
  out.scheme = scheme;
  out.state_n = state_n;
  out.order_K = order_K;

  const BandedOperator op =
      build_banded(scheme, required_dimension(state_n, order_K));
  const auto n = static_cast<std::size_t>(state_n);
  const Window window = admissible_window(op, n);
  Evaluator F(op, state_n, order_K);

  double e = op.diag(n);
  double beta = 1.0;
  double prev_r = 0.0;
  double r = 0.0;

  try {
    for (int it = 0; it < options.max_iterations; ++it) {
      r = F(e);
      const double g = e + r;
      out.iterations = F.count;
      out.final_residual = r;
      if (diverged(g)) {
        out.status = SolveStatus::NoConvergence;
        return out;
      }
      if (std::abs(r) <= scaled(options.tolerance, e)) {
        if (window.contains(g)) {
          out.status = SolveStatus::Converged;
          out.energy = g;
        } else {
          out.status = SolveStatus::NoConvergence;
        }
        return out;
      }
      if (it > 0 && r * prev_r < 0.0) beta = std::max(0.5 * beta, kMinDamping);
      prev_r = r;
      e += beta * r;
      if (diverged(e)) {
        out.status = SolveStatus::NoConvergence;
        return out;
      }
    }

    out.status = SolveStatus::NoConvergence;
    if (window.contains(e) && std::abs(r) <= kStallResidual * std::max(1.0, std::abs(e))) {
      r = F(e);
      double final_residual = r;
      const auto root =
          bracketed_refine(F, e, r, window, options, final_residual);
      out.iterations = F.count;
      out.final_residual = final_residual;
      if (root && window.contains(*root)) {
        out.status = SolveStatus::Converged;
        out.energy = *root;
      }
    }
  } catch (const SmallDenominatorError&) {
    out.iterations = F.count;
    out.status = SolveStatus::SmallDenominator;
    out.energy.reset();
  }
  return out;
}

ConvergenceTable convergence_table(const SchemeSpec& scheme, int state_n,
                                   int K_max, const SolverOptions& options) {
  if (K_max < 0) throw InputError("maximum order must be non-negative");
  ConvergenceTable table;
  table.scheme = scheme;
  table.state_n = state_n;
  table.lambda = scheme.lambda;
  table.rows.reserve(static_cast<std::size_t>(K_max) + 1);
  for (int K = 0; K <= K_max; ++K) {
    table.rows.push_back(self_consistent_energy(scheme, state_n, K, options));
  }
  return table;
}

int shared_significant_digits(double a, double b) {
  constexpr int kDigits = 16;
  if (a == b) return kDigits;
  char sa[32];
  char sb[32];
  std::snprintf(sa, sizeof sa, "%.*e", kDigits - 1, a);
  std::snprintf(sb, sizeof sb, "%.*e", kDigits - 1, b);
  const std::string_view va(sa), vb(sb);
  if (va.substr(va.find('e')) != vb.substr(vb.find('e')) || (a < 0) != (b < 0)) {
    return 0;
  }
  int shared = 0;
  for (std::size_t i = 0; i < va.size() && va[i] != 'e'; ++i) {
    if (va[i] == '-' || va[i] == '.') continue;
    if (va[i] != vb[i]) break;
    ++shared;
  }
  return std::min(shared, kDigits);
}

int digits_stabilized(const ConvergenceTable& table) {
  std::vector<double> values;
  for (const auto& row : table.rows) {
    if (row.converged()) values.push_back(*row.energy);
  }
  if (values.size() < 2) {
    throw UndefinedMeasureError("need at least two converged rows");
  }
  return shared_significant_digits(values[values.size() - 2], values.back());
}

}  // namespace mfnps
