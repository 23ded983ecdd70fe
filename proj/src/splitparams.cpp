#include "mfnps/splitparams.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "mfnps/errors.hpp"

namespace mfnps {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw InputError(std::string(name) + " must be finite");
  }
}

void require_coupling(double lambda) {
  require_finite(lambda, "lambda");
  if (lambda < 0.0) {
    throw UnsupportedCouplingError("negative coupling is not supported");
  }
}

double cubic_value(double x, double a, double b) { return (x * x - a) * x - b; }

}  // namespace

double cubic_positive_root(double quadratic_coeff, double constant_term) {
  const double a = quadratic_coeff;
  const double b = constant_term;
  require_finite(a, "quadratic coefficient");
  require_finite(b, "constant term");
  if (a < 0.0 || b < 0.0) {
    throw InputError("cubic coefficients must be non-negative");
  }
  if (b == 0.0) return std::sqrt(a);

  // f(x) = x^3 - a x - b is negative at sqrt(a) and cbrt(b) and non-negative
  // at sqrt(a) + cbrt(b), so the root lies in [lo, hi]; f is convex there.
  const double s = std::sqrt(a);
  const double t = std::cbrt(b);
  double lo = std::max(s, t);
  double hi = s + t;
  double x = hi;
  double best = x;
  double best_res = std::abs(cubic_value(x, a, b));

  for (int iter = 0; iter < 200; ++iter) {
    const double f = cubic_value(x, a, b);
    if (std::abs(f) < best_res) {
      best_res = std::abs(f);
      best = x;
    }
    if (f == 0.0) break;
    if (f > 0.0) {
      hi = std::min(hi, x);
    } else {
      lo = std::max(lo, x);
    }
    const double df = 3.0 * x * x - a;
    double next = df > 0.0 ? x - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 2.0 * std::numeric_limits<double>::epsilon() * x) {
      x = next;
      const double fn = std::abs(cubic_value(x, a, b));
      if (fn < best_res) {
        best_res = fn;
        best = x;
      }
      break;
    }
    x = next;
  }

  // When x^3 and a x nearly cancel the residual cannot drop below the
  // rounding of the larger terms.
  const double rounding =
      4.0 * std::numeric_limits<double>::epsilon() * (best * best * best + a * best + b);
  if (best_res > std::max(1e-13 * std::max(1.0, b), rounding)) {
    throw NumericalError("cubic root did not reach the residual bound");
  }
  return best;
}

double solve_base_frequency(double lambda) {
  require_coupling(lambda);
  return cubic_positive_root(1.0, 6.0 * lambda);
}

double SplitChain::counterterm_sum() const noexcept {
  if (steps.empty()) return 0.0;
  double sum = 1.0 / base_w;
  for (std::size_t j = 0; j + 1 < steps.size(); ++j) sum += 1.0 / steps[j];
  return sum;
}

SplitChain build_chain(double lambda, int depth_k) {
  if (depth_k < 1) throw InputError("chain depth must be at least 1");
  SplitChain chain;
  chain.lambda = lambda;
  chain.base_w = solve_base_frequency(lambda);
  chain.steps.reserve(static_cast<std::size_t>(depth_k));
  double previous = chain.base_w;
  for (int j = 0; j < depth_k; ++j) {
    previous = cubic_positive_root(previous * previous, 6.0 * lambda);
    chain.steps.push_back(previous);
  }
  return chain;
}

double solve_variational_W(double lambda, int state_n, double base) {
  require_coupling(lambda);
  require_finite(base, "base frequency");
  if (state_n < 0) throw InputError("state index must be non-negative");
  if (base < 1.0) throw InputError("base frequency must be at least 1");
  const double n = state_n;
  const double weight = (2.0 * n * n + 2.0 * n + 1.0) / (2.0 * n + 1.0);
  return cubic_positive_root(base * base, 6.0 * lambda * weight);
}

std::string SchemeSpec::descriptor() const {
  switch (kind) {
    case SchemeKind::ChainStateIndependent:
      return "chain:" + std::to_string(depth);
    case SchemeKind::VariationalSingleStep:
      return "var1";
    case SchemeKind::VariationalTwoStep:
      return "var2";
    case SchemeKind::Unsplit:
      break;
  }
  return "unsplit";
}

SchemeSpec chain_scheme(double lambda, int depth_k) {
  const SplitChain chain = build_chain(lambda, depth_k);
  SchemeSpec scheme;
  scheme.kind = SchemeKind::ChainStateIndependent;
  scheme.lambda = lambda;
  scheme.depth = depth_k;
  scheme.effective_W = chain.top();
  scheme.counterterm_sum = chain.counterterm_sum();
  scheme.parameters.push_back(chain.base_w);
  scheme.parameters.insert(scheme.parameters.end(), chain.steps.begin(),
                           chain.steps.end());
  return scheme;
}

SchemeSpec variational_single_step(double lambda, int state_n) {
  SchemeSpec scheme;
  scheme.kind = SchemeKind::VariationalSingleStep;
  scheme.lambda = lambda;
  scheme.state_n = state_n;
  scheme.effective_W = solve_variational_W(lambda, state_n, 1.0);
  scheme.parameters = {scheme.effective_W};
  return scheme;
}

SchemeSpec variational_two_step(double lambda, int state_n) {
  const double w = solve_base_frequency(lambda);
  SchemeSpec scheme;
  scheme.kind = SchemeKind::VariationalTwoStep;
  scheme.lambda = lambda;
  scheme.state_n = state_n;
  scheme.effective_W = solve_variational_W(lambda, state_n, w);
  scheme.parameters = {w, scheme.effective_W};
  return scheme;
}

SchemeSpec unsplit_scheme(double lambda) {
  require_coupling(lambda);
  SchemeSpec scheme;
  scheme.kind = SchemeKind::Unsplit;
  scheme.lambda = lambda;
  scheme.effective_W = 1.0;
  return scheme;
}

SchemeSpec parse_scheme(const std::string& descriptor, double lambda,
                        int state_n) {
  if (descriptor == "var1") return variational_single_step(lambda, state_n);
  if (descriptor == "var2") return variational_two_step(lambda, state_n);
  if (descriptor == "unsplit") return unsplit_scheme(lambda);
  const std::string prefix = "chain:";
  if (descriptor.rfind(prefix, 0) == 0) {
    const char* first = descriptor.data() + prefix.size();
    const char* last = descriptor.data() + descriptor.size();
    int depth = 0;
    const auto [ptr, ec] = std::from_chars(first, last, depth);
    if (ec == std::errc() && ptr == last && first != last) {
      return chain_scheme(lambda, depth);
    }
  }
  throw InputError("unknown scheme '" + descriptor +
                   "' (expected chain:k, var1, var2 or unsplit)");
}

std::vector<std::string> parameter_names(const SchemeSpec& scheme) {
  switch (scheme.kind) {
    case SchemeKind::ChainStateIndependent: {
      std::vector<std::string> names{"w"};
      for (int j = 1; j <= scheme.depth; ++j) {
        names.push_back("W" + std::to_string(j));
      }
      return names;
    }
    case SchemeKind::VariationalSingleStep:
      return {"W"};
    case SchemeKind::VariationalTwoStep:
      return {"w", "W"};
    case SchemeKind::Unsplit:
      break;
  }
  return {};
}

}  // namespace mfnps
