#pragma once

#include <string>
#include <vector>

namespace mfnps {

// Frequencies are dimensionless (hbar = m = 1). Every self-consistency
// condition used here reduces to the positive root of x^3 - a x - b = 0.

/// Unique positive root of x^3 - a*x - b = 0 for a, b >= 0.
/// For b == 0 the result is sqrt(a). Residual is below 1e-13 * max(1, b).
double cubic_positive_root(double quadratic_coeff, double constant_term);

/// Base frequency w with w^2 = 1 + 6*lambda/w.
double solve_base_frequency(double lambda);

/// Ordered splitting frequencies w < W_1 < ... < W_k (for lambda > 0).
struct SplitChain {
  double lambda = 0.0;
  double base_w = 1.0;
  std::vector<double> steps;  // W_1 ... W_k

  int depth() const noexcept { return static_cast<int>(steps.size()); }
  /// W_k, or base_w when the chain is empty.
  double top() const noexcept { return steps.empty() ? base_w : steps.back(); }
  /// 1/w + 1/W_1 + ... + 1/W_{k-1}.
  double counterterm_sum() const noexcept;
};

/// Chain of depth k: W_j solves W_j^3 - W_{j-1}^2 W_j - 6 lambda = 0, W_0 = w.
SplitChain build_chain(double lambda, int depth_k);

/// State-dependent frequency: positive root of
/// W^3 - base^2 W - 6 lambda (2n^2+2n+1)/(2n+1) = 0.
double solve_variational_W(double lambda, int state_n, double base);

enum class SchemeKind {
  ChainStateIndependent,
  VariationalSingleStep,
  VariationalTwoStep,
  // Untransformed Hamiltonian in the frequency-1 basis; used by the oracle.
  Unsplit,
};

/// A splitting scheme with its parameters resolved for one (lambda, n).
struct SchemeSpec {
  SchemeKind kind = SchemeKind::Unsplit;
  double lambda = 0.0;
  int depth = 0;    // chain depth k; 0 for the other kinds
  int state_n = 0;  // state the variational parameters were solved for
  double effective_W = 1.0;
  double counterterm_sum = 0.0;
  /// Parameters in presentation order: chain (w, W1..Wk), var1 (W), var2 (w, W).
  std::vector<double> parameters;

  /// Short descriptor: "chain:k", "var1", "var2" or "unsplit".
  std::string descriptor() const;
};

SchemeSpec chain_scheme(double lambda, int depth_k);
SchemeSpec variational_single_step(double lambda, int state_n);
SchemeSpec variational_two_step(double lambda, int state_n);
SchemeSpec unsplit_scheme(double lambda);

/// Parses "chain:k", "var1", "var2" or "unsplit". `state_n` feeds the
/// variational kinds. Throws InputError on an unknown descriptor.
SchemeSpec parse_scheme(const std::string& descriptor, double lambda,
                        int state_n);

/// Names matching SchemeSpec::parameters: {"w","W1",...}, {"W"}, {"w","W"}.
std::vector<std::string> parameter_names(const SchemeSpec& scheme);

}  // namespace mfnps
