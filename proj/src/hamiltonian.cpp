#include "mfnps/hamiltonian.hpp"

#include <cmath>

#include "mfnps/errors.hpp"

namespace mfnps {

BandedOperator::BandedOperator(std::vector<double> diag,
                               std::vector<double> off2,
                               std::vector<double> off4)
    : diag_(std::move(diag)), off2_(std::move(off2)), off4_(std::move(off4)) {
  const std::size_t n = diag_.size();
  if (n == 0) throw InputError("operator dimension must be at least 1");
  if (off2_.size() != (n > 2 ? n - 2 : 0) ||
      off4_.size() != (n > 4 ? n - 4 : 0)) {
    throw InputError("band lengths do not match the dimension");
  }
}

double BandedOperator::coupling(std::size_t i, std::size_t j) const noexcept {
  const std::size_t lo = i < j ? i : j;
  switch (i < j ? j - i : i - j) {
    case 2:
      return off2(lo);
    case 4:
      return off4(lo);
    default:
      return 0.0;
  }
}

std::vector<double> BandedOperator::dense() const {
  const std::size_t n = dimension();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = diag_[i];
    if (i + 2 < n) out[i * n + i + 2] = out[(i + 2) * n + i] = off2_[i];
    if (i + 4 < n) out[i * n + i + 4] = out[(i + 4) * n + i] = off4_[i];
  }
  return out;
}

double diag_element(const SchemeSpec& scheme, int m) {
  if (m < 0) throw InputError("state index must be non-negative");
  const double W = scheme.effective_W;
  const double x = m;
  return (2.0 * x + 1.0) / 4.0 * (W + 1.0 / W) +
         3.0 * scheme.lambda / (4.0 * W * W) * (2.0 * x * x + 2.0 * x + 1.0);
}

double offdiag2(const SchemeSpec& scheme, int m) {
  if (m < 0) throw InputError("state index must be non-negative");
  const double W = scheme.effective_W;
  const double lambda = scheme.lambda;
  const double x = m;
  const double root = std::sqrt((x + 1.0) * (x + 2.0));
  if (scheme.kind == SchemeKind::ChainStateIndependent) {
    // The frequency-shift counterterms of the chain absorb the kinetic
    // mismatch exactly; only the residual quadratic piece remains.
    return lambda * root / W * (x / W - 1.5 * scheme.counterterm_sum);
  }
  return root * (0.25 * (1.0 / W - W) + lambda / (W * W) * (x + 1.5));
}

double offdiag4(const SchemeSpec& scheme, int m) {
  if (m < 0) throw InputError("state index must be non-negative");
  const double W = scheme.effective_W;
  const double x = m;
  return scheme.lambda *
         std::sqrt((x + 1.0) * (x + 2.0) * (x + 3.0) * (x + 4.0)) /
         (4.0 * W * W);
}

BandedOperator build_banded(const SchemeSpec& scheme, std::size_t dimension) {
  if (dimension < 1) throw InputError("operator dimension must be at least 1");
  std::vector<double> diag(dimension);
  std::vector<double> off2(dimension > 2 ? dimension - 2 : 0);
  std::vector<double> off4(dimension > 4 ? dimension - 4 : 0);
  for (std::size_t m = 0; m < dimension; ++m) {
    const int i = static_cast<int>(m);
    diag[m] = diag_element(scheme, i);
    if (m < off2.size()) off2[m] = offdiag2(scheme, i);
    if (m < off4.size()) off4[m] = offdiag4(scheme, i);
  }
  return BandedOperator(std::move(diag), std::move(off2), std::move(off4));
}

}  // namespace mfnps
