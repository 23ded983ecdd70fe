#include "mfnps/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mfnps/errors.hpp"
#include "mfnps/splitparams.hpp"

namespace mfnps {

namespace {

constexpr lapack_int kBandwidth = 4;

}  // namespace

std::vector<double> lowest_eigenvalues(const BandedOperator& op,
                                       std::size_t count) {
  const std::size_t dim = op.dimension();
  if (count == 0 || count > dim) {
    throw InputError("eigenvalue count must lie in [1, dimension]");
  }
  const auto n = static_cast<lapack_int>(dim);
  const lapack_int ldab = kBandwidth + 1;

  // Lower band storage, column-major: ab[(i - j) + j * ldab] = A(i, j).
  std::vector<double> ab(static_cast<std::size_t>(ldab) * dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    double* col = ab.data() + j * static_cast<std::size_t>(ldab);
    col[0] = op.diag(j);
    if (j + 2 < dim) col[2] = op.off2(j);
    if (j + 4 < dim) col[4] = op.off4(j);
  }

  std::vector<double> w(dim);
  std::vector<lapack_int> ifail(dim);
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsbevx(
      LAPACK_COL_MAJOR, 'N', 'I', 'L', n, kBandwidth, ab.data(), ldab, nullptr,
      n, 0.0, 0.0, 1, static_cast<lapack_int>(count),
      2.0 * LAPACKE_dlamch('S'), &found, w.data(),
      nullptr, 1, ifail.data());
  if (info != 0 || found != static_cast<lapack_int>(count)) {
    throw NumericalError("banded eigensolver failed (info = " +
                         std::to_string(info) + ", found " +
                         std::to_string(found) + " of " +
                         std::to_string(count) + ")");
  }
  w.resize(count);
  return w;
}

OracleResult diagonalize(double lambda, std::size_t dimension,
                         std::size_t count) {
  if (count == 0) throw InputError("eigenvalue count must be positive");
  if (dimension < count + 10) {
    throw InputError("oracle dimension must be at least count + 10");
  }
  const SchemeSpec bare = unsplit_scheme(lambda);
  OracleResult out;
  out.lambda = lambda;
  out.dimension = dimension;
  out.eigenvalues = lowest_eigenvalues(build_banded(bare, dimension), count);

  const std::size_t half = dimension / 2;
  if (half >= count) {
    const auto coarse = lowest_eigenvalues(build_banded(bare, half), count);
    for (std::size_t i = 0; i < count; ++i) {
      out.truncation_estimate.push_back(std::abs(out.eigenvalues[i] - coarse[i]));
    }
  } else {
    out.truncation_estimate.assign(count, std::numeric_limits<double>::infinity());
  }
  return out;
}

OracleResult converged_levels(double lambda, int state_n, double tolerance) {
  if (state_n < 0) throw InputError("state index must be non-negative");
  if (!(tolerance > 0.0)) throw InputError("tolerance must be positive");
  const SchemeSpec bare = unsplit_scheme(lambda);
  const auto count = static_cast<std::size_t>(state_n) + 1;

  std::size_t dim = std::max<std::size_t>(64, 4 * count + 28);
  std::vector<double> previous = lowest_eigenvalues(build_banded(bare, dim), count);
  while (dim * 2 <= kOracleDimensionCap) {
    dim *= 2;
    auto current = lowest_eigenvalues(build_banded(bare, dim), count);
    OracleResult out;
    out.lambda = lambda;
    out.dimension = dim;
    bool settled = true;
    for (std::size_t i = 0; i < count; ++i) {
      const double delta = std::abs(current[i] - previous[i]);
      out.truncation_estimate.push_back(delta);
      settled = settled && delta < tolerance * std::max(1.0, std::abs(current[i]));
    }
    if (settled) {
      out.eigenvalues = std::move(current);
      return out;
    }
    previous = std::move(current);
  }
  throw NumericalError("oracle basis did not converge for state " +
                       std::to_string(state_n) + " below dimension " +
                       std::to_string(kOracleDimensionCap));
}

double oracle_energy(double lambda, int state_n, double tolerance) {
  return converged_levels(lambda, state_n, tolerance).eigenvalues.back();
}

}  // namespace mfnps
