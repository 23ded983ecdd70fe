#pragma once

#include <cstddef>
#include <vector>

#include "mfnps/hamiltonian.hpp"

namespace mfnps {

/// Lowest eigenvalues of the untransformed oscillator Hamiltonian
/// p^2/2 + x^2/2 + lambda x^4 in a truncated frequency-1 number basis.
struct OracleResult {
  double lambda = 0.0;
  std::size_t dimension = 0;
  std::vector<double> eigenvalues;          // ascending
  std::vector<double> truncation_estimate;  // |E(dim) - E(dim/2)| per level
};

/// Lowest `count` eigenvalues of the full symmetric matrix implied by `op`.
/// Throws NumericalError if the eigensolver fails.
std::vector<double> lowest_eigenvalues(const BandedOperator& op,
                                       std::size_t count);

/// Requires dimension >= count + 10.
OracleResult diagonalize(double lambda, std::size_t dimension,
                         std::size_t count);

/// Levels 0..n from a basis doubled from max(64, 4n + 32) until every level
/// moves by less than tolerance * max(1, |E|) between successive sizes.
/// The relative floor matters at strong coupling, where rounding in the
/// large-norm matrix leaves ~1e-11 relative noise on the levels.
OracleResult converged_levels(double lambda, int state_n, double tolerance);

/// Level n of converged_levels. Throws NumericalError beyond 8192 states.
double oracle_energy(double lambda, int state_n, double tolerance);

inline constexpr std::size_t kOracleDimensionCap = 8192;

}  // namespace mfnps
