#pragma once

#include <cstddef>
#include <vector>

#include "mfnps/splitparams.hpp"

namespace mfnps {

/// H = H_D + H_N in the number basis of the scheme's frequency, truncated to
/// states 0 .. dimension-1. H_D is diagonal; H_N couples m to m+-2 and m+-4
/// only. Lower couplings follow from symmetry.
class BandedOperator {
 public:
  BandedOperator() = default;
  BandedOperator(std::vector<double> diag, std::vector<double> off2,
                 std::vector<double> off4);

  std::size_t dimension() const noexcept { return diag_.size(); }

  /// <m|H_D|m>.
  double diag(std::size_t m) const { return diag_[m]; }
  /// <m|H_N|m+2>, zero when m+2 is outside the basis.
  double off2(std::size_t m) const noexcept {
    return m < off2_.size() ? off2_[m] : 0.0;
  }
  /// <m|H_N|m+4>, zero when m+4 is outside the basis.
  double off4(std::size_t m) const noexcept {
    return m < off4_.size() ? off4_[m] : 0.0;
  }
  /// <i|H_N|j> for any pair; zero on the diagonal and beyond the band.
  double coupling(std::size_t i, std::size_t j) const noexcept;

  const std::vector<double>& diag_values() const noexcept { return diag_; }
  const std::vector<double>& off2_values() const noexcept { return off2_; }
  const std::vector<double>& off4_values() const noexcept { return off4_; }

  /// Row-major dense matrix of H_D + H_N.
  std::vector<double> dense() const;

 private:
  std::vector<double> diag_;
  std::vector<double> off2_;  // size max(0, dimension-2)
  std::vector<double> off4_;  // size max(0, dimension-4)
};

/// ((2m+1)/4)(W + 1/W) + (3 lambda / 4W^2)(2m^2+2m+1).
double diag_element(const SchemeSpec& scheme, int m);

/// <m|H_N|m+2> in the form appropriate to scheme.kind.
double offdiag2(const SchemeSpec& scheme, int m);

/// lambda sqrt((m+1)(m+2)(m+3)(m+4)) / (4 W^2).
double offdiag4(const SchemeSpec& scheme, int m);

BandedOperator build_banded(const SchemeSpec& scheme, std::size_t dimension);

}  // namespace mfnps
