#include <doctest.h>

#include <cmath>

#include "mfnps/errors.hpp"
#include "mfnps/hamiltonian.hpp"
#include "mfnps/oracle.hpp"

using namespace mfnps;

TEST_CASE("diagonal elements") {
  const auto chain1 = chain_scheme(1.0, 1);
  // Printed order-0 value 0.847907429 carries 9 digits; the exact value of the
  // formula is 0.84790745400252162 (mpmath).
  CHECK(diag_element(chain1, 0) == doctest::Approx(0.84790745400252162).epsilon(1e-15));

  const auto bare = variational_single_step(0.0, 3);
  CHECK(diag_element(bare, 3) == doctest::Approx(3.5).epsilon(1e-15));

  const auto var1 = variational_single_step(1.0, 1);
  CHECK(diag_element(var1, 1) == doctest::Approx(2.7599352226581603).epsilon(1e-14));
  CHECK_THROWS_AS(diag_element(var1, -1), InputError);
}

TEST_CASE("off-diagonal couplings") {
  const auto chain1 = chain_scheme(1.0, 1);
  CHECK(offdiag2(chain1, 0) == doctest::Approx(-0.42004642376663487).epsilon(1e-14));
  CHECK(offdiag4(chain1, 0) == doctest::Approx(0.19208245160878774).epsilon(1e-14));

  auto bare = unsplit_scheme(1.0);
  CHECK(offdiag2(bare, 0) == doctest::Approx(1.5 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(offdiag4(bare, 0) == doctest::Approx(std::sqrt(24.0) / 4.0).epsilon(1e-15));

  for (const auto& s : {chain_scheme(0.0, 2), variational_single_step(0.0, 5),
                        variational_two_step(0.0, 5), unsplit_scheme(0.0)}) {
    CHECK(offdiag2(s, 5) == 0.0);
    CHECK(offdiag4(s, 5) == 0.0);
  }
}

TEST_CASE("chain couplings equal the generic form when W solves the chain cubic") {
  // Both expressions describe the same Hamiltonian; the chain form uses the
  // cubic to cancel the kinetic mismatch.
  for (double lambda : {0.01, 1.0, 100.0}) {
    for (int k = 1; k <= 4; ++k) {
      const auto chain = chain_scheme(lambda, k);
      auto generic = chain;
      generic.kind = SchemeKind::VariationalSingleStep;
      for (int m = 0; m < 40; ++m) {
        CHECK(offdiag2(chain, m) ==
              doctest::Approx(offdiag2(generic, m)).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("depth-1 chain is the two-step case bit for bit") {
  // lambda sqrt((m+1)(m+2))/W1 (m/W1 - 3/(2w)) written out directly.
  const auto chain = build_chain(1.0, 1);
  const auto scheme = chain_scheme(1.0, 1);
  for (int m = 0; m < 20; ++m) {
    const double x = m;
    const double two_step = 1.0 * std::sqrt((x + 1.0) * (x + 2.0)) / chain.steps[0] *
                            (x / chain.steps[0] - 1.5 * (1.0 / chain.base_w));
    CHECK(offdiag2(scheme, m) == two_step);
  }
}

TEST_CASE("build_banded layout and invariants") {
  const auto scheme = chain_scheme(1.0, 1);
  const auto op = build_banded(scheme, 5);
  CHECK(op.dimension() == 5);
  CHECK(op.diag(0) == diag_element(scheme, 0));
  CHECK(op.off2(0) == offdiag2(scheme, 0));
  CHECK(op.off4(0) == offdiag4(scheme, 0));
  CHECK(op.off2_values().size() == 3);
  CHECK(op.off4_values().size() == 1);
  CHECK(op.off4(1) == 0.0);

  const auto single = build_banded(scheme, 1);
  CHECK(single.dimension() == 1);
  CHECK(single.off2_values().empty());
  CHECK(single.off4_values().empty());
  CHECK_THROWS_AS(build_banded(scheme, 0), InputError);

  for (const auto& s : {chain_scheme(0.3, 3), variational_single_step(2.0, 4),
                        variational_two_step(100.0, 7), unsplit_scheme(1.0)}) {
    const auto big = build_banded(s, 60);
    const auto dense = big.dense();
    for (std::size_t i = 0; i < 60; ++i) {
      if (i > 0) CHECK(big.diag(i) > big.diag(i - 1));
      for (std::size_t j = 0; j < 60; ++j) {
        CHECK(dense[i * 60 + j] == dense[j * 60 + i]);
        const std::size_t gap = i > j ? i - j : j - i;
        if (gap != 0 && gap != 2 && gap != 4) CHECK(dense[i * 60 + j] == 0.0);
        if (i != j) CHECK(big.coupling(i, j) == dense[i * 60 + j]);
      }
      CHECK(big.coupling(i, i) == 0.0);
      CHECK(std::isfinite(big.diag(i)));
    }
  }
}

TEST_CASE("every scheme represents the same Hamiltonian") {
  // Lowest levels of H_D + H_N agree across schemes and with the bare basis.
  for (double lambda : {0.1, 1.0}) {
    const auto reference = lowest_eigenvalues(build_banded(unsplit_scheme(lambda), 400), 3);
    for (const auto& s : {chain_scheme(lambda, 1), chain_scheme(lambda, 3),
                          variational_single_step(lambda, 0),
                          variational_single_step(lambda, 2),
                          variational_two_step(lambda, 1)}) {
      const auto levels = lowest_eigenvalues(build_banded(s, 400), 3);
      for (std::size_t i = 0; i < 3; ++i) {
        CAPTURE(s.descriptor());
        CHECK(std::abs(levels[i] - reference[i]) < 1e-6);
      }
    }
  }
}
