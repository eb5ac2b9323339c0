// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "corner_suite.hpp"
#include "ptw/error.hpp"
#include "ptw/toeplitz.hpp"

using ptw::Real;
using ptw_test::rel_diff;

namespace {

constexpr ptw::Bits kBits = 128;

// I_k(2t) = sum_m t^(2m+k) / (m! (m+k)!) summed in 200-bit arithmetic.
Real bessel_oracle(long k, const Real& t) {
  const Real tw = t.with_bits(200);
  Real term(1L, 200);
  for (long i = 1; i <= k; ++i) term = term * tw / i;
  Real sum = term;
  for (long m = 1; m < 200; ++m) {
    term = term * tw * tw / (m * (m + k));
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("symbol coefficients") {
  CHECK(ptw::symbol_coeff(0, Real(0L, kBits), kBits).to_double() == 1.0);
  const Real t("0.1", kBits);
  CHECK(ptw::symbol_coeff(3, t, kBits).to_double() == doctest::Approx(1.66676e-4).epsilon(1e-5));
  CHECK(rel_diff(ptw::symbol_coeff(3, t, kBits), bessel_oracle(3, t)) < 1e-36);
  CHECK(rel_diff(ptw::symbol_coeff(-2, t, kBits), ptw::symbol_coeff(2, t, kBits)) == 0);
  const Real big(7L, kBits);
  for (long k : {0L, 1L, 5L, 12L}) CHECK(rel_diff(ptw::symbol_coeff(k, big, kBits), bessel_oracle(k, big)) < 1e-35);
}

TEST_CASE("parity of U_1 under t -> -t") {
  const Real t("0.7", kBits);
  const Real u = ptw::solve_corners(1, t, kBits).U_minus, um = ptw::solve_corners(1, -t, kBits).U_minus;
  CHECK(rel_diff(um, -u) < 1e-35);
  CHECK(rel_diff(u, bessel_oracle(1, t) / bessel_oracle(0, t)) < 1e-35);
}

TEST_CASE("1x1 and 2x2 corner data") {
  const Real t(1L, kBits);
  const auto c1 = ptw::solve_corners(1, t, kBits);
  CHECK(rel_diff(c1.U_minus, bessel_oracle(1, t) / bessel_oracle(0, t)) < 1e-35);

  const auto c2 = ptw::solve_corners(2, t, kBits);
  const Real i0 = bessel_oracle(0, t), i1 = bessel_oracle(1, t);
  CHECK(rel_diff(c2.log_det, ptw::log(i0 * i0 - i1 * i1)) < 1e-35);
  CHECK(c2.V_plus > 0.0);
}

TEST_CASE("small-t leading behaviour of U_n") {
  const Real t("1e-3", kBits);
  for (int n = 1; n <= 5; ++n) {
    double lead = std::pow(1e-3, n);
    for (int i = 2; i <= n; ++i) lead /= i;
    if (n % 2 == 0) lead = -lead;
    const double u = ptw::solve_corners(n, t, kBits).U_minus.to_double();
    CHECK(u / lead == doctest::Approx(1.0).epsilon(1e-2));
  }
}

TEST_CASE("d_sequence agrees with independent direct solves") {
  const Real one(1L, kBits);
  const auto seq = ptw::d_sequence(5, one, kBits);
  for (int k = 1; k <= 5; ++k) {
    const auto c = ptw::solve_corners(k, one, kBits);
    CHECK(rel_diff(seq.u(k), c.U_minus) < std::ldexp(1.0, -(kBits - 20)));
    CHECK(ptw::abs(seq.log_d(k) - c.log_det).to_double() < std::ldexp(1.0, -(kBits - 20)));
  }
  // Larger sizes and t lose a few more bits to conditioning.
  for (const char* ts : {"0.5", "2", "3.7"}) {
    const Real t(ts, kBits);
    const auto s = ptw::d_sequence(12, t, kBits);
    REQUIRE(s.n_max() == 12);
    CHECK(s.log_d(0).is_zero());
    for (int k = 1; k <= 12; ++k) {
      const auto c = ptw::solve_corners(k, t, kBits);
      CHECK(rel_diff(s.u(k), c.U_minus) < std::ldexp(1.0, -(kBits - 30)));
      CHECK(ptw::abs(s.log_d(k) - c.log_det).to_double() < std::ldexp(1.0, -(kBits - 30)));
    }
  }
}

TEST_CASE("d_sequence near t = 0") {
  const auto seq = ptw::d_sequence(6, Real("1e-20", kBits), kBits);
  for (int k = 0; k < 6; ++k) CHECK(std::fabs(seq.log_d(k).to_double()) < 1e-30);
}

TEST_CASE("two-parameter determinant") {
  for (int n = 1; n <= 4; ++n)
    CHECK(rel_diff(ptw::det_general(n, Real(2.3, kBits), Real(0L, kBits), kBits), Real(1L, kBits)) < 1e-35);
  CHECK(rel_diff(ptw::det_general(3, Real(2L, kBits), Real(0.5, kBits), kBits),
                 ptw::det_general(3, Real(1L, kBits), Real(1L, kBits), kBits)) < 1e-35);
  const Real r(0.7, kBits), s(1.9, kBits);
  CHECK(rel_diff(ptw::det_general(1, r, s, kBits), bessel_oracle(0, ptw::sqrt(r * s))) < 1e-35);
}

TEST_CASE("Dhat special cases") {
  const Real t("0.8", kBits), zero(0L, kBits);
  for (int n = 1; n <= 6; ++n) {
    const Real prod = ptw::exp(ptw::solve_corners((n + 1) / 2, t, kBits).log_det) *
                      (n / 2 >= 1 ? ptw::exp(ptw::solve_corners(n / 2, t, kBits).log_det) : Real(1L, kBits));
    CHECK(rel_diff(ptw::dhat(n, zero, t, kBits), prod) < 1e-33);
    CHECK(rel_diff(ptw::dhat(n, t, zero, kBits), ptw::exp(ptw::solve_corners(n, t, kBits).log_det)) <
          1e-33);
  }
}

TEST_CASE("corner identity suite") {
  int checks = 0;
  const auto failures = ptw_test::run_corner_suite(20, 7u, 1e-10, &checks);
  CHECK(checks == 20 * 9);
  for (const auto& f : failures) FAIL_CHECK(f.identity << " n=" << f.n << " t=" << f.t << " rel=" << f.rel);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(ptw::solve_corners(0, Real(1L, kBits), kBits), ptw::InvalidArgument);
  CHECK_THROWS_AS(ptw::solve_corners(2, Real(1L, kBits), 32), ptw::InvalidArgument);
  CHECK_THROWS_AS(ptw::d_sequence(0, Real(1L, kBits), kBits), ptw::InvalidArgument);
}
