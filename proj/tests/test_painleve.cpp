// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "corner_suite.hpp"
#include "ptw/error.hpp"
#include "ptw/painleve.hpp"
#include "ptw/toeplitz.hpp"

using ptw::Real;
using ptw_test::rel_diff;

namespace {

constexpr ptw::Bits kBits = 128;

// Ai(x) and Ai'(x) from the Maclaurin series in 400-bit arithmetic.
std::pair<double, double> airy_oracle(double x) {
  constexpr ptw::Bits b = 400;
  Real g13(b), g23(b), third(1L, b);
  third /= 3L;
  mpfr_gamma(g13.raw(), third.raw(), MPFR_RNDN);
  const Real two_thirds = third * 2L;
  mpfr_gamma(g23.raw(), two_thirds.raw(), MPFR_RNDN);
  Real three(3L, b), p13(b), p23(b);
  mpfr_pow(p13.raw(), three.raw(), third.raw(), MPFR_RNDN);
  mpfr_pow(p23.raw(), three.raw(), two_thirds.raw(), MPFR_RNDN);
  const Real c1 = Real(1L, b) / (p23 * g23);  // Ai(0)
  const Real c2 = Real(1L, b) / (p13 * g13);  // -Ai'(0)
  const Real z(x, b);
  const Real z3 = z * z * z;
  // f = sum 3^k (1/3)_k z^(3k) / (3k)!, g = sum 3^k (2/3)_k z^(3k+1) / (3k+1)!
  Real fk(1L, b), gk = z, f = fk, g = gk, df(0L, b), dg(1L, b);
  for (long k = 0; k < 300; ++k) {
    fk = fk * z3 / ((3 * k + 2) * (3 * k + 3));
    gk = gk * z3 / ((3 * k + 3) * (3 * k + 4));
    f += fk;
    g += gk;
    df += fk * (3 * k + 3) / z;
    dg += gk * (3 * k + 4) / z;
  }
  return {(c1 * f - c2 * g).to_double(), (c1 * df - c2 * dg).to_double()};
}

}  // namespace

TEST_CASE("recurrence residual vanishes on direct solves") {
  const Real t(1L, kBits);
  const auto c1 = ptw::solve_corners(1, t, kBits), c2 = ptw::solve_corners(2, t, kBits),
             c3 = ptw::solve_corners(3, t, kBits);
  CHECK(std::fabs(ptw::dpii_residual(2, t, c1.U_minus, c2.U_minus, c3.U_minus).to_double()) < 1e-20);
  // U_0 = -1 closes the recurrence at n = 1.
  CHECK(std::fabs(ptw::dpii_residual(1, t, Real(ptw::kUZero, kBits), c1.U_minus, c2.U_minus)
                      .to_double()) < 1e-20);
}

TEST_CASE("dpii_extend from exact seeds") {
  const Real t(1L, kBits);
  const Real u1 = ptw::symbol_coeff(1, t, kBits) / ptw::symbol_coeff(0, t, kBits);
  const Real u2 = ptw::solve_corners(2, t, kBits).U_minus;
  const auto r = ptw::dpii_extend(u1, u2, t, 3);
  REQUIRE(r.U.size() == 3);
  CHECK(rel_diff(r.U[2], ptw::solve_corners(3, t, kBits).U_minus) < 1e-25);
}

TEST_CASE("dpii_extend reports lost precision") {
  // 128-bit seeds at small t lose ~2 log2(k / t) bits per step.
  const Real t("0.5", kBits);
  const auto seq = ptw::d_sequence(2, t, kBits);
  const auto r = ptw::dpii_extend(seq.u(1), seq.u(2), t, 40);
  REQUIRE(r.first_unstable.has_value());
  CHECK(static_cast<int>(r.U.size()) < 40);
}

TEST_CASE("dpii_sequence matches direct solves to the target precision") {
  for (const char* ts : {"0.5", "1", "2"}) {
    const Real t(ts, kBits);
    const auto r = ptw::dpii_sequence(20, t, kBits);
    REQUIRE(r.U.size() == 20);
    CHECK_FALSE(r.first_unstable.has_value());
    for (int k : {1, 7, 14, 20})
      CHECK(rel_diff(r.U[static_cast<std::size_t>(k - 1)], ptw::solve_corners(k, t, kBits).U_minus) <
            1e-25);
  }
  CHECK(ptw::dpii_working_bits(20, 0.5, 128) > 128 + 100);
  CHECK(ptw::dpii_working_bits(1, 5.0, 128) == 128 + 16);
}

TEST_CASE("Toeplitz-derived functions satisfy their equations") {
  for (int n = 2; n <= 5; ++n)
    for (double t : {0.2, 1.0, 3.0}) {
      CHECK(ptw::toeplitz_pv_residual(n, t) < 1e-8);
      CHECK(ptw::toeplitz_piii_residual(n, t) < 1e-8);
      for (double r : ptw::derivative_identity_residuals(n, t)) CHECK(r < 1e-8);
    }
  CHECK_THROWS_AS(ptw::toeplitz_piii_residual(1, 1.0), ptw::InvalidArgument);
}

TEST_CASE("residual templates reject perturbed data") {
  const Real t(1L, 256);
  const Real phi = ptw::toeplitz_phi(3, t, 256);
  // A constant is not a solution.
  CHECK(std::fabs(ptw::pv_residual(3, t, phi, Real(0L, 256), Real(0L, 256)).to_double()) > 1e-3);
}

TEST_CASE("P_V integration tracks 1 - U_n^2") {
  const auto tr = ptw::integrate_pv(3, 0.2, 3.0, 1e-12, 29);
  REQUIRE(tr.t.size() == 29);
  CHECK(tr.t.front() == 0.2);
  CHECK(tr.t.back() == doctest::Approx(3.0));
  const auto ref = ptw::toeplitz_reference(tr);
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::fabs(tr.value[i] - ref[i]) < 1e-7);
}

TEST_CASE("P_III integration from Toeplitz data tracks U_n / U_{n-1}") {
  for (int n = 2; n <= 5; ++n) {
    const auto tr = ptw::integrate_piii(n, 0.2, 3.0, 1e-12, 15, ptw::PiiiStart::Toeplitz);
    const auto ref = ptw::toeplitz_reference(tr);
    for (std::size_t i = 0; i < ref.size(); ++i)
      CHECK(std::fabs(tr.value[i] - ref[i]) < 1e-8 * std::max(1.0, std::fabs(ref[i])));
  }
  // n = 3, t = 1 against the direct solve.
  const auto tr = ptw::integrate_piii(3, 0.2, 1.0, 1e-12, 2, ptw::PiiiStart::Toeplitz);
  const Real one(1L, kBits);
  const double w = (ptw::solve_corners(3, one, kBits).U_minus / ptw::solve_corners(2, one, kBits).U_minus)
                       .to_double();
  CHECK(tr.value.back() == doctest::Approx(w).epsilon(1e-8));
}

TEST_CASE("small-t series of W_n") {
  // Leading term -t / n from U_n ~ (-1)^(n+1) t^n / n!.
  for (int n = 2; n <= 6; ++n) CHECK(ptw::piii_series(n, 1e-4) == doctest::Approx(-1e-4 / n).epsilon(1e-6));
  // Correct through the printed order for n >= 4.
  for (int n = 4; n <= 6; ++n) {
    const double w = ptw::toeplitz_w(n, Real(0.05, 256), 256).to_double();
    CHECK(ptw::piii_series(n, 0.05) == doctest::Approx(w).epsilon(1e-12));
  }
  CHECK_THROWS_AS(ptw::integrate_piii(1, 0.1, 1.0), ptw::InvalidArgument);
}

TEST_CASE("Airy asymptotics against the Maclaurin oracle") {
  const auto [ai6, dai6] = airy_oracle(6.0);
  CHECK(ai6 == doctest::Approx(9.94769436025e-6).epsilon(1e-10));
  const auto a6 = ptw::airy_ai(6.0);
  CHECK(a6.ai == doctest::Approx(ai6).epsilon(5e-10));
  CHECK(a6.dai == doctest::Approx(dai6).epsilon(5e-10));
  for (double s : {8.0, 9.0, 10.0}) {
    const auto [ai, dai] = airy_oracle(s);
    const auto a = ptw::airy_ai(s);
    CHECK(a.ai == doctest::Approx(ai).epsilon(1e-12));
    CHECK(a.dai == doctest::Approx(dai).epsilon(1e-12));
  }
  CHECK_THROWS_AS(ptw::airy_ai(2.0), ptw::InvalidArgument);
}

TEST_CASE("Painleve II solution and F") {
  const auto sol = ptw::integrate_pii(8, -10);
  CHECK(sol.s.front() == 8);
  CHECK(sol.s_min() == doctest::Approx(-10));
  CHECK(sol.F_at(-2) == doctest::Approx(0.413224142505).epsilon(1e-8));
  CHECK(sol.F_at(0) == doctest::Approx(0.969372828355).epsilon(1e-8));
  CHECK(sol.q_at(0) == doctest::Approx(0.3670615515).epsilon(1e-9));
  // q ~ sqrt(-s / 2) as s -> -infinity.
  CHECK(sol.q_at(-10) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-2));
  // q ~ Ai(s) at the right end.
  CHECK(sol.q_at(6) == doctest::Approx(ptw::airy_ai(6).ai).epsilon(1e-6));
  for (std::size_t i = 1; i < sol.size(); ++i) CHECK(sol.q[i] > 0);
  CHECK_THROWS_AS(sol.q_at(9), ptw::OutOfRange);
}

TEST_CASE("Painleve II start point robustness") {
  const auto a = ptw::integrate_pii(8, -9), b = ptw::integrate_pii(10, -9);
  double worst = 0;
  for (double s = -8; s <= 2; s += 0.25) worst = std::max(worst, std::fabs(a.F_at(s) - b.F_at(s)));
  CHECK(worst < 1e-9);
}

TEST_CASE("Painleve II quad-precision path") {
  const auto sol = ptw::integrate_pii(8, -12);
  CHECK(sol.s_min() == doctest::Approx(-12));
  CHECK(sol.F_at(-2) == doctest::Approx(0.413224142505).epsilon(1e-8));
}

TEST_CASE("Painleve II argument validation") {
  CHECK_THROWS_AS(ptw::integrate_pii(5, -8), ptw::InvalidArgument);
  CHECK_THROWS_AS(ptw::integrate_pii(8, -13), ptw::InvalidArgument);
  CHECK_THROWS_AS(ptw::integrate_pii(8, 9), ptw::InvalidArgument);
  CHECK_THROWS_AS(ptw::integrate_pii(8, -8, 1e-12, 0), ptw::InvalidArgument);
}
