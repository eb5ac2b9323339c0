// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ptw/error.hpp"
#include "ptw/series.hpp"
#include "ptw/toeplitz.hpp"

using ptw::TruncatedSeries;

namespace {

TruncatedSeries poly(std::initializer_list<mpq_class> c) { return TruncatedSeries(std::vector<mpq_class>(c)); }

}  // namespace

TEST_CASE("arithmetic on truncated series") {
  const TruncatedSeries one_plus_t = poly({1, 1, 0, 0});
  CHECK(one_plus_t + TruncatedSeries(3) == one_plus_t);
  CHECK(one_plus_t * one_plus_t == poly({1, 2, 1, 0}));
  // 1 / (1 + t) = 1 - t + t^2 - t^3
  CHECK(one_plus_t.inverse() == poly({1, -1, 1, -1}));
  CHECK(one_plus_t * one_plus_t.inverse() == TruncatedSeries::constant(1, 3));
  CHECK(one_plus_t.reflected() == poly({1, -1, 0, 0}));
  CHECK(poly({1, 0, 5, 0}).only_even_powers());
  CHECK_FALSE(one_plus_t.only_even_powers());
  CHECK(poly({1, 2, 3}).truncated(1) == poly({1, 2}));
  CHECK_THROWS_AS(poly({0, 1}).inverse(), ptw::Error);
  CHECK_THROWS(poly({1, 2})[5]);
}

TEST_CASE("Bessel coefficients are 1 / (m! (m + k)!)") {
  const TruncatedSeries i0 = ptw::bessel_series(0, 6);
  CHECK(i0 == poly({1, 0, 1, 0, mpq_class(1, 4), 0, mpq_class(1, 36)}));
  const TruncatedSeries i2 = ptw::bessel_series(-2, 6);
  CHECK(i2 == poly({0, 0, mpq_class(1, 2), 0, mpq_class(1, 6), 0, mpq_class(1, 48)}));
}

TEST_CASE("D_2 series") {
  // det [[I0, I1], [I1, I0]] = I0^2 - I1^2 expanded by hand.
  const TruncatedSeries d2 = ptw::toeplitz_det_series(2, 8);
  CHECK(d2 == poly({1, 0, 1, 0, mpq_class(1, 2), 0, mpq_class(5, 36), 0, mpq_class(7, 288)}));
  CHECK(ptw::toeplitz_det_series(0, 4) == TruncatedSeries::constant(1, 4));
  CHECK(ptw::toeplitz_det_series(1, 6) == ptw::bessel_series(0, 6));
}

TEST_CASE("D_n series tends to e^(t^2) as n grows") {
  // Coefficients of t^(2N) stabilise at 1 / N! once n >= N.
  const TruncatedSeries d = ptw::toeplitz_det_series(5, 10);
  for (unsigned N = 0; N <= 5; ++N) {
    const mpq_class expected(1, ptw::factorial(N));
    CHECK(d[2 * N] == expected);
  }
}

TEST_CASE("series evaluation agrees with the numeric determinant") {
  const ptw::Real t("0.3", 160);
  const TruncatedSeries d = ptw::toeplitz_det_series(3, 40);
  const ptw::Real from_series = d.evaluate(t);
  const ptw::Real numeric = ptw::exp(ptw::solve_corners(3, t, 160).log_det);
  CHECK(ptw::abs(from_series - numeric).to_double() < 1e-35);
}

TEST_CASE("Dhat series at t1 = 0 is the product of half-size determinants") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const TruncatedSeries lhs = ptw::dhat_zero_series(n, 12);
    const TruncatedSeries rhs =
        ptw::toeplitz_det_series((n + 1) / 2, 12) * ptw::toeplitz_det_series(n / 2, 12);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("factorial and exact conversion") {
  CHECK(ptw::factorial(0) == 1);
  CHECK(ptw::factorial(10) == 3628800);
  CHECK(ptw::to_real(mpq_class(1, 3), 128).to_double() == doctest::Approx(1.0 / 3));
  CHECK(poly({1, mpq_class(-1, 2)}).to_string().find("1/2") != std::string::npos);
}
