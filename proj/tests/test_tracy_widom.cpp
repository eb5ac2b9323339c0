// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ptw/error.hpp"
#include "ptw/tracy_widom.hpp"

namespace {

const ptw::PainleveIISolution& solution() {
  static const ptw::PainleveIISolution sol =
      ptw::integrate_pii(ptw::kDefaultS0, ptw::kDefaultSMin, 1e-12, ptw::kDefaultStep);
  return sol;
}

ptw::DistGrid grid(ptw::Distribution which) {
  return ptw::build_dist(solution(), which, std::make_pair(ptw::kDefaultSMin, ptw::kDefaultSMax));
}

}  // namespace

TEST_CASE("grids are ascending and clipped") {
  const auto F = grid(ptw::Distribution::F);
  REQUIRE(F.size() > 100);
  CHECK(F.s.front() == doctest::Approx(-10));
  CHECK(F.s.back() == doctest::Approx(6));
  for (std::size_t i = 1; i < F.size(); ++i) {
    CHECK(F.s[i] > F.s[i - 1]);
    CHECK(F.F[i] >= F.F[i - 1]);
    CHECK(F.density[i] >= 0);
  }
}

TEST_CASE("F_O is F squared with density 2 F f") {
  const auto F = grid(ptw::Distribution::F), FO = grid(ptw::Distribution::FO);
  REQUIRE(F.size() == FO.size());
  for (std::size_t i = 0; i < F.size(); ++i) {
    CHECK(std::fabs(FO.F[i] - F.F[i] * F.F[i]) < 1e-12);
    CHECK(std::fabs(FO.density[i] - 2 * F.F[i] * F.density[i]) < 1e-12);
  }
}

TEST_CASE("density matches the derivative of F") {
  const auto F = grid(ptw::Distribution::F);
  for (std::size_t i = 1; i + 1 < F.size(); i += 97) {
    const double fd = (F.F[i + 1] - F.F[i - 1]) / (F.s[i + 1] - F.s[i - 1]);
    CHECK(F.density[i] == doctest::Approx(fd).epsilon(1e-4));
  }
}

TEST_CASE("moment table") {
  const auto a = ptw::moments(grid(ptw::Distribution::F));
  CHECK(std::fabs(a.mean + 1.77109) < 5e-4);
  CHECK(std::fabs(a.stddev - 0.9018) < 5e-4);
  CHECK(std::fabs(a.skewness - 0.224) < 5e-3);
  CHECK(std::fabs(a.excess_kurtosis - 0.093) < 5e-3);
  CHECK(a.mass == doctest::Approx(1.0).epsilon(1e-9));
  const auto b = ptw::moments(grid(ptw::Distribution::FO));
  CHECK(std::fabs(b.mean + 1.26332) < 5e-4);
  CHECK(std::fabs(b.stddev - 0.7789) < 5e-4);
  CHECK(std::fabs(b.skewness - 0.329) < 5e-3);
  CHECK(std::fabs(b.excess_kurtosis - 0.225) < 5e-3);
}

TEST_CASE("moments reject truncated grids") {
  const auto clipped = ptw::build_dist(solution(), ptw::Distribution::F, std::make_pair(-4.0, 2.0));
  CHECK_THROWS_AS(ptw::moments(clipped), ptw::Error);
}

TEST_CASE("quantiles") {
  const auto F = grid(ptw::Distribution::F);
  const double median = ptw::quantile(F, 0.5);
  CHECK(median > -1.81);
  CHECK(median < -1.80);
  for (double p : {0.01, 0.1, 0.5, 0.9, 0.99}) CHECK(F.cdf(ptw::quantile(F, p)) == doctest::Approx(p).epsilon(1e-10));
  const auto FO = grid(ptw::Distribution::FO);
  CHECK(ptw::quantile(FO, 0.5) > median);
  CHECK_THROWS(ptw::quantile(F, 0.0));
  CHECK_THROWS(ptw::quantile(F, 1.5));
}

TEST_CASE("solution must reach far enough left") {
  const auto short_sol = ptw::integrate_pii(8, -6);
  CHECK_THROWS_AS(ptw::build_dist(short_sol, ptw::Distribution::F), ptw::InvalidArgument);
}
