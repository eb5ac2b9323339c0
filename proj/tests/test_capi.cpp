// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "ptw/ptw.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ptw_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(ptw_version()) > 0);
  CHECK(std::string(ptw_status_name(PTW_OK)) == "ok");
  CHECK(std::string(ptw_status_name(PTW_INVALID_ARGUMENT)).size() > 0);
  ptw_free(nullptr);
}

TEST_CASE("corners") {
  ptw_corners* c = nullptr;
  REQUIRE(ptw_corners_solve(1, "1", 128, &c) == PTW_OK);
  double u = 0, ld = 0;
  CHECK(ptw_corners_u(c, &u) == PTW_OK);
  CHECK(ptw_corners_log_det(c, &ld) == PTW_OK);
  // I_1(2) / I_0(2)
  CHECK(u == doctest::Approx(1.590636854637329 / 2.279585302336067).epsilon(1e-14));
  CHECK(ld == doctest::Approx(std::log(2.279585302336067)).epsilon(1e-14));
  char* text = nullptr;
  CHECK(ptw_corners_format(c, PTW_FORMAT_JSON, 20, &text) == PTW_OK);
  CHECK(take(text).find("\"U_n\"") != std::string::npos);
  ptw_corners_destroy(c);
  ptw_corners_destroy(nullptr);
}

TEST_CASE("errors set the last error message") {
  ptw_corners* c = nullptr;
  CHECK(ptw_corners_solve(0, "1", 128, &c) == PTW_INVALID_ARGUMENT);
  CHECK(c == nullptr);
  CHECK(std::strlen(ptw_last_error()) > 0);
  CHECK(ptw_corners_solve(2, "abc", 128, &c) == PTW_INVALID_ARGUMENT);
  CHECK(ptw_corners_solve(2, "1", 32, &c) == PTW_INVALID_ARGUMENT);
  CHECK(ptw_corners_solve(2, "1", 128, nullptr) == PTW_INVALID_ARGUMENT);
  double u = 0;
  CHECK(ptw_corners_u(nullptr, &u) == PTW_INVALID_ARGUMENT);
}

TEST_CASE("three U sequences agree") {
  ptw_useq *a = nullptr, *b = nullptr, *d = nullptr;
  REQUIRE(ptw_useq_compute(20, "1", 128, PTW_USEQ_DIRECT, &a) == PTW_OK);
  REQUIRE(ptw_useq_compute(20, "1", 128, PTW_USEQ_LEVINSON, &b) == PTW_OK);
  REQUIRE(ptw_useq_compute(20, "1", 128, PTW_USEQ_DPII, &d) == PTW_OK);
  CHECK(ptw_useq_size(a) == 20);
  double x = 1;
  CHECK(ptw_useq_max_relative_difference(a, b, &x) == PTW_OK);
  CHECK(x < 1e-20);
  CHECK(ptw_useq_max_relative_difference(a, d, &x) == PTW_OK);
  CHECK(x < 1e-20);
  CHECK(ptw_useq_max_recurrence_residual(b, &x) == PTW_OK);
  CHECK(x < 1e-25);
  CHECK(ptw_useq_first_unstable(d) == 0);
  char* csv = nullptr;
  CHECK(ptw_useq_format(b, PTW_FORMAT_CSV, 20, &csv) == PTW_OK);
  CHECK(take(csv).rfind("k,U_k,log_D_k\n", 0) == 0);
  ptw_useq_destroy(a);
  ptw_useq_destroy(b);
  ptw_useq_destroy(d);
}

TEST_CASE("trajectories and residuals") {
  ptw_trajectory* tr = nullptr;
  REQUIRE(ptw_pv_integrate(2, 0.2, 3.0, 1e-12, 11, &tr) == PTW_OK);
  double dev = 1, res = 1;
  CHECK(ptw_trajectory_max_deviation(tr, &dev) == PTW_OK);
  CHECK(ptw_trajectory_max_residual(tr, &res) == PTW_OK);
  CHECK(dev < 1e-8);
  CHECK(res < 1e-8);
  ptw_trajectory_destroy(tr);

  tr = nullptr;
  REQUIRE(ptw_piii_integrate(3, 0.2, 3.0, 1e-12, 11, PTW_PIII_TOEPLITZ, &tr) == PTW_OK);
  CHECK(ptw_trajectory_max_deviation(tr, &dev) == PTW_OK);
  CHECK(dev < 1e-8);
  ptw_trajectory_destroy(tr);

  tr = nullptr;
  CHECK(ptw_piii_integrate(2, 0.01, 3.0, 1e-12, 11, PTW_PIII_SERIES, &tr) == PTW_INTEGRATION_FAILURE);
  CHECK(tr == nullptr);

  double r3[3] = {1, 1, 1};
  CHECK(ptw_derivative_residuals(3, 1.0, r3) == PTW_OK);
  for (double r : r3) CHECK(r < 1e-8);
  CHECK(ptw_pv_residual(3, 1.0, &res) == PTW_OK);
  CHECK(res < 1e-8);
  CHECK(ptw_piii_residual(1, 1.0, &res) == PTW_INVALID_ARGUMENT);
}

TEST_CASE("Painleve II and distributions") {
  double ai = 0, dai = 0;
  CHECK(ptw_airy(8, &ai, &dai) == PTW_OK);
  CHECK(ai == doctest::Approx(4.692207616099e-8).epsilon(1e-10));
  CHECK(ptw_airy(1, &ai, &dai) == PTW_INVALID_ARGUMENT);

  ptw_pii* p = nullptr;
  REQUIRE(ptw_pii_integrate(8, -10, 1e-12, 0.005, &p) == PTW_OK);
  double F = 0;
  CHECK(ptw_pii_F(p, -1, &F) == PTW_OK);
  CHECK(F == doctest::Approx(0.807214242).epsilon(1e-8));
  CHECK(ptw_pii_F(p, 20, &F) == PTW_OUT_OF_RANGE);

  ptw_dist* d = nullptr;
  REQUIRE(ptw_dist_build(p, -10, 6, &d) == PTW_OK);
  ptw_stats st{};
  CHECK(ptw_dist_stats(d, 0, &st) == PTW_OK);
  CHECK(st.mean == doctest::Approx(-1.77109).epsilon(1e-5));
  CHECK(ptw_dist_stats(d, 1, &st) == PTW_OK);
  CHECK(st.mean == doctest::Approx(-1.26332).epsilon(1e-5));
  double q = 0, c = 0;
  CHECK(ptw_dist_quantile(d, 0, 0.5, &q) == PTW_OK);
  CHECK(ptw_dist_cdf(d, 0, q, &c) == PTW_OK);
  CHECK(c == doctest::Approx(0.5).epsilon(1e-10));
  char* text = nullptr;
  CHECK(ptw_dist_format(d, PTW_FORMAT_TEXT, &text) == PTW_OK);
  CHECK(take(text).find("F_O") != std::string::npos);
  ptw_dist_destroy(d);
  ptw_pii_destroy(p);
}

TEST_CASE("censuses and reports") {
  ptw_census* c = nullptr;
  REQUIRE(ptw_census_compute(PTW_GROUP_SYMMETRIC, 1, 4, &c) == PTW_OK);
  unsigned long long k = 0;
  CHECK(ptw_census_count(c, 4, 2, &k) == PTW_OK);
  CHECK(k == 14);
  CHECK(ptw_census_count(c, 5, 2, &k) == PTW_OUT_OF_RANGE);
  ptw_census_destroy(c);
  CHECK(ptw_census_compute(PTW_GROUP_ODD, 0, 14, &c) == PTW_INVALID_ARGUMENT);

  ptw_report* r = nullptr;
  REQUIRE(ptw_verify_generating(3, 6, &r) == PTW_OK);
  CHECK(ptw_report_checks(r) > 10);
  CHECK(ptw_report_failures(r) == 0);
  char* text = nullptr;
  CHECK(ptw_report_format(r, PTW_FORMAT_CSV, &text) == PTW_OK);
  CHECK(take(text).rfind("identity,n,N,passed,detail\n", 0) == 0);
  ptw_report_destroy(r);

  REQUIRE(ptw_depoisson(2, 3, &r) == PTW_OK);
  CHECK(ptw_report_failures(r) == 0);
  ptw_report_destroy(r);
}

TEST_CASE("experiment tables") {
  ptw_pii* p = nullptr;
  REQUIRE(ptw_pii_integrate(8, -10, 1e-12, 0.005, &p) == PTW_OK);
  const double s[] = {-1, 0}, t[] = {10};
  ptw_table* tb = nullptr;
  REQUIRE(ptw_experiment_run(PTW_EXPERIMENT_BDJ, s, 2, t, 1, 128, p, &tb) == PTW_OK);
  CHECK(ptw_table_rows(tb) == 2);
  double e = 1;
  CHECK(ptw_table_value(tb, 1, &e) == PTW_OK);
  CHECK(e < 0.1);
  CHECK(ptw_table_value(tb, 2, &e) == PTW_OUT_OF_RANGE);
  ptw_table_destroy(tb);
  CHECK(ptw_experiment_run(PTW_EXPERIMENT_USCALE, s, 0, t, 1, 128, p, &tb) == PTW_INVALID_ARGUMENT);
  CHECK(ptw_experiment_run(static_cast<ptw_experiment>(42), s, 2, t, 1, 128, p, &tb) ==
        PTW_INVALID_ARGUMENT);
  ptw_pii_destroy(p);
}
