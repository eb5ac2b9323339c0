// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptw/tracy_widom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hermite.hpp"
#include "ptw/error.hpp"

namespace ptw {

double DistGrid::cdf(double x) const { return detail::hermite(s, F, density, x); }

DistGrid build_dist(const PainleveIISolution& sol, Distribution which,
                    std::optional<std::pair<double, double>> clip) {
  if (sol.size() < 2) throw InvalidArgument("Painleve II solution has no grid");
  if (!(sol.s_min() <= -9))
    throw InvalidArgument("Painleve II grid ends at s = " + std::to_string(sol.s_min()) +
                          "; the lower tail needs s_min <= -9");
  DistGrid d;
  d.which = which;
  for (std::size_t i = sol.size(); i-- > 0;) {
    const double x = sol.s[i];
    if (clip && (x < clip->first || x > clip->second)) continue;
    const double F = std::exp(-sol.E[i]);
    const double f = F * sol.R[i];
    d.s.push_back(x);
    if (which == Distribution::F) {
      d.F.push_back(F);
      d.density.push_back(f);
    } else {
      d.F.push_back(F * F);
      d.density.push_back(2 * F * f);
    }
  }
  if (d.size() < 2) throw InvalidArgument("clip window leaves fewer than two grid points");
  return d;
}

namespace {

// Composite Simpson weights on a uniform grid, 3/8 rule on the final three
// intervals when the interval count is odd.
std::vector<double> quadrature_weights(std::size_t points, double h) {
  if (points < 3) throw InvalidArgument("quadrature needs at least three points");
  std::vector<double> w(points, 0.0);
  const std::size_t intervals = points - 1;
  std::size_t simpson_end = intervals;
  if (intervals % 2 == 1) {
    if (intervals < 3) throw InvalidArgument("quadrature needs an even interval count or >= 3");
    simpson_end = intervals - 3;
  }
  for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) {
    w[i] += h / 3;
    w[i + 1] += 4 * h / 3;
    w[i + 2] += h / 3;
  }
  if (simpson_end != intervals) {
    const std::size_t i = simpson_end;
    w[i] += 3 * h / 8;
    w[i + 1] += 9 * h / 8;
    w[i + 2] += 9 * h / 8;
    w[i + 3] += 3 * h / 8;
  }
  return w;
}

}  // namespace

DistStats moments(const DistGrid& d) {
  const std::size_t n = d.size();
  if (n < 4) throw InvalidArgument("grid too short for moments");
  if (!(d.density.front() < 1e-8) || !(d.density.back() < 1e-8))
    throw InvalidArgument("density tails unresolved: f(" + std::to_string(d.s.front()) +
                          ") = " + std::to_string(d.density.front()) + ", f(" +
                          std::to_string(d.s.back()) + ") = " + std::to_string(d.density.back()));
  const double h = (d.s.back() - d.s.front()) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    if (std::fabs(d.s[i] - d.s[i - 1] - h) > 1e-9 * std::fabs(h))
      throw InvalidArgument("moments need a uniform grid");
  const auto w = quadrature_weights(n, h);

  auto integrate = [&](auto&& g) {
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * g(d.s[i]) * d.density[i];
    return acc;
  };
  DistStats st;
  st.mass = integrate([](double) { return 1.0; });
  st.mean = integrate([](double x) { return x; }) / st.mass;
  const double mu = st.mean;
  const double m2 = integrate([mu](double x) { return (x - mu) * (x - mu); }) / st.mass;
  const double m3 = integrate([mu](double x) { return std::pow(x - mu, 3); }) / st.mass;
  const double m4 = integrate([mu](double x) { return std::pow(x - mu, 4); }) / st.mass;
  st.stddev = std::sqrt(m2);
  st.skewness = m3 / std::pow(m2, 1.5);
  st.excess_kurtosis = m4 / (m2 * m2) - 3;
  return st;
}

double quantile(const DistGrid& d, double p) {
  if (!(p > d.F.front() && p < d.F.back()))
    throw OutOfRange("probability " + std::to_string(p) + " outside the resolved range (" +
                     std::to_string(d.F.front()) + ", " + std::to_string(d.F.back()) + ")");
  const auto it = std::lower_bound(d.F.begin(), d.F.end(), p);
  const std::size_t hi = static_cast<std::size_t>(it - d.F.begin());
  double a = d.s[hi - 1], b = d.s[hi];
  for (int iter = 0; iter < 200 && b - a > 1e-15 * std::max(1.0, std::fabs(a)); ++iter) {
    const double m = 0.5 * (a + b);
    (d.cdf(m) < p ? a : b) = m;
  }
  return 0.5 * (a + b);
}

}  // namespace ptw
