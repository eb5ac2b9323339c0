// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <span>
#include <string>

#include "ptw/error.hpp"

namespace ptw::detail {

/// Index i with x in [xs[i], xs[i+1]] (or reversed for descending grids).
inline std::size_t bracket(std::span<const double> xs, double x) {
  const bool ascending = xs.front() < xs.back();
  const double lo = ascending ? xs.front() : xs.back();
  const double hi = ascending ? xs.back() : xs.front();
  if (!(x >= lo && x <= hi))
    throw OutOfRange("abscissa " + std::to_string(x) + " outside grid [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "]");
  std::size_t i;
  if (ascending) {
    i = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
  } else {
    i = static_cast<std::size_t>(
        std::upper_bound(xs.begin(), xs.end(), x, [](double a, double b) { return a > b; }) -
        xs.begin());
  }
  if (i == 0) i = 1;
  if (i >= xs.size()) i = xs.size() - 1;
  return i - 1;
}

/// Cubic Hermite interpolation from values and exact derivatives.
inline double hermite(std::span<const double> xs, std::span<const double> ys,
                      std::span<const double> dys, double x) {
  const std::size_t i = bracket(xs, x);
  const double h = xs[i + 1] - xs[i];
  const double u = (x - xs[i]) / h;
  const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
  const double h10 = u * (1 - u) * (1 - u);
  const double h01 = u * u * (3 - 2 * u);
  const double h11 = u * u * (u - 1);
  return h00 * ys[i] + h10 * h * dys[i] + h01 * ys[i + 1] + h11 * h * dys[i + 1];
}

}  // namespace ptw::detail
