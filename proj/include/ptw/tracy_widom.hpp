// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

// Distribution-level views of the Painleve II solution: F, F_O = F^2, their
// densities, moments and quantiles.

#pragma once

#include <optional>
#include <vector>

#include "ptw/painleve.hpp"

namespace ptw {

enum class Distribution { F, FO };

/// Values on an ascending grid.
struct DistGrid {
  Distribution which = Distribution::F;
  std::vector<double> s, F, density;

  std::size_t size() const { return s.size(); }
  /// Cubic Hermite interpolant of F using the exact density.
  double cdf(double x) const;
};

/// Builds F = exp(-E) with density F * R, or F^2 with density 2 F f. The
/// solution must reach s_min <= -9. `clip` optionally restricts the grid to
/// [lo, hi].
DistGrid build_dist(const PainleveIISolution& sol, Distribution which,
                    std::optional<std::pair<double, double>> clip = std::nullopt);

struct DistStats {
  double mean = 0;
  double stddev = 0;
  double skewness = 0;
  double excess_kurtosis = 0;
  double mass = 0;  ///< integral of the density over the grid
};

/// Moments by composite Simpson quadrature (3/8 rule on the last panel when
/// the interval count is odd). Throws when the density at either end of the
/// grid exceeds 1e-8 or the grid is not uniform.
DistStats moments(const DistGrid& d);

/// s with cdf(s) = p, for p strictly between the end values of F.
double quantile(const DistGrid& d, double p);

/// Default Tracy-Widom setup: s0 = 8, integrated to -10, clipped to [-10, 6].
inline constexpr double kDefaultS0 = 8;
inline constexpr double kDefaultSMin = -10;
inline constexpr double kDefaultSMax = 6;
inline constexpr double kDefaultStep = 0.005;

}  // namespace ptw
