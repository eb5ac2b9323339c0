// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

// CSV and JSON renderings. CSV output has a single header row and prints
// floats with 17 significant digits.

#pragma once

#include <string>
#include <vector>

#include "ptw/experiments.hpp"
#include "ptw/painleve.hpp"
#include "ptw/perm.hpp"
#include "ptw/toeplitz.hpp"
#include "ptw/tracy_widom.hpp"

namespace ptw::io {

std::string format_double(double x);

/// Columns s, F, f, F_O, f_O. Both grids must share their abscissae.
std::string dist_csv(const DistGrid& F, const DistGrid& FO);
std::string dist_json(const DistGrid& F, const DistGrid& FO);

std::string stats_json(const DistStats& F, const DistStats& FO);

/// Columns N, n, count, probability_numerator, probability_denominator.
std::string census_csv(const std::vector<PermutationCensus>& censuses);
std::string census_json(const std::vector<PermutationCensus>& censuses);

/// Columns s, t, n, finite_value, limit_value, abs_error.
std::string limit_csv(const std::vector<LimitRecord>& records);
std::string limit_json(const std::vector<LimitRecord>& records);

/// Columns s, t, n, U_n, U_n1, q, ratio, alternating.
std::string uscale_csv(const std::vector<UScalingRecord>& records);
std::string uscale_json(const std::vector<UScalingRecord>& records);

/// Columns identity, n, N, passed, detail.
std::string report_csv(const VerifyReport& report);
std::string report_json(const VerifyReport& report);

/// D_n, log D_n and the corner quantities, `digits` significant digits.
std::string corners_text(const CornerData& c, int digits);
std::string corners_json(const CornerData& c, int digits);

/// Columns k, U_k, log_D_k.
std::string useq_csv(const USequence& seq, int digits);
std::string useq_json(const USequence& seq, int digits);
/// Columns k, U_k; `first_unstable` noted in JSON only.
std::string dpii_csv(const DpiiResult& r, int digits);
std::string dpii_json(const DpiiResult& r, int digits);

/// Columns t, value, derivative, toeplitz_value, deviation.
std::string trajectory_csv(const PainleveTrajectory& tr, const std::vector<double>& reference);
std::string trajectory_json(const PainleveTrajectory& tr, const std::vector<double>& reference);

/// Columns s, q, dq, R, E, F.
std::string pii_csv(const PainleveIISolution& sol);
std::string pii_json(const PainleveIISolution& sol);

/// Two-row table of mean, stddev, skewness, excess kurtosis.
std::string stats_text(const DistStats& F, const DistStats& FO);

std::string depoisson_text(const DepoissonReport& r);
std::string depoisson_json(const DepoissonReport& r);

}  // namespace ptw::io
