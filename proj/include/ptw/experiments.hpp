// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

// Finite-t comparisons with the Tracy-Widom limit laws.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptw/painleve.hpp"
#include "ptw/real.hpp"

namespace ptw {

/// Nearest integer, ties to even.
long round_half_even(double x);

/// max(bits, ceil(6 t + 64)): enough for e^(-t^2) D_n(t) near n = 2t.
Bits required_bits(double t, Bits bits);

struct LimitRecord {
  double s = 0;
  double t = 0;
  long n = 0;
  double finite_value = 0;
  double limit_value = 0;
  double abs_error = 0;  ///< |finite_value - limit_value|
  std::string route;
  std::optional<double> u_half;  ///< |U_{n/2}(t)| for the H route
};

inline const std::vector<double> kDefaultLimitS{-2, -1, 0, 1};
inline const std::vector<double> kDefaultLimitT{20, 40, 60};

/// e^(-t^2) D_n(t) with n = round(2t + s t^(1/3)) against F(s).
std::vector<LimitRecord> bdj_table(const std::vector<double>& s_list,
                                   const std::vector<double>& t_list, Bits bits,
                                   const PainleveIISolution& pii);

/// How n and the Toeplitz product are chosen for the odd-permutation limit,
/// with x = 4t + 2 s t^(1/3).
enum class OddRoute {
  G,      ///< n = round(x); G_n by the parity of n
  GEven,  ///< n = 2 round(x / 2); G_n = D_{n/2}^2
  GOdd,   ///< n the odd integer nearest x; G_n = D_{(n-1)/2} D_{(n+1)/2}
  HEven,  ///< n = 2 round(x / 2); H_n = D_{n/2-1} D_{n/2+1}
};

std::string to_string(OddRoute r);

/// e^(-2t^2) times the chosen product against F(s)^2.
std::vector<LimitRecord> odd_limit_table(const std::vector<double>& s_list,
                                         const std::vector<double>& t_list, Bits bits,
                                         const PainleveIISolution& pii,
                                         OddRoute route = OddRoute::G);

struct UScalingRecord {
  double s = 0;
  double t = 0;
  long n = 0;
  double U_n = 0;
  double U_next = 0;  ///< U_{n+1}
  double q = 0;       ///< q(s)
  double ratio = 0;   ///< |U_n| t^(1/3) / q(s)
  bool alternating = false;  ///< U_n U_{n+1} < 0
};

std::vector<UScalingRecord> u_scaling_table(const std::vector<double>& s_list,
                                            const std::vector<double>& t_list, Bits bits,
                                            const PainleveIISolution& pii);

}  // namespace ptw
