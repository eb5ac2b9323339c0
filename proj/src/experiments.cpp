// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptw/experiments.hpp"

#include <cmath>

#include "ptw/error.hpp"
#include "ptw/toeplitz.hpp"

namespace ptw {

long round_half_even(double x) { return std::lrint(std::nearbyint(x)); }

Bits required_bits(double t, Bits bits) {
  return std::max<Bits>(bits, static_cast<Bits>(std::ceil(6 * std::fabs(t) + 64)));
}

namespace {

void check_grid(const std::vector<double>& s_list, const std::vector<double>& t_list) {
  if (s_list.empty() || t_list.empty()) throw InvalidArgument("empty s or t list");
  for (double t : t_list)
    if (!(t > 0)) throw InvalidArgument("t values must be positive");
}

long checked_n(double x, double s, double t) {
  const long n = round_half_even(x);
  if (n <= 0)
    throw InvalidArgument("s = " + std::to_string(s) + ", t = " + std::to_string(t) +
                          " gives n = " + std::to_string(n) + " <= 0");
  return n;
}

}  // namespace

std::vector<LimitRecord> bdj_table(const std::vector<double>& s_list,
                                   const std::vector<double>& t_list, Bits bits,
                                   const PainleveIISolution& pii) {
  check_grid(s_list, t_list);
  std::vector<LimitRecord> out;
  for (double s : s_list) {
    const double limit = pii.F_at(s);
    for (double t : t_list) {
      const long n = checked_n(2 * t + s * std::cbrt(t), s, t);
      const Bits b = required_bits(t, bits);
      const Real tr(t, b);
      const USequence seq = d_sequence(static_cast<int>(n), tr, b);
      const double value = exp(seq.log_d(static_cast<int>(n)) - tr * tr).to_double();
      out.push_back({s, t, n, value, limit, std::fabs(value - limit), "D", std::nullopt});
    }
  }
  return out;
}

std::string to_string(OddRoute r) {
  switch (r) {
    case OddRoute::G: return "G";
    case OddRoute::GEven: return "G_even";
    case OddRoute::GOdd: return "G_odd";
    case OddRoute::HEven: return "H_even";
  }
  return "?";
}

std::vector<LimitRecord> odd_limit_table(const std::vector<double>& s_list,
                                         const std::vector<double>& t_list, Bits bits,
                                         const PainleveIISolution& pii, OddRoute route) {
  check_grid(s_list, t_list);
  std::vector<LimitRecord> out;
  for (double s : s_list) {
    const double F = pii.F_at(s);
    const double limit = F * F;
    for (double t : t_list) {
      const double x = 4 * t + 2 * s * std::cbrt(t);
      long n = 0;
      switch (route) {
        case OddRoute::G: n = checked_n(x, s, t); break;
        case OddRoute::GEven:
        case OddRoute::HEven: n = 2 * checked_n(x / 2, s, t); break;
        case OddRoute::GOdd: n = 2 * static_cast<long>(std::floor(x / 2)) + 1; break;
      }
      if (route == OddRoute::HEven && n < 2) throw InvalidArgument("H route needs n >= 2");
      if (n < 1) throw InvalidArgument("odd limit gives n < 1");
      const int m = static_cast<int>(n / 2);
      const Bits b = required_bits(t, bits);
      const Real tr(t, b);
      const USequence seq = d_sequence(m + 1, tr, b);
      Real log_product;
      std::optional<double> u_half;
      if (route == OddRoute::HEven) {
        log_product = seq.log_d(m - 1) + seq.log_d(m + 1);
        u_half = std::fabs(seq.u(m).to_double());
      } else if (n % 2 == 0) {
        log_product = seq.log_d(m) * 2L;
      } else {
        log_product = seq.log_d(m) + seq.log_d(m + 1);
      }
      const double value = exp(log_product - tr * tr * 2L).to_double();
      out.push_back({s, t, n, value, limit, std::fabs(value - limit), to_string(route), u_half});
    }
  }
  return out;
}

std::vector<UScalingRecord> u_scaling_table(const std::vector<double>& s_list,
                                            const std::vector<double>& t_list, Bits bits,
                                            const PainleveIISolution& pii) {
  check_grid(s_list, t_list);
  std::vector<UScalingRecord> out;
  for (double s : s_list) {
    const double q = pii.q_at(s);
    for (double t : t_list) {
      const long n = checked_n(2 * t + s * std::cbrt(t), s, t);
      const Bits b = required_bits(t, bits);
      const USequence seq = d_sequence(static_cast<int>(n) + 1, Real(t, b), b);
      UScalingRecord r;
      r.s = s;
      r.t = t;
      r.n = n;
      r.U_n = seq.u(static_cast<int>(n)).to_double();
      r.U_next = seq.u(static_cast<int>(n) + 1).to_double();
      r.q = q;
      r.ratio = std::fabs(r.U_n) * std::cbrt(t) / q;
      r.alternating = r.U_n * r.U_next < 0;
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace ptw
