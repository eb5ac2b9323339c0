// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

// The discrete Painleve II recurrence for U_n, the Painleve V / III equations
// satisfied by phi = 1 - U_n^2 and W_n = U_n / U_{n-1}, and the Painleve II
// solution q(s) with Airy decay that defines the Tracy-Widom distribution.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ptw/real.hpp"

namespace ptw {

// ---------------------------------------------------------------------------
// Discrete Painleve II

struct DpiiResult {
  std::vector<Real> U;  ///< U[k-1] = U_k, possibly shorter than requested
  /// First n with |U_n| >= 1 (lost precision); extension stops there.
  std::optional<int> first_unstable;
};

/// Extends (U_1, U_2) with U_{n+1} = -(n/t) U_n / (1 - U_n^2) - U_{n-1}.
/// Works in the larger of the seeds' precisions. Throws PrecisionExhausted
/// naming n when 1 - U_n^2 vanishes.
DpiiResult dpii_extend(const Real& U1, const Real& U2, const Real& t, int n_max);

/// (n/t) U_n + (1 - U_n^2)(U_{n-1} + U_{n+1}).
Real dpii_residual(int n, const Real& t, const Real& U_prev, const Real& U, const Real& U_next);

/// Forward extension amplifies seed errors by roughly prod_k (k/t)^2 once
/// k > t. Returns the working precision that leaves `target` bits intact.
Bits dpii_working_bits(int n_max, double t, Bits target);

/// Seeds U_1, U_2 from direct solves at dpii_working_bits and extends to
/// n_max; results are rounded to `bits`.
DpiiResult dpii_sequence(int n_max, const Real& t, Bits bits);

/// The value taken for U_0 when the recurrence or (d/dt) U_n is used at n = 1.
inline constexpr long kUZero = -1;

// ---------------------------------------------------------------------------
// Residuals of the continuous equations

/// phi'' minus the right side of the Painleve V variant for phi = 1 - U_n^2.
template <class T>
T pv_residual(int n, const T& t, const T& phi, const T& dphi, const T& d2phi) {
  const long nn = static_cast<long>(n) * n;
  T pm1 = phi - 1L;
  T rhs = (1L / pm1 + 1L / phi) * dphi * dphi / 2L - dphi / t - phi * pm1 * 8L +
          pm1 * (2L * nn) / (t * t * phi);
  return d2phi - rhs;
}

/// W'' minus the right side of the Painleve III case for W_n = U_n / U_{n-1}.
template <class T>
T piii_residual(int n, const T& t, const T& W, const T& dW, const T& d2W) {
  T rhs = dW * dW / W - dW / t + W * W * (4L * (n - 1)) / t - (4L * n) / t + W * W * W * 4L -
          4L / W;
  return d2W - rhs;
}

// ---------------------------------------------------------------------------
// Toeplitz-derived checks. Derivatives come from central differences at step
// 2^(-bits/4) in `bits`-bit arithmetic, so their error is near 2^(-bits/2).

/// phi = 1 - U_n^2 and W_n = U_n / U_{n-1} (n >= 2) from the corners.
Real toeplitz_phi(int n, const Real& t, Bits bits);
Real toeplitz_w(int n, const Real& t, Bits bits);

/// Residuals of the P_V equation for phi and of the P_III equation for W_n.
double toeplitz_pv_residual(int n, double t, Bits bits = 256);
double toeplitz_piii_residual(int n, double t, Bits bits = 256);

/// dU_n/dt by central differences minus each of
///   -(1 - U_n^2)(U_{n-1} - U_{n+1}),
///   (n/t) U_n + 2 U_{n+1} (1 - U_n^2),
///   -(n/t) U_n - 2 U_{n-1} (1 - U_n^2),
/// with U_0 = kUZero.
std::array<double, 3> derivative_identity_residuals(int n, double t, Bits bits = 256);

// ---------------------------------------------------------------------------
// Integration of the Painleve V / III equations

struct PainleveTrajectory {
  enum class Kind { PhiV, WIII };
  Kind kind = Kind::PhiV;
  int n = 0;
  std::vector<double> t;
  std::vector<double> value;       ///< phi or W
  std::vector<double> derivative;  ///< phi' or W'
  /// 1 - phi = U_n^2 carried without cancellation (empty for W trajectories).
  std::vector<double> one_minus_phi;
};

/// Integrates the equation for phi = 1 - U_n^2 from t0 to t1. Initial values
/// come from the Toeplitz corners at t0 (phi' via the derivative formula for
/// U_n), never from t = 0. `samples` >= 2 output points, uniform in t.
PainleveTrajectory integrate_pv(int n, double t0, double t1, double tol = 1e-12,
                                std::size_t samples = 101);

/// Small-t series of W_n through t^7.
double piii_series(int n, double t);
double piii_series_derivative(int n, double t);

/// Where integrate_piii takes its initial data.
enum class PiiiStart {
  /// The printed small-t series. Its t^5 term is wrong for n = 2 and its t^7
  /// term for n = 3, where the coefficient of t^(2n+1) is a free parameter.
  Series,
  /// U_n / U_{n-1} from the Toeplitz corners, W' from the first-order relation.
  Toeplitz,
};

/// Integrates the equation for W_n (n >= 2) from t0 to t1 in quad precision
/// with the tolerance tightened to at most 1e-20.
/// Perturbations of the initial data grow like (t / t0)^(2n+1), so a series
/// start at small t0 tracks U_n / U_{n-1} only near t0.
PainleveTrajectory integrate_piii(int n, double t0, double t1, double tol = 1e-12,
                                  std::size_t samples = 101,
                                  PiiiStart start = PiiiStart::Series);

/// phi or W at each trajectory time from the Toeplitz corners (128 bits).
std::vector<double> toeplitz_reference(const PainleveTrajectory& tr);

// ---------------------------------------------------------------------------
// Painleve II with Airy boundary data

struct AiryValue {
  double ai;
  double dai;
};

/// Ai(s), Ai'(s) from the large-s asymptotic expansion truncated at its
/// smallest term. Requires s >= 4; relative error below 1e-12 from s = 8,
/// about 1.4e-10 at s = 6.
AiryValue airy_ai(double s);

/// Grid solution of q'' = s q + 2 q^3, q ~ Ai at +infinity, together with
/// R(s) = int_s^inf q^2 and E(s) = int_s^inf (x - s) q^2. The grid descends
/// uniformly from s0 to s_min.
struct PainleveIISolution {
  double s0 = 0;
  std::vector<double> s, q, dq, R, E;

  std::size_t size() const { return s.size(); }
  double s_min() const { return s.back(); }
  /// Cubic Hermite interpolants; throw OutOfRange outside [s_min, s0].
  double q_at(double x) const;
  double E_at(double x) const;
  /// F(x) = exp(-E(x)).
  double F_at(double x) const;
};

/// Requires s0 in [6, 10], s_min >= -12 and s_min < s0. When s_min < -10 the
/// integration runs in quad precision with a tightened tolerance.
PainleveIISolution integrate_pii(double s0, double s_min, double tol = 1e-12, double step = 0.005);

}  // namespace ptw
