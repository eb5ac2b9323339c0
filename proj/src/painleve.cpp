// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptw/painleve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hermite.hpp"
#include "ode.hpp"
#include "ptw/error.hpp"
#include "ptw/toeplitz.hpp"

namespace ptw {

DpiiResult dpii_extend(const Real& U1, const Real& U2, const Real& t, int n_max) {
  if (n_max < 1) throw InvalidArgument("dpii_extend needs n_max >= 1");
  if (!(t > 0.0)) throw InvalidArgument("dpii_extend needs t > 0");
  const Bits bits = std::max(U1.bits(), U2.bits());
  const Real tw = t.with_bits(bits);
  DpiiResult out;
  out.U.push_back(U1.with_bits(bits));
  if (n_max >= 2) out.U.push_back(U2.with_bits(bits));
  for (const Real& u : out.U) {
    if (!(abs(u) < 1.0)) {
      out.first_unstable = static_cast<int>(&u - out.U.data()) + 1;
      out.U.resize(static_cast<std::size_t>(*out.first_unstable));
      return out;
    }
  }
  for (int n = 2; n < n_max; ++n) {
    const Real& un = out.U[static_cast<std::size_t>(n - 1)];
    const Real& uprev = out.U[static_cast<std::size_t>(n - 2)];
    Real gap = 1L - un * un;
    if (gap.is_zero())
      throw PrecisionExhausted("1 - U_" + std::to_string(n) + "^2 underflowed in the recurrence",
                               n);
    Real next = -(un * static_cast<long>(n)) / (tw * gap) - uprev;
    const bool unstable = !(abs(next) < 1.0);
    out.U.push_back(std::move(next));
    if (unstable) {
      out.first_unstable = n + 1;
      break;
    }
  }
  return out;
}

Real dpii_residual(int n, const Real& t, const Real& U_prev, const Real& U, const Real& U_next) {
  return U * static_cast<long>(n) / t + (1L - U * U) * (U_prev + U_next);
}

Bits dpii_working_bits(int n_max, double t, Bits target) {
  const double a = std::fabs(t);
  double loss = 0;
  for (int k = 1; k <= n_max; ++k)
    if (k > a) loss += 2.0 * std::log2(k / a);
  return target + 16 + static_cast<Bits>(std::ceil(loss));
}

DpiiResult dpii_sequence(int n_max, const Real& t, Bits bits) {
  const Bits wb = dpii_working_bits(n_max, t.to_double(), bits);
  const Real tw = t.with_bits(wb);
  Real u1 = solve_corners(1, tw, wb).U_minus;
  Real u2 = n_max >= 2 ? solve_corners(2, tw, wb).U_minus : u1;
  DpiiResult r = dpii_extend(u1, u2, tw, n_max);
  for (Real& u : r.U) u.set_bits(bits);
  return r;
}

Real toeplitz_phi(int n, const Real& t, Bits bits) {
  const Real u = solve_corners(n, t, bits).U_minus;
  return 1L - u * u;
}

Real toeplitz_w(int n, const Real& t, Bits bits) {
  if (n < 2) throw InvalidArgument("W_n needs n >= 2");
  return solve_corners(n, t, bits).U_minus / solve_corners(n - 1, t, bits).U_minus;
}

namespace {

struct Stencil {
  Real h, f_minus, f0, f_plus;
  Real d1() const { return (f_plus - f_minus) / (h * 2L); }
  Real d2() const { return (f_plus - f0 * 2L + f_minus) / (h * h); }
};

template <class Fn>
Stencil stencil(Fn&& f, double t, Bits bits) {
  if (!(t > 0)) throw InvalidArgument("residual checks need t > 0");
  Real h(1L, bits);
  mpfr_mul_2si(h.raw(), h.raw(), -static_cast<long>(bits / 4), MPFR_RNDN);
  const Real tr(t, bits);
  return {h, f(tr - h), f(tr), f(tr + h)};
}

Real u_at(int k, const Real& t, Bits bits) {
  return k == 0 ? Real(kUZero, bits) : solve_corners(k, t, bits).U_minus;
}

}  // namespace

double toeplitz_pv_residual(int n, double t, Bits bits) {
  const Stencil st = stencil([&](const Real& x) { return toeplitz_phi(n, x, bits); }, t, bits);
  return abs(pv_residual(n, Real(t, bits), st.f0, st.d1(), st.d2())).to_double();
}

double toeplitz_piii_residual(int n, double t, Bits bits) {
  const Stencil st = stencil([&](const Real& x) { return toeplitz_w(n, x, bits); }, t, bits);
  return abs(piii_residual(n, Real(t, bits), st.f0, st.d1(), st.d2())).to_double();
}

std::array<double, 3> derivative_identity_residuals(int n, double t, Bits bits) {
  if (n < 1) throw InvalidArgument("derivative identities need n >= 1");
  const Stencil st = stencil([&](const Real& x) { return u_at(n, x, bits); }, t, bits);
  const Real tr(t, bits);
  const Real& u = st.f0;
  const Real prev = u_at(n - 1, tr, bits);
  const Real next = u_at(n + 1, tr, bits);
  const Real gap = 1L - u * u;
  const Real du = st.d1();
  const Real a = -gap * (prev - next);
  const Real b = u * static_cast<long>(n) / tr + next * gap * 2L;
  const Real c = -(u * static_cast<long>(n)) / tr - prev * gap * 2L;
  return {abs(du - a).to_double(), abs(du - b).to_double(), abs(du - c).to_double()};
}

namespace {

std::vector<double> uniform_grid(double a, double b, std::size_t samples) {
  if (samples < 2) throw InvalidArgument("need at least two output samples");
  std::vector<double> g(samples);
  for (std::size_t i = 0; i < samples; ++i)
    g[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(samples - 1);
  g.back() = b;
  return g;
}

}  // namespace

PainleveTrajectory integrate_pv(int n, double t0, double t1, double tol, std::size_t samples) {
  if (n < 1) throw InvalidArgument("integrate_pv needs n >= 1");
  if (!(t0 > 0 && t1 > t0)) throw InvalidArgument("integrate_pv needs 0 < t0 < t1");
  constexpr Bits bits = 192;
  const USequence seq = d_sequence(n + 1, Real(t0, bits), bits);
  const Real U = seq.u(n);
  const Real U_prev = n == 1 ? Real(kUZero, bits) : seq.u(n - 1);
  const Real dU = -(1L - U * U) * (U_prev - seq.u(n + 1));

  // Integrate psi = 1 - phi = U_n^2 so that phi close to 1 keeps its digits.
  const double nn = static_cast<double>(n) * n;
  auto rhs = [nn](const std::array<double, 2>& x, std::array<double, 2>& dx, double t) {
    const double psi = x[0], dpsi = x[1];
    dx[0] = dpsi;
    dx[1] = 0.5 * (1.0 / psi - 1.0 / (1.0 - psi)) * dpsi * dpsi - dpsi / t -
            8.0 * psi * (1.0 - psi) + 2.0 * nn * psi / (t * t * (1.0 - psi));
  };
  const std::array<double, 2> x0{(U * U).to_double(), (U * dU * 2L).to_double()};
  const auto times = uniform_grid(t0, t1, samples);
  const auto states = detail::integrate_on_grid(rhs, x0, times, tol);

  PainleveTrajectory tr;
  tr.kind = PainleveTrajectory::Kind::PhiV;
  tr.n = n;
  tr.t = times;
  for (const auto& x : states) {
    tr.value.push_back(1.0 - x[0]);
    tr.derivative.push_back(-x[1]);
    tr.one_minus_phi.push_back(x[0]);
  }
  return tr;
}

double piii_series(int n, double t) {
  const double N = n, t2 = t * t;
  return -t / N - t * t2 / (N * N * (N + 1)) -
         2 * t * t2 * t2 / (N * N * N * (N + 1) * (N + 2)) -
         (5 * N + 6) * t * t2 * t2 * t2 / (N * N * N * N * (N + 1) * (N + 1) * (N + 2) * (N + 3));
}

double piii_series_derivative(int n, double t) {
  const double N = n, t2 = t * t;
  return -1 / N - 3 * t2 / (N * N * (N + 1)) - 10 * t2 * t2 / (N * N * N * (N + 1) * (N + 2)) -
         7 * (5 * N + 6) * t2 * t2 * t2 /
             (N * N * N * N * (N + 1) * (N + 1) * (N + 2) * (N + 3));
}

PainleveTrajectory integrate_piii(int n, double t0, double t1, double tol, std::size_t samples,
                                  PiiiStart start) {
  if (n < 2) throw InvalidArgument("integrate_piii needs n >= 2 (W_1 depends on the U_0 convention)");
  if (!(t0 > 0 && t1 > t0)) throw InvalidArgument("integrate_piii needs 0 < t0 < t1");
  using Quad = boost::multiprecision::cpp_bin_float_quad;
  const Quad N = n;

  std::array<Quad, 2> x0;
  if (start == PiiiStart::Series) {
    x0 = {Quad(piii_series(n, t0)), Quad(piii_series_derivative(n, t0))};
  } else {
    constexpr Bits bits = 160;
    const Real t(t0, bits);
    const Real un = solve_corners(n, t, bits).U_minus;
    const Real w = un / solve_corners(n - 1, t, bits).U_minus;
    const Real dw = -(w * static_cast<long>(2 * n - 1)) / t - 2L + un * un * 4L - w * w * 2L;
    x0 = {Quad(w.to_string(40)), Quad(dw.to_string(40))};
  }
  auto rhs = [N](const std::array<Quad, 2>& x, std::array<Quad, 2>& dx, const Quad& t) {
    const Quad& w = x[0];
    const Quad& dw = x[1];
    dx[0] = dw;
    dx[1] = dw * dw / w - dw / t + 4 * (N - 1) / t * w * w - 4 * N / t + 4 * w * w * w - 4 / w;
  };
  const auto times = uniform_grid(t0, t1, samples);
  const std::vector<Quad> qtimes(times.begin(), times.end());
  const auto states = detail::integrate_on_grid<Quad, 2>(rhs, x0, qtimes, Quad(std::min(tol, 1e-20)));

  PainleveTrajectory tr;
  tr.kind = PainleveTrajectory::Kind::WIII;
  tr.n = n;
  tr.t = times;
  for (const auto& x : states) {
    tr.value.push_back(static_cast<double>(x[0]));
    tr.derivative.push_back(static_cast<double>(x[1]));
  }
  return tr;
}

namespace {

template <class T>
std::pair<T, T> airy_asymptotic(const T& s) {
  using std::abs;
  using std::exp;
  using std::sqrt;
  const T zeta = T(2) / 3 * s * sqrt(s);
  const T s14 = sqrt(sqrt(s));
  const T pref = exp(-zeta) / (2 * sqrt(boost::math::constants::pi<T>()));
  T sum_u = 1, sum_v = 1, uk = 1, zpow = 1;
  T prev = abs(T(1));
  for (int k = 1; k < 400; ++k) {
    uk *= T((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / T((2 * k - 1) * 216 * k);
    zpow /= zeta;
    const T sign = (k % 2 == 0) ? T(1) : T(-1);
    const T term_u = sign * uk * zpow;
    if (abs(term_u) >= prev) break;
    const T vk = -T(6 * k + 1) / T(6 * k - 1) * uk;
    sum_u += term_u;
    sum_v += sign * vk * zpow;
    prev = abs(term_u);
  }
  return {pref / s14 * sum_u, -pref * s14 * sum_v};
}

template <class T>
PainleveIISolution integrate_pii_impl(double s0d, double s_min, double tol, double step) {
  const T s0 = s0d;
  const auto [ai, dai] = airy_asymptotic<T>(s0);
  // Closed forms for q = Ai: d/ds of each reproduces -q^2 and -R.
  const T R0 = dai * dai - s0 * ai * ai;
  const T E0 = (2 * s0 * s0 * ai * ai - 2 * s0 * dai * dai - ai * dai) / 3;

  const long intervals = std::max(1L, std::lround((s0d - s_min) / step));
  std::vector<T> times(static_cast<std::size_t>(intervals) + 1);
  for (long k = 0; k <= intervals; ++k)
    times[static_cast<std::size_t>(k)] = s0 - (s0 - T(s_min)) * T(k) / T(intervals);
  times.back() = T(s_min);

  auto rhs = [](const std::array<T, 4>& x, std::array<T, 4>& dx, const T& s) {
    dx[0] = x[1];
    dx[1] = s * x[0] + 2 * x[0] * x[0] * x[0];
    dx[2] = -x[0] * x[0];
    dx[3] = -x[2];
  };
  const auto states = detail::integrate_on_grid<T, 4>(rhs, {ai, dai, R0, E0}, times, T(tol));

  PainleveIISolution sol;
  sol.s0 = s0d;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double q = static_cast<double>(states[i][0]);
    if (!(q > 0))
      throw IntegrationFailure("q left the positive branch near s = " +
                                   std::to_string(static_cast<double>(times[i])),
                               static_cast<double>(times[i]));
    sol.s.push_back(static_cast<double>(times[i]));
    sol.q.push_back(q);
    sol.dq.push_back(static_cast<double>(states[i][1]));
    sol.R.push_back(static_cast<double>(states[i][2]));
    sol.E.push_back(static_cast<double>(states[i][3]));
  }
  return sol;
}

}  // namespace

AiryValue airy_ai(double s) {
  if (!(s >= 4)) throw InvalidArgument("airy_ai asymptotic expansion needs s >= 4");
  const auto [ai, dai] = airy_asymptotic<double>(s);
  return {ai, dai};
}

double PainleveIISolution::q_at(double x) const { return detail::hermite(s, q, dq, x); }

double PainleveIISolution::E_at(double x) const {
  std::vector<double> dE(R.size());
  std::transform(R.begin(), R.end(), dE.begin(), [](double r) { return -r; });
  return detail::hermite(s, E, dE, x);
}

double PainleveIISolution::F_at(double x) const { return std::exp(-E_at(x)); }

PainleveIISolution integrate_pii(double s0, double s_min, double tol, double step) {
  if (!(s0 >= 6 && s0 <= 10)) throw InvalidArgument("integrate_pii needs s0 in [6, 10]");
  if (!(s_min >= -12 && s_min < s0)) throw InvalidArgument("integrate_pii needs -12 <= s_min < s0");
  if (!(step > 0) || !(tol > 0)) throw InvalidArgument("integrate_pii needs positive step and tol");
  if (s_min < -10) {
    using Quad = boost::multiprecision::cpp_bin_float_quad;
    return integrate_pii_impl<Quad>(s0, s_min, std::min(tol, 1e-20), step);
  }
  return integrate_pii_impl<double>(s0, s_min, tol, step);
}

std::vector<double> toeplitz_reference(const PainleveTrajectory& tr) {
  constexpr Bits bits = 128;
  std::vector<double> out;
  out.reserve(tr.t.size());
  for (double t : tr.t) {
    const Real x(t, bits);
    out.push_back(tr.kind == PainleveTrajectory::Kind::PhiV ? toeplitz_phi(tr.n, x, bits).to_double()
                                                            : toeplitz_w(tr.n, x, bits).to_double());
  }
  return out;
}

}  // namespace ptw
