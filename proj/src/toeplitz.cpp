// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptw/toeplitz.hpp"

#include <cmath>
#include <string>

#include "ptw/error.hpp"
#include "ptw/jet.hpp"

namespace ptw {
namespace {

constexpr Bits kGuardBits = 16;

void require_bits(Bits bits) {
  if (bits < kMinBits) throw InvalidArgument("precision must be at least 64 bits");
}

// Smallest K with |t|^K / K! * exp(t^2/(K+1)) below 2^-(bits+10); beyond it
// every f_k(t) is negligible relative to f_0 >= 1.
long negligible_index(double t, Bits bits) {
  const double a = std::fabs(t);
  const double target = -(static_cast<double>(bits) + 10.0) * std::log(2.0);
  for (long k = 1;; ++k) {
    double lg = (a > 0 ? k * std::log(a) : -INFINITY) - std::lgamma(k + 1.0) + a * a / (k + 1.0);
    if (lg < target && k > a) return k;
  }
}

// Row-major lower-triangular Cholesky factor.
struct Cholesky {
  std::size_t n;
  std::vector<Real> L;

  const Real& at(std::size_t i, std::size_t j) const { return L[i * n + j]; }

  std::vector<Real> solve(const std::vector<Real>& b) const {
    std::vector<Real> y(b);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < i; ++k) y[i] -= at(i, k) * y[k];
      y[i] /= at(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t k = ii + 1; k < n; ++k) y[ii] -= at(k, ii) * y[k];
      y[ii] /= at(ii, ii);
    }
    return y;
  }

  Real log_det() const {
    Real acc(L[0].bits());
    for (std::size_t i = 0; i < n; ++i) acc += log(at(i, i));
    return acc * 2L;
  }
};

Cholesky cholesky(const std::vector<Real>& a, std::size_t n, Bits bits) {
  Cholesky c{n, std::vector<Real>(n * n, Real(bits))};
  for (std::size_t j = 0; j < n; ++j) {
    Real d = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= c.L[j * n + k] * c.L[j * n + k];
    if (!(d > 0.0))
      throw PrecisionExhausted("Toeplitz matrix lost positive definiteness at pivot " +
                                   std::to_string(j + 1) + "; increase precision",
                               static_cast<int>(j + 1));
    c.L[j * n + j] = sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      Real s = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= c.L[i * n + k] * c.L[j * n + k];
      c.L[i * n + j] = s / c.L[j * n + j];
    }
  }
  return c;
}

std::vector<Real> symmetric_toeplitz(const std::vector<Real>& f, std::size_t n) {
  std::vector<Real> a;
  a.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) a.push_back(f[j > k ? j - k : k - j]);
  return a;
}

Real dot(const std::vector<Real>& a, const std::vector<Real>& b) {
  Real acc(a.front().bits());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

std::vector<Real> symbol_coeffs(long k_max, const Real& t, Bits bits) {
  require_bits(bits);
  if (k_max < 0) throw InvalidArgument("k_max must be nonnegative");
  const Bits wb = bits + kGuardBits;
  const Real tw = t.with_bits(wb);
  const Real t2 = tw * tw;
  Real eps(1L, wb);
  mpfr_mul_2si(eps.raw(), eps.raw(), -static_cast<long>(wb), MPFR_RNDN);
  const double t2d = t2.to_double();

  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  Real lead(1L, wb);  // t^k / k!
  for (long k = 0; k <= k_max; ++k) {
    if (k > 0) {
      lead *= tw;
      lead /= k;
    }
    Real sum = lead;
    Real term = lead;
    for (long m = 0; !term.is_zero(); ++m) {
      term *= t2;
      term /= (m + 1) * (m + k + 1);
      sum += term;
      if (static_cast<double>(m + 1) * static_cast<double>(m + k + 1) > t2d &&
          abs(term) <= abs(sum) * eps)
        break;
    }
    sum.set_bits(bits);
    out.push_back(std::move(sum));
  }
  return out;
}

Real symbol_coeff(long k, const Real& t, Bits bits) {
  long kk = k < 0 ? -k : k;
  return std::move(symbol_coeffs(kk, t, bits).back());
}

Real CornerData::f0_gap() const {
  std::vector<Real> fplus(symbol.begin() + 1, symbol.begin() + 1 + n);
  return symbol[0] - dot(u_plus, fplus);
}

Real CornerData::fn1_gap() const {
  std::vector<Real> fplus(symbol.begin() + 1, symbol.begin() + 1 + n);
  return symbol[static_cast<std::size_t>(n) + 1] - dot(u_minus, fplus);
}

CornerData solve_corners(int n, const Real& t, Bits bits) {
  require_bits(bits);
  if (n < 1) throw InvalidArgument("solve_corners needs n >= 1");
  const std::size_t nn = static_cast<std::size_t>(n);
  CornerData c;
  c.n = n;
  c.t = t.with_bits(bits);
  c.symbol = symbol_coeffs(n + 1, c.t, bits);

  const Cholesky chol = cholesky(symmetric_toeplitz(c.symbol, nn), nn, bits);
  std::vector<Real> fplus(c.symbol.begin() + 1, c.symbol.begin() + 1 + n);
  std::vector<Real> fminus(fplus.rbegin(), fplus.rend());
  std::vector<Real> dplus(nn, Real(bits)), dminus(nn, Real(bits));
  dplus.front() = Real(1L, bits);
  dminus.back() = Real(1L, bits);

  c.u_plus = chol.solve(fplus);
  c.u_minus = chol.solve(fminus);
  c.v_plus = chol.solve(dplus);
  c.v_minus = chol.solve(dminus);
  c.log_det = chol.log_det();
  c.U_minus = c.u_plus.back();
  c.U_plus = c.u_plus.front();
  c.V_plus = c.v_plus.front();
  c.V_minus = c.v_minus.front();
  return c;
}

USequence d_sequence(int n_max, const Real& t, Bits bits) {
  require_bits(bits);
  if (n_max < 1) throw InvalidArgument("d_sequence needs n_max >= 1");
  USequence seq;
  seq.t = t.with_bits(bits);
  const std::vector<Real> r = symbol_coeffs(n_max, seq.t, bits);

  seq.log_det.reserve(static_cast<std::size_t>(n_max) + 1);
  seq.log_det.push_back(Real(bits));
  seq.log_det.push_back(log(r[0]));
  Real err = r[0];             // prediction error E_{m-1} = D_m / D_{m-1}
  std::vector<Real> a, next;   // predictor of order m-1
  for (int m = 1; m <= n_max; ++m) {
    Real acc = r[static_cast<std::size_t>(m)];
    for (int j = 0; j < m - 1; ++j)
      acc -= a[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(m - 1 - j)];
    Real k = acc / err;
    if (!(abs(k) < 1.0))
      throw PrecisionExhausted("|U_" + std::to_string(m) + "| >= 1 in the Toeplitz recursion; "
                               "increase precision", m);
    next.assign(static_cast<std::size_t>(m), Real(bits));
    for (int j = 0; j < m - 1; ++j)
      next[static_cast<std::size_t>(j)] =
          a[static_cast<std::size_t>(j)] - k * a[static_cast<std::size_t>(m - 2 - j)];
    next[static_cast<std::size_t>(m - 1)] = k;
    a.swap(next);

    Real one_minus = 1L - k * k;
    seq.U.push_back(k);
    if (m < n_max) {
      err *= one_minus;
      seq.log_det.push_back(seq.log_det.back() + log(err));
    }
  }
  return seq;
}

namespace {

// Coefficient of z^d in exp(r z + s / z).
Real general_symbol_coeff(long d, const Real& r, const Real& s, Bits bits) {
  const Bits wb = bits + kGuardBits;
  const Real rw = r.with_bits(wb), sw = s.with_bits(wb);
  const long ad = d < 0 ? -d : d;
  const Real& lead_base = d >= 0 ? rw : sw;
  Real lead(1L, wb);
  for (long i = 1; i <= ad; ++i) {
    lead *= lead_base;
    lead /= i;
  }
  const Real rs = rw * sw;
  const double rsd = std::fabs(rs.to_double());
  Real eps(1L, wb);
  mpfr_mul_2si(eps.raw(), eps.raw(), -static_cast<long>(wb), MPFR_RNDN);
  Real sum = lead, term = lead;
  for (long m = 0; !term.is_zero(); ++m) {
    term *= rs;
    term /= (m + 1) * (m + ad + 1);
    sum += term;
    if (static_cast<double>(m + 1) * static_cast<double>(m + ad + 1) > rsd &&
        abs(term) <= abs(sum) * eps)
      break;
  }
  sum.set_bits(bits);
  return sum;
}

}  // namespace

Real det_general(int n, const Real& r, const Real& s, Bits bits) {
  require_bits(bits);
  if (n < 0) throw InvalidArgument("det_general needs n >= 0");
  if (n == 0) return Real(1L, bits);
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Real> coeff;  // index d + n - 1 for d in [-(n-1), n-1]
  for (long d = -(n - 1); d <= n - 1; ++d) coeff.push_back(general_symbol_coeff(d, r, s, bits));
  std::vector<Real> a;
  a.reserve(nn * nn);
  for (std::size_t j = 0; j < nn; ++j)
    for (std::size_t k = 0; k < nn; ++k)
      a.push_back(coeff[j + nn - 1 - k]);

  // LU with partial pivoting
  Real det(1L, bits);
  for (std::size_t k = 0; k < nn; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < nn; ++i)
      if (abs(a[i * nn + k]) > abs(a[p * nn + k])) p = i;
    if (a[p * nn + k].is_zero()) return Real(bits);
    if (p != k) {
      for (std::size_t j = 0; j < nn; ++j) std::swap(a[k * nn + j], a[p * nn + j]);
      det = -det;
    }
    det *= a[k * nn + k];
    for (std::size_t i = k + 1; i < nn; ++i) {
      Real factor = a[i * nn + k] / a[k * nn + k];
      for (std::size_t j = k + 1; j < nn; ++j) a[i * nn + j] -= factor * a[k * nn + j];
    }
  }
  return det;
}

Real dhat_symbol_coeff(long k, const Real& t1, const Real& t2, Bits bits) {
  require_bits(bits);
  const long k1 = negligible_index(t1.to_double(), bits);
  const long k2 = negligible_index(t2.to_double(), bits);
  const long kk = k < 0 ? -k : k;
  const std::vector<Real> f1 = symbol_coeffs(kk + 2 * k2 + k1, t1, bits);
  const std::vector<Real> f2 = symbol_coeffs(k2, t2, bits);
  Real sum(bits);
  for (long j = -k2; j <= k2; ++j) {
    long idx = kk - 2 * j;
    if (idx < 0) idx = -idx;
    if (idx > static_cast<long>(f1.size()) - 1) continue;
    sum += f2[static_cast<std::size_t>(j < 0 ? -j : j)] * f1[static_cast<std::size_t>(idx)];
  }
  return sum;
}

Real dhat(int n, const Real& t1, const Real& t2, Bits bits) {
  require_bits(bits);
  if (n < 1) throw InvalidArgument("dhat needs n >= 1");
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Real> g;
  for (long k = 0; k < n; ++k) g.push_back(dhat_symbol_coeff(k, t1, t2, bits));
  return exp(cholesky(symmetric_toeplitz(g, nn), nn, bits).log_det());
}

Real dhat_t1_second(int n, const Real& t, Bits bits) {
  require_bits(bits);
  if (n < 1) throw InvalidArgument("dhat_t1_second needs n >= 1");
  using J = Jet2<Real>;
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::vector<Real> f = symbol_coeffs(n / 2 + 2, t, bits);
  auto h = [&](long k) {
    long a = k < 0 ? -k : k;
    return a % 2 == 0 ? f[static_cast<std::size_t>(a / 2)] : Real(bits);
  };
  std::vector<J> a;
  a.reserve(nn * nn);
  for (long j = 0; j < n; ++j) {
    for (long k = 0; k < n; ++k) {
      long d = j - k;
      Real second = (h(d - 2) + h(d) * 2L + h(d + 2)) / 2L;
      a.push_back(J{h(d), h(d - 1) + h(d + 1), std::move(second)});
    }
  }
  J one{Real(1L, bits), Real(bits), Real(bits)};
  J det = determinant_no_pivot(std::move(a), nn, std::move(one), [](const J& p) {
    return invert_jet(p, [](const Real& x) { return 1L / x; });
  });
  return det.v2 * 2L;
}

}  // namespace ptw
