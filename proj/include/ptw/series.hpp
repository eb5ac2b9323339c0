// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

// Exact truncated power series in t with big-rational coefficients.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "ptw/real.hpp"

namespace ptw {

/// c_0 + c_1 t + ... + c_M t^M, exact. Arithmetic between series of different
/// order truncates to the smaller order.
class TruncatedSeries {
 public:
  /// The zero series of order `order`.
  explicit TruncatedSeries(std::size_t order = 0);
  /// Takes coefficients c_0..c_M; must be non-empty.
  explicit TruncatedSeries(std::vector<mpq_class> coeffs);

  static TruncatedSeries constant(const mpq_class& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  /// Coefficient of t^k; throws when k exceeds the order.
  const mpq_class& operator[](std::size_t k) const;
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;
  /// Multiplicative inverse; the constant term must be nonzero.
  TruncatedSeries inverse() const;
  /// The series of f(-t).
  TruncatedSeries reflected() const;
  bool only_even_powers() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const mpq_class& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const mpq_class& c) { return a *= c; }
  friend TruncatedSeries operator-(TruncatedSeries a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Sum of c_k x^k in `bits` of precision.
  Real evaluate(const Real& x) const;
  std::string to_string() const;

 private:
  std::vector<mpq_class> coeffs_;
};

Real to_real(const mpq_class& q, Bits bits);
mpz_class factorial(unsigned long n);

/// f_k(t) = sum_m t^(2m+k) / (m! (m+k)!), the k-th Fourier coefficient of
/// exp(t(z + 1/z)), i.e. I_k(2t). Negative k is folded to |k|.
TruncatedSeries bessel_series(long k, std::size_t order);

/// Determinant of the n*n matrix with entries symbol(|j-k|). `symbol` must hold
/// at least n series; symbol[0] must have a nonzero constant term.
TruncatedSeries toeplitz_det_series(const std::vector<TruncatedSeries>& symbol, std::size_t n);

/// D_n(t) = det (f_{j-k}) as a series; n == 0 gives the constant 1.
TruncatedSeries toeplitz_det_series(std::size_t n, std::size_t order);

/// The determinant of the Toeplitz matrix of exp(t1(z+1/z) + t(z^2+z^-2)) at
/// t1 = 0 as a series in t.
TruncatedSeries dhat_zero_series(std::size_t n, std::size_t order);

/// The second t1-derivative of the same determinant at t1 = 0, as a series in
/// t, from exact order-2 jets in t1.
TruncatedSeries dhat_t1_second_series(std::size_t n, std::size_t order);

}  // namespace ptw
