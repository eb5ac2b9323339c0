// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

// Value-semantic wrapper over an MPFR binary float with per-object precision.
// Results of binary operations carry the larger of the operand precisions.

#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ptw {

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 128;
inline constexpr Bits kMinBits = 64;

class Real {
 public:
  Real() : Real(kDefaultBits) {}
  explicit Real(Bits bits);
  Real(long value, Bits bits);
  Real(int value, Bits bits) : Real(static_cast<long>(value), bits) {}
  Real(double value, Bits bits);
  /// Parses a decimal literal ("0.1", "-3e-5") rounded to nearest.
  Real(std::string_view decimal, Bits bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Bits bits() const { return mpfr_get_prec(v_); }
  /// Rounds to `bits` in place.
  void set_bits(Bits bits);
  Real with_bits(Bits bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 17) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, double b);
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
/// log(1 + x) without cancellation for small x.
Real log1p(const Real& x);
Real pow(const Real& x, long e);
Real cbrt(const Real& x);
Real pi(Bits bits);

/// Relative difference |a-b| / max(|a|,|b|), zero when both vanish.
Real relative_difference(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace ptw
