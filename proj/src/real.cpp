// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptw/real.hpp"

#include <algorithm>
#include <ostream>

#include "ptw/error.hpp"

namespace ptw {
namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

Bits joint(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

Real::Real(Bits bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, Bits bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, kRnd);
}

Real::Real(double value, Bits bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, value, kRnd);
}

Real::Real(std::string_view decimal, Bits bits) {
  mpfr_init2(v_, bits);
  std::string s(decimal);
  if (mpfr_set_str(v_, s.c_str(), 10, kRnd) != 0) {
    mpfr_clear(v_);
    throw InvalidArgument("not a decimal number: '" + s + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

void Real::set_bits(Bits bits) { mpfr_prec_round(v_, bits, kRnd); }

Real Real::with_bits(Bits bits) const {
  Real r(bits);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Real& Real::operator+=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), kRnd);
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), kRnd);
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), kRnd);
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), kRnd);
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.bits());
  mpfr_neg(r.v_, a.v_, kRnd);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r(a.bits());
  mpfr_add_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.bits());
  mpfr_sub_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r(b.bits());
  mpfr_si_sub(r.v_, a, b.v_, kRnd);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.bits());
  mpfr_mul_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.bits());
  mpfr_div_si(r.v_, a.v_, b, kRnd);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r(b.bits());
  mpfr_si_div(r.v_, a, b.v_, kRnd);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.v_) || b != b) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) {
  Real r(x.bits());
  mpfr_abs(r.raw(), x.raw(), kRnd);
  return r;
}
Real sqrt(const Real& x) {
  Real r(x.bits());
  mpfr_sqrt(r.raw(), x.raw(), kRnd);
  return r;
}
Real exp(const Real& x) {
  Real r(x.bits());
  mpfr_exp(r.raw(), x.raw(), kRnd);
  return r;
}
Real log(const Real& x) {
  Real r(x.bits());
  mpfr_log(r.raw(), x.raw(), kRnd);
  return r;
}
Real log1p(const Real& x) {
  Real r(x.bits());
  mpfr_log1p(r.raw(), x.raw(), kRnd);
  return r;
}
Real pow(const Real& x, long e) {
  Real r(x.bits());
  mpfr_pow_si(r.raw(), x.raw(), e, kRnd);
  return r;
}
Real cbrt(const Real& x) {
  Real r(x.bits());
  mpfr_cbrt(r.raw(), x.raw(), kRnd);
  return r;
}
Real pi(Bits bits) {
  Real r(bits);
  mpfr_const_pi(r.raw(), kRnd);
  return r;
}

Real relative_difference(const Real& a, const Real& b) {
  Real scale = abs(a) > abs(b) ? abs(a) : abs(b);
  if (scale.is_zero()) return Real(joint(a, b));
  return abs(a - b) / scale;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

}  // namespace ptw
