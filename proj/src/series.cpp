// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptw/series.hpp"

#include <algorithm>
#include <sstream>

#include "ptw/error.hpp"
#include "ptw/jet.hpp"

namespace ptw {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, mpq_class(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("TruncatedSeries needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const mpq_class& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

const mpq_class& TruncatedSeries::operator[](std::size_t k) const {
  if (k >= coeffs_.size())
    throw OutOfRange("coefficient t^" + std::to_string(k) + " beyond series order " +
                     std::to_string(order()));
  return coeffs_[k];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::size_t m = std::min(order, this->order());
  return TruncatedSeries(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] == 0) throw InvalidArgument("series with zero constant term is not invertible");
  const std::size_t m = order();
  std::vector<mpq_class> b(m + 1);
  b[0] = 1 / coeffs_[0];
  for (std::size_t k = 1; k <= m; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * b[k - j];
    b[k] = -acc * b[0];
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries TruncatedSeries::reflected() const {
  TruncatedSeries r = *this;
  for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

bool TruncatedSeries::only_even_powers() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2)
    if (coeffs_[k] != 0) return false;
  return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t m = std::min(a.order(), b.order());
  std::vector<mpq_class> c(m + 1, mpq_class(0));
  for (std::size_t i = 0; i <= m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= m; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) { return *this = *this * o; }

TruncatedSeries& TruncatedSeries::operator*=(const mpq_class& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator-(TruncatedSeries a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

Real TruncatedSeries::evaluate(const Real& x) const {
  // Horner
  Real acc(x.bits());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += to_real(*it, x.bits());
  }
  return acc;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[k].get_str();
    if (k > 0) os << "*t^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << coeffs_.size() << ")";
  return os.str();
}

Real to_real(const mpq_class& q, Bits bits) {
  Real r(bits);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

TruncatedSeries bessel_series(long k, std::size_t order) {
  const std::size_t kk = static_cast<std::size_t>(k < 0 ? -k : k);
  std::vector<mpq_class> c(order + 1, mpq_class(0));
  for (std::size_t m = 0; 2 * m + kk <= order; ++m) {
    mpz_class denom = factorial(m) * factorial(m + kk);
    c[2 * m + kk] = mpq_class(1, denom);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries toeplitz_det_series(const std::vector<TruncatedSeries>& symbol, std::size_t n) {
  if (symbol.empty()) throw InvalidArgument("empty symbol");
  const std::size_t order = symbol[0].order();
  if (n == 0) return TruncatedSeries::constant(1, order);
  if (symbol.size() < n) throw InvalidArgument("symbol has fewer than n coefficients");
  std::vector<TruncatedSeries> a;
  a.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) a.push_back(symbol[j > k ? j - k : k - j]);
  return determinant_no_pivot(std::move(a), n, TruncatedSeries::constant(1, order),
                              [](const TruncatedSeries& p) { return p.inverse(); });
}

TruncatedSeries toeplitz_det_series(std::size_t n, std::size_t order) {
  std::vector<TruncatedSeries> f;
  for (std::size_t k = 0; k < std::max<std::size_t>(n, 1); ++k)
    f.push_back(bessel_series(static_cast<long>(k), order));
  return toeplitz_det_series(f, n);
}

namespace {

// h_k for h(z) = f(z^2): h_{2m} = f_m, odd coefficients vanish.
std::vector<TruncatedSeries> doubled_symbol(std::size_t count, std::size_t order) {
  std::vector<TruncatedSeries> h;
  for (std::size_t k = 0; k < count; ++k)
    h.push_back(k % 2 == 0 ? bessel_series(static_cast<long>(k / 2), order)
                           : TruncatedSeries(order));
  return h;
}

}  // namespace

TruncatedSeries dhat_zero_series(std::size_t n, std::size_t order) {
  if (n == 0) return TruncatedSeries::constant(1, order);
  return toeplitz_det_series(doubled_symbol(n, order), n);
}

TruncatedSeries dhat_t1_second_series(std::size_t n, std::size_t order) {
  using J = Jet2<TruncatedSeries>;
  if (n == 0) return TruncatedSeries(order);
  // exp(t1(z+1/z)) = 1 + t1 (z + 1/z) + t1^2/2 (z^2 + 2 + z^-2) + O(t1^3), so
  // g_k = h_k + t1 (h_{k-1} + h_{k+1}) + t1^2/2 (h_{k-2} + 2 h_k + h_{k+2}).
  const auto h = doubled_symbol(n + 2, order);
  auto hk = [&](long k) -> const TruncatedSeries& { return h[static_cast<std::size_t>(k < 0 ? -k : k)]; };
  const mpq_class half(1, 2);
  std::vector<J> a;
  a.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      long d = static_cast<long>(j) - static_cast<long>(k);
      TruncatedSeries second = (hk(d - 2) + hk(d) + hk(d) + hk(d + 2)) * half;
      a.push_back(J{hk(d), hk(d - 1) + hk(d + 1), std::move(second)});
    }
  }
  const TruncatedSeries zero(order);
  J one{TruncatedSeries::constant(1, order), zero, zero};
  J det = determinant_no_pivot(std::move(a), n, std::move(one), [](const J& p) {
    return invert_jet(p, [](const TruncatedSeries& s) { return s.inverse(); });
  });
  return det.v2 * mpq_class(2);
}

}  // namespace ptw
