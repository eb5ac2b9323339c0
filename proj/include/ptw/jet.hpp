// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

// Order-2 jets a0 + a1*e + a2*e^2 (mod e^3) over an arbitrary ring, and a
// determinant by Gaussian elimination without pivoting over any ring whose
// pivots are invertible. Both are shared by the exact series code and the
// arbitrary-precision Toeplitz code.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ptw {

template <class T>
struct Jet2 {
  T v0, v1, v2;

  Jet2& operator+=(const Jet2& o) {
    v0 += o.v0;
    v1 += o.v1;
    v2 += o.v2;
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    v0 -= o.v0;
    v1 -= o.v1;
    v2 -= o.v2;
    return *this;
  }
  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    return Jet2{a.v0 * b.v0, a.v0 * b.v1 + a.v1 * b.v0, a.v0 * b.v2 + a.v1 * b.v1 + a.v2 * b.v0};
  }
  Jet2& operator*=(const Jet2& o) { return *this = *this * o; }
};

/// Inverse of a jet given an inverter for its constant term.
template <class T, class Invert>
Jet2<T> invert_jet(const Jet2<T>& a, Invert&& invert) {
  T b0 = invert(a.v0);
  T b1 = -(b0 * b0 * a.v1);
  T b2 = -((a.v1 * b1 + a.v2 * b0) * b0);
  return Jet2<T>{std::move(b0), std::move(b1), std::move(b2)};
}

/// Determinant of the n*n row-major matrix `a` by elimination without row
/// exchanges. `invert` must return the inverse of each pivot; `one` is the ring
/// unit returned for n == 0.
template <class Ring, class Invert>
Ring determinant_no_pivot(std::vector<Ring> a, std::size_t n, Ring one, Invert&& invert) {
  if (a.size() != n * n) throw std::invalid_argument("determinant_no_pivot: shape mismatch");
  Ring det = std::move(one);
  for (std::size_t k = 0; k < n; ++k) {
    const Ring& pivot = a[k * n + k];
    det *= pivot;
    if (k + 1 == n) break;
    Ring inv = invert(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      Ring factor = a[i * n + k] * inv;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
    }
  }
  return det;
}

}  // namespace ptw
