// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

// Arbitrary-precision evaluation of the Toeplitz determinants D_n(t) of the
// symbol f(z) = exp(t(z + 1/z)) and of the corner quantities of T_n(f)^{-1}.
//
// Notation: delta+ / delta- are the first and last unit n-vectors,
// f+ = (f_1..f_n), f- = (f_n..f_1), u+- = T_n^{-1} f+-, v+- = T_n^{-1} delta+-.

#pragma once

#include <vector>

#include "ptw/real.hpp"

namespace ptw {

/// f_k(t) = I_|k|(2t) by direct series summation in `bits` of precision.
Real symbol_coeff(long k, const Real& t, Bits bits);

/// f_0..f_{k_max} in one pass.
std::vector<Real> symbol_coeffs(long k_max, const Real& t, Bits bits);

struct CornerData {
  int n = 0;
  Real t;
  Real log_det;  ///< log D_n
  Real U_minus;  ///< (u+, delta-) -- the U_n of the recurrence
  Real U_plus;   ///< (u+, delta+)
  Real V_plus;   ///< (v+, delta+)
  Real V_minus;  ///< (v-, delta+)
  std::vector<Real> u_plus, u_minus, v_plus, v_minus;
  std::vector<Real> symbol;  ///< f_0..f_{n+1}

  /// f_0 - (u+, f+)
  Real f0_gap() const;
  /// f_{n+1} - (u-, f+)
  Real fn1_gap() const;
};

/// Builds T_n(f), Cholesky-factors it and solves for u+-, v+-. Valid for any
/// real t (T_n is positive definite); throws PrecisionExhausted if a pivot is
/// not positive in working precision.
CornerData solve_corners(int n, const Real& t, Bits bits);

/// U_1..U_{n_max} and log D_0..log D_{n_max} from the symmetric Toeplitz
/// reflection-coefficient recursion in O(n_max^2).
struct USequence {
  Real t;
  std::vector<Real> U;        ///< U[k-1] = U_k
  std::vector<Real> log_det;  ///< log_det[k] = log D_k, log D_0 = 0

  int n_max() const { return static_cast<int>(U.size()); }
  const Real& u(int k) const { return U.at(static_cast<std::size_t>(k - 1)); }
  const Real& log_d(int k) const { return log_det.at(static_cast<std::size_t>(k)); }
};

USequence d_sequence(int n_max, const Real& t, Bits bits);

/// Determinant of the Toeplitz matrix of exp(r z + s/z).
Real det_general(int n, const Real& r, const Real& s, Bits bits);

/// Coefficient k of exp(t1(z + 1/z) + t2(z^2 + z^-2)).
Real dhat_symbol_coeff(long k, const Real& t1, const Real& t2, Bits bits);

/// Determinant of the Toeplitz matrix of exp(t1(z + 1/z) + t2(z^2 + z^-2)).
Real dhat(int n, const Real& t1, const Real& t2, Bits bits);

/// Second t1-derivative of dhat at (0, t) via exact order-2 jets in t1.
Real dhat_t1_second(int n, const Real& t, Bits bits);

}  // namespace ptw
