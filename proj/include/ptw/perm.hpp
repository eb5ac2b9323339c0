// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

// Exhaustive permutation censuses by longest increasing subsequence, and the
// exact checks tying them to the Toeplitz generating functions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ptw/series.hpp"

namespace ptw {

/// Longest strictly increasing subsequence by patience sorting.
template <class It>
std::size_t lis_length(It first, It last) {
  using V = typename std::iterator_traits<It>::value_type;
  std::vector<V> tails;
  for (; first != last; ++first) {
    auto pos = std::lower_bound(tails.begin(), tails.end(), *first);
    if (pos == tails.end())
      tails.push_back(*first);
    else
      *pos = *first;
  }
  return tails.size();
}

template <class Range>
std::size_t lis_length(const Range& r) {
  return lis_length(std::begin(r), std::end(r));
}

enum class Group { Symmetric, Odd };

inline constexpr int kMaxSymmetricN = 11;
inline constexpr int kMaxOddN = 13;

struct PermutationCensus {
  int N = 0;
  Group group = Group::Symmetric;
  /// counts[n] = #{sigma : lis(sigma) <= n} for n = 0..N.
  std::vector<std::uint64_t> counts;
  std::uint64_t order = 0;

  /// counts[min(n, N)], so n beyond N gives the group order.
  std::uint64_t count_at_most(int n) const;
  /// Prob(lis <= n) as a reduced rational.
  mpq_class probability(int n) const;
};

/// All N! permutations of 1..N, 0 <= N <= 11.
PermutationCensus census_symmetric(int N);

/// The odd permutations of {-k..k} (0 included iff N is odd), k = N / 2,
/// enumerated as (permutation of 1..k, sign vector); 0 <= N <= 13.
PermutationCensus census_odd(int N);

/// The full image sequence sigma(-k), ..., sigma(k) of the odd permutation
/// with sigma(m) = signs[m-1] * pi[m-1] for m = 1..k.
std::vector<int> odd_permutation_sequence(const std::vector<int>& pi, const std::vector<int>& signs,
                                          bool with_zero);

/// Generating series G_n, H_n as products of Toeplitz determinant series.
TruncatedSeries g_product_series(int n, std::size_t order);
TruncatedSeries h_product_series(int n, std::size_t order);

struct IdentityCheck {
  std::string identity;
  int n = 0;
  int N = 0;
  bool passed = false;
  std::string detail;  ///< the compared values
};

struct VerifyReport {
  std::vector<IdentityCheck> checks;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Exact comparison of the generating-function identities against the
/// censuses for n = 1..n_max (<= 6) and N = 0..N_max (<= 10), plus numeric
/// cross-checks of the product formulas at 128 bits.
VerifyReport verify_generating(int n_max, int N_max);

/// F_{N+2}(n) <= F_N(n) for every N with N + 2 within the census limit of
/// the group and every n = 1..N+2, exactly.
VerifyReport check_monotonicity(Group group, int N_max);

struct PoissonRow {
  int k = 0;
  std::string point;  ///< "nu", "k" or "mu"
  double lambda = 0;
  bool defined = false;  ///< false when lambda < 0
  double phi_even = 0;
  double phi_odd = 0;
};

struct DepoissonReport {
  int n = 0;
  VerifyReport monotonicity;
  std::vector<PoissonRow> rows;
  /// phi_even and phi_odd nonincreasing along the defined rows sorted by lambda.
  bool phi_monotone = false;
};

/// Monotonicity checks for both groups plus phi_n^e(lambda) = e^(-lambda)
/// G_n(sqrt(lambda/2)) and phi_n^o with H_n at lambda in {nu_k, k, mu_k},
/// mu_k, nu_k = k +- 4 sqrt(k log k), for k = 1..k_max (<= 6).
DepoissonReport depoisson_demo(int n, int k_max);

}  // namespace ptw
