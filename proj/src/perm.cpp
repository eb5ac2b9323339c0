// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptw/perm.hpp"

#include <array>
#include <cmath>
#include <numeric>

#include "ptw/error.hpp"
#include "ptw/toeplitz.hpp"

namespace ptw {

namespace {

constexpr std::size_t kMaxLen = 16;

// Patience sorting on a short fixed-size buffer; avoids allocation in the
// enumeration loops.
int lis_small(const int* a, int len) {
  std::array<int, kMaxLen> tails{};
  int size = 0;
  for (int i = 0; i < len; ++i) {
    int* pos = std::lower_bound(tails.data(), tails.data() + size, a[i]);
    *pos = a[i];
    if (pos == tails.data() + size) ++size;
  }
  return size;
}

PermutationCensus finish_census(int N, Group g, const std::vector<std::uint64_t>& histogram) {
  PermutationCensus c;
  c.N = N;
  c.group = g;
  c.counts.resize(static_cast<std::size_t>(N) + 1);
  std::partial_sum(histogram.begin(), histogram.end(), c.counts.begin());
  c.order = c.counts.back();
  return c;
}

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

}  // namespace

std::uint64_t PermutationCensus::count_at_most(int n) const {
  if (n < 0) return 0;
  return counts[static_cast<std::size_t>(std::min(n, N))];
}

mpq_class PermutationCensus::probability(int n) const {
  mpq_class q(to_mpz(count_at_most(n)), to_mpz(order));
  q.canonicalize();
  return q;
}

PermutationCensus census_symmetric(int N) {
  if (N < 0 || N > kMaxSymmetricN)
    throw InvalidArgument("census_symmetric supports 0 <= N <= " + std::to_string(kMaxSymmetricN));
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(N) + 1, 0);
  std::array<int, kMaxLen> perm{};
  std::iota(perm.begin(), perm.begin() + N, 1);
  do {
    ++hist[static_cast<std::size_t>(lis_small(perm.data(), N))];
  } while (std::next_permutation(perm.begin(), perm.begin() + N));
  return finish_census(N, Group::Symmetric, hist);
}

std::vector<int> odd_permutation_sequence(const std::vector<int>& pi, const std::vector<int>& signs,
                                          bool with_zero) {
  const std::size_t k = pi.size();
  if (signs.size() != k) throw InvalidArgument("sign vector length differs from permutation length");
  std::vector<int> seq;
  seq.reserve(2 * k + 1);
  for (std::size_t m = k; m >= 1; --m) seq.push_back(-signs[m - 1] * pi[m - 1]);
  if (with_zero) seq.push_back(0);
  for (std::size_t m = 1; m <= k; ++m) seq.push_back(signs[m - 1] * pi[m - 1]);
  return seq;
}

PermutationCensus census_odd(int N) {
  if (N < 0 || N > kMaxOddN)
    throw InvalidArgument("census_odd supports 0 <= N <= " + std::to_string(kMaxOddN));
  const int k = N / 2;
  const bool with_zero = N % 2 == 1;
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(N) + 1, 0);
  std::array<int, kMaxLen> pi{};
  std::iota(pi.begin(), pi.begin() + k, 1);
  std::array<int, kMaxLen> seq{};
  do {
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      int pos = 0;
      for (int m = k; m >= 1; --m) {
        const int v = (mask >> (m - 1)) & 1u ? -pi[m - 1] : pi[m - 1];
        seq[pos++] = -v;
      }
      if (with_zero) seq[pos++] = 0;
      for (int m = 1; m <= k; ++m) seq[pos++] = (mask >> (m - 1)) & 1u ? -pi[m - 1] : pi[m - 1];
      ++hist[static_cast<std::size_t>(lis_small(seq.data(), N))];
    }
  } while (std::next_permutation(pi.begin(), pi.begin() + k));
  return finish_census(N, Group::Odd, hist);
}

TruncatedSeries g_product_series(int n, std::size_t order) {
  if (n < 0) throw InvalidArgument("G_n needs n >= 0");
  const std::size_t m = static_cast<std::size_t>(n / 2);
  if (n % 2 == 0) {
    const TruncatedSeries d = toeplitz_det_series(m, order);
    return d * d;
  }
  return toeplitz_det_series(m, order) * toeplitz_det_series(m + 1, order);
}

TruncatedSeries h_product_series(int n, std::size_t order) {
  if (n < 1) throw InvalidArgument("H_n needs n >= 1");
  if (n % 2 == 1) return g_product_series(n, order);
  const std::size_t m = static_cast<std::size_t>(n / 2);
  return toeplitz_det_series(m - 1, order) * toeplitz_det_series(m + 1, order);
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.passed; }));
}

namespace {

std::string first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  for (std::size_t j = 0; j <= order; ++j)
    if (a[j] != b[j])
      return "t^" + std::to_string(j) + ": " + a[j].get_str() + " vs " + b[j].get_str();
  return "equal through t^" + std::to_string(order);
}

IdentityCheck coefficient_check(std::string identity, int n, int N, const mpq_class& coeff,
                                std::size_t k, std::uint64_t census) {
  mpz_class f = factorial(static_cast<unsigned long>(k));
  const mpq_class scaled = coeff * mpq_class(f * f);
  IdentityCheck c;
  c.identity = std::move(identity);
  c.n = n;
  c.N = N;
  c.passed = scaled == mpq_class(to_mpz(census));
  c.detail = "series " + scaled.get_str() + ", census " + std::to_string(census);
  return c;
}

IdentityCheck numeric_check(std::string identity, int n, const Real& lhs, const Real& rhs,
                            double tol) {
  IdentityCheck c;
  c.identity = std::move(identity);
  c.n = n;
  const double rel = relative_difference(lhs, rhs).to_double();
  c.passed = rel < tol;
  c.detail = lhs.to_string(20) + " vs " + rhs.to_string(20) + " (relative " + std::to_string(rel) +
             ")";
  return c;
}

// G_n(t), H_n(t) from Toeplitz determinants at t > 0.
std::pair<Real, Real> numeric_gh(int n, const Real& t, Bits bits) {
  const int m = n / 2;
  const USequence seq = d_sequence(m + 1, t, bits);
  auto D = [&](int j) { return exp(seq.log_d(j)); };
  Real G = n % 2 == 0 ? D(m) * D(m) : D(m) * D(m + 1);
  Real H = n % 2 == 0 ? D(m - 1) * D(m + 1) : G;
  return {std::move(G), std::move(H)};
}

}  // namespace

VerifyReport verify_generating(int n_max, int N_max) {
  if (n_max < 1 || n_max > 6) throw InvalidArgument("verify_generating needs 1 <= n_max <= 6");
  if (N_max < 0 || N_max > 10) throw InvalidArgument("verify_generating needs 0 <= N_max <= 10");
  const std::size_t order = 2 * static_cast<std::size_t>(N_max);
  std::vector<PermutationCensus> sym, odd;
  for (int N = 0; N <= N_max; ++N) {
    sym.push_back(census_symmetric(N));
    odd.push_back(census_odd(N));
  }

  VerifyReport report;
  auto add = [&](IdentityCheck c) { report.checks.push_back(std::move(c)); };
  constexpr Bits bits = 128;
  const Real t("0.5", bits);

  for (int n = 1; n <= n_max; ++n) {
    const TruncatedSeries D = toeplitz_det_series(static_cast<std::size_t>(n), order);
    for (int N = 0; N <= N_max; ++N)
      add(coefficient_check("D_n generating function vs S_N census", n, N,
                            D[2 * static_cast<std::size_t>(N)], static_cast<std::size_t>(N),
                            sym[static_cast<std::size_t>(N)].count_at_most(n)));

    const TruncatedSeries G = g_product_series(n, order);
    const TruncatedSeries H = h_product_series(n, order);
    for (int k = 0; 2 * k <= N_max; ++k)
      add(coefficient_check("G_n product vs O_N census", n, 2 * k, G[2 * static_cast<std::size_t>(k)],
                            static_cast<std::size_t>(k),
                            odd[static_cast<std::size_t>(2 * k)].count_at_most(n)));
    for (int k = 0; 2 * k + 1 <= N_max; ++k)
      add(coefficient_check("H_n product vs O_N census", n, 2 * k + 1,
                            H[2 * static_cast<std::size_t>(k)], static_cast<std::size_t>(k),
                            odd[static_cast<std::size_t>(2 * k + 1)].count_at_most(n)));

    IdentityCheck parity{"D_n, G_n, H_n have only even powers", n, N_max,
                         D.only_even_powers() && G.only_even_powers() && H.only_even_powers(), ""};
    parity.detail = parity.passed ? "odd coefficients vanish" : "nonzero odd coefficient";
    add(parity);

    const TruncatedSeries dz = dhat_zero_series(static_cast<std::size_t>(n), order);
    add({"Dhat_n(0,t) series equals G_n product", n, N_max, dz == G, first_difference(dz, G)});

    const TruncatedSeries s2 = dhat_t1_second_series(static_cast<std::size_t>(n), order);
    const TruncatedSeries hr = (s2 + s2.reflected()) * mpq_class(1, 4);
    add({"second t1-derivative of Dhat_n gives H_n product", n, N_max, hr == H,
         first_difference(hr, H)});

    const auto [g_num, h_num] = numeric_gh(n, t, bits);
    add(numeric_check("Dhat_n(0,t) equals G_n at t = 0.5", n, dhat(n, Real(0L, bits), t, bits),
                      g_num, 1e-30));
    const Real h_jet = (dhat_t1_second(n, t, bits) + dhat_t1_second(n, -t, bits)) / 4L;
    add(numeric_check("second t1-derivative of Dhat_n equals H_n at t = 0.5", n, h_jet, h_num,
                      1e-30));
    if (n % 2 == 0) {
      const Real u = solve_corners(n / 2, t, bits).U_minus;
      add(numeric_check("H_n = G_n (1 - U_{n/2}^2) at t = 0.5", n, g_num * (1L - u * u), h_num,
                        1e-30));
    }
  }
  return report;
}

VerifyReport check_monotonicity(Group group, int N_max) {
  const int limit = group == Group::Symmetric ? kMaxSymmetricN : kMaxOddN;
  if (N_max < 3 || N_max > limit)
    throw InvalidArgument("check_monotonicity needs 3 <= N_max <= " + std::to_string(limit));
  std::vector<PermutationCensus> cs;
  for (int N = 0; N <= N_max; ++N)
    cs.push_back(group == Group::Symmetric ? census_symmetric(N) : census_odd(N));
  VerifyReport report;
  const std::string name = group == Group::Symmetric ? "F_{N+2} <= F_N on S_N" : "F_{N+2} <= F_N on O_N";
  for (int N = 1; N + 2 <= N_max; ++N) {
    for (int n = 1; n <= N + 2; ++n) {
      const mpq_class lo = cs[static_cast<std::size_t>(N + 2)].probability(n);
      const mpq_class hi = cs[static_cast<std::size_t>(N)].probability(n);
      report.checks.push_back({name, n, N, lo <= hi, lo.get_str() + " <= " + hi.get_str()});
    }
  }
  return report;
}

DepoissonReport depoisson_demo(int n, int k_max) {
  if (n < 1) throw InvalidArgument("depoisson_demo needs n >= 1");
  if (k_max < 1 || k_max > 6) throw InvalidArgument("depoisson_demo needs 1 <= k_max <= 6");
  DepoissonReport rep;
  rep.n = n;
  rep.monotonicity = check_monotonicity(Group::Symmetric, kMaxSymmetricN);
  const VerifyReport odd = check_monotonicity(Group::Odd, kMaxOddN);
  rep.monotonicity.checks.insert(rep.monotonicity.checks.end(), odd.checks.begin(), odd.checks.end());

  constexpr Bits bits = 128;
  for (int k = 1; k <= k_max; ++k) {
    const double spread = 4 * std::sqrt(k * std::log(static_cast<double>(k)));
    for (const auto& [label, lambda] :
         {std::pair<const char*, double>{"nu", k - spread}, {"k", static_cast<double>(k)},
          {"mu", k + spread}}) {
      PoissonRow row;
      row.k = k;
      row.point = label;
      row.lambda = lambda;
      row.defined = lambda >= 0;
      if (row.defined) {
        if (lambda == 0) {
          row.phi_even = row.phi_odd = 1;
        } else {
          const Real t = sqrt(Real(lambda, bits) / 2L);
          const auto [G, H] = numeric_gh(n, t, bits);
          const Real w = exp(-Real(lambda, bits));
          row.phi_even = (w * G).to_double();
          row.phi_odd = (w * H).to_double();
        }
      }
      rep.rows.push_back(row);
    }
  }

  std::vector<const PoissonRow*> defined;
  for (const auto& r : rep.rows)
    if (r.defined) defined.push_back(&r);
  std::stable_sort(defined.begin(), defined.end(),
                   [](const PoissonRow* a, const PoissonRow* b) { return a->lambda < b->lambda; });
  rep.phi_monotone = true;
  for (std::size_t i = 1; i < defined.size(); ++i) {
    const double slack = 1e-14;
    if (defined[i]->phi_even > defined[i - 1]->phi_even + slack ||
        defined[i]->phi_odd > defined[i - 1]->phi_odd + slack)
      rep.phi_monotone = false;
  }
  return rep;
}

}  // namespace ptw
