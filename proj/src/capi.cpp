// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptw/ptw.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ptw/error.hpp"
#include "ptw/experiments.hpp"
#include "ptw/io.hpp"
#include "ptw/painleve.hpp"
#include "ptw/perm.hpp"
#include "ptw/toeplitz.hpp"
#include "ptw/tracy_widom.hpp"

struct ptw_corners {
  ptw::CornerData data;
};

struct ptw_useq {
  ptw_useq_method method;
  ptw::Real t;
  std::optional<ptw::USequence> seq;  // Levinson and direct
  std::optional<ptw::DpiiResult> dpii;
  const std::vector<ptw::Real>& U() const { return seq ? seq->U : dpii->U; }
};

struct ptw_trajectory {
  ptw::PainleveTrajectory tr;
  std::vector<double> reference;
};

struct ptw_pii {
  ptw::PainleveIISolution sol;
};

struct ptw_dist {
  ptw::DistGrid F, FO;
};

struct ptw_census {
  std::vector<ptw::PermutationCensus> list;
};

struct ptw_report {
  std::variant<ptw::VerifyReport, ptw::DepoissonReport> value;
};

struct ptw_table {
  std::variant<std::vector<ptw::LimitRecord>, std::vector<ptw::UScalingRecord>> rows;
};

namespace {

thread_local std::string g_last_error;

ptw_status fail(ptw_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class Fn>
ptw_status guard(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return PTW_OK;
  } catch (const ptw::InvalidArgument& e) {
    return fail(PTW_INVALID_ARGUMENT, e.what());
  } catch (const ptw::PrecisionExhausted& e) {
    return fail(PTW_PRECISION_EXHAUSTED, e.what());
  } catch (const ptw::IntegrationFailure& e) {
    return fail(PTW_INTEGRATION_FAILURE, e.what());
  } catch (const ptw::OutOfRange& e) {
    return fail(PTW_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PTW_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(PTW_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(PTW_INTERNAL_ERROR, "unknown exception");
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw ptw::InvalidArgument(what);
}

template <class T>
void require_ptr(const T* p, const char* name) {
  if (p == nullptr) throw ptw::InvalidArgument(std::string(name) + " is NULL");
}

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ptw::Real parse_t(const char* t, long bits) {
  require(t != nullptr, "t is NULL");
  require(bits >= ptw::kMinBits, "precision must be at least 64 bits");
  return ptw::Real(std::string_view(t), bits);
}

const ptw::DistGrid& pick(const ptw_dist* d, int odd) { return odd ? d->FO : d->F; }

}  // namespace

extern "C" {

const char* ptw_version(void) { return "0.1.0"; }

const char* ptw_last_error(void) { return g_last_error.c_str(); }

const char* ptw_status_name(ptw_status status) {
  switch (status) {
    case PTW_OK: return "ok";
    case PTW_INVALID_ARGUMENT: return "invalid argument";
    case PTW_PRECISION_EXHAUSTED: return "precision exhausted";
    case PTW_INTEGRATION_FAILURE: return "integration failure";
    case PTW_OUT_OF_RANGE: return "out of range";
    case PTW_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void ptw_free(void* p) { std::free(p); }

// ---- corners

ptw_status ptw_corners_solve(int n, const char* t, long bits, ptw_corners** out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = nullptr;
    const ptw::Real tr = parse_t(t, bits);
    *out = new ptw_corners{ptw::solve_corners(n, tr, bits)};
  });
}

ptw_status ptw_corners_u(const ptw_corners* c, double* U_n) {
  return guard([&] {
    require_ptr(c, "corners");
    require_ptr(U_n, "out");
    *U_n = c->data.U_minus.to_double();
  });
}

ptw_status ptw_corners_log_det(const ptw_corners* c, double* log_d) {
  return guard([&] {
    require_ptr(c, "corners");
    require_ptr(log_d, "out");
    *log_d = c->data.log_det.to_double();
  });
}

ptw_status ptw_corners_format(const ptw_corners* c, ptw_format fmt, int digits, char** out) {
  return guard([&] {
    require_ptr(c, "corners");
    require_ptr(out, "out");
    require(digits >= 1 && digits <= 1000, "digits must be in [1, 1000]");
    require(fmt == PTW_FORMAT_TEXT || fmt == PTW_FORMAT_JSON, "corners support text or json");
    *out = to_c_string(fmt == PTW_FORMAT_JSON ? ptw::io::corners_json(c->data, digits)
                                              : ptw::io::corners_text(c->data, digits));
  });
}

void ptw_corners_destroy(ptw_corners* c) { delete c; }

// ---- U sequences

ptw_status ptw_useq_compute(int n_max, const char* t, long bits, ptw_useq_method method,
                            ptw_useq** out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = nullptr;
    require(n_max >= 1, "n_max must be >= 1");
    const ptw::Real tr = parse_t(t, bits);
    auto s = std::make_unique<ptw_useq>(ptw_useq{method, tr, std::nullopt, std::nullopt});
    switch (method) {
      case PTW_USEQ_LEVINSON: s->seq = ptw::d_sequence(n_max, tr, bits); break;
      case PTW_USEQ_DIRECT: {
        ptw::USequence seq;
        seq.t = tr;
        seq.log_det.push_back(ptw::Real(0L, bits));
        for (int k = 1; k <= n_max; ++k) {
          ptw::CornerData c = ptw::solve_corners(k, tr, bits);
          seq.U.push_back(std::move(c.U_minus));
          seq.log_det.push_back(std::move(c.log_det));
        }
        s->seq = std::move(seq);
        break;
      }
      case PTW_USEQ_DPII: s->dpii = ptw::dpii_sequence(n_max, tr, bits); break;
      default: throw ptw::InvalidArgument("unknown sequence method");
    }
    *out = s.release();
  });
}

int ptw_useq_size(const ptw_useq* s) { return s ? static_cast<int>(s->U().size()) : 0; }

ptw_status ptw_useq_max_relative_difference(const ptw_useq* a, const ptw_useq* b, double* out) {
  return guard([&] {
    require_ptr(a, "a");
    require_ptr(b, "b");
    require_ptr(out, "out");
    const std::size_t n = std::min(a->U().size(), b->U().size());
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
      worst = std::max(worst, ptw::relative_difference(a->U()[i], b->U()[i]).to_double());
    *out = worst;
  });
}

ptw_status ptw_useq_max_recurrence_residual(const ptw_useq* s, double* out) {
  return guard([&] {
    require_ptr(s, "sequence");
    require_ptr(out, "out");
    const auto& U = s->U();
    double worst = 0;
    for (std::size_t k = 2; k + 1 <= U.size(); ++k) {
      const ptw::Real r = ptw::dpii_residual(static_cast<int>(k), s->t, U[k - 2], U[k - 1], U[k]);
      const ptw::Real scale = abs(U[k - 1] * static_cast<long>(k) / s->t);
      worst = std::max(worst, (abs(r) / scale).to_double());
    }
    *out = worst;
  });
}

int ptw_useq_first_unstable(const ptw_useq* s) {
  return s && s->dpii && s->dpii->first_unstable ? *s->dpii->first_unstable : 0;
}

ptw_status ptw_useq_format(const ptw_useq* s, ptw_format fmt, int digits, char** out) {
  return guard([&] {
    require_ptr(s, "sequence");
    require_ptr(out, "out");
    require(digits >= 1 && digits <= 1000, "digits must be in [1, 1000]");
    const bool json = fmt == PTW_FORMAT_JSON;
    if (s->seq)
      *out = to_c_string(json ? ptw::io::useq_json(*s->seq, digits) : ptw::io::useq_csv(*s->seq, digits));
    else
      *out = to_c_string(json ? ptw::io::dpii_json(*s->dpii, digits) : ptw::io::dpii_csv(*s->dpii, digits));
  });
}

void ptw_useq_destroy(ptw_useq* s) { delete s; }

// ---- trajectories

ptw_status ptw_pv_integrate(int n, double t0, double t1, double tol, size_t samples,
                            ptw_trajectory** out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = nullptr;
    auto tr = ptw::integrate_pv(n, t0, t1, tol, samples);
    auto ref = ptw::toeplitz_reference(tr);
    *out = new ptw_trajectory{std::move(tr), std::move(ref)};
  });
}

ptw_status ptw_piii_integrate(int n, double t0, double t1, double tol, size_t samples,
                              ptw_piii_start start, ptw_trajectory** out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = nullptr;
    auto tr = ptw::integrate_piii(n, t0, t1, tol, samples,
                                  start == PTW_PIII_TOEPLITZ ? ptw::PiiiStart::Toeplitz
                                                             : ptw::PiiiStart::Series);
    auto ref = ptw::toeplitz_reference(tr);
    *out = new ptw_trajectory{std::move(tr), std::move(ref)};
  });
}

ptw_status ptw_trajectory_max_deviation(const ptw_trajectory* tr, double* out) {
  return guard([&] {
    require_ptr(tr, "trajectory");
    require_ptr(out, "out");
    double worst = 0;
    for (std::size_t i = 0; i < tr->reference.size(); ++i)
      worst = std::max(worst, std::fabs(tr->tr.value[i] - tr->reference[i]));
    *out = worst;
  });
}

ptw_status ptw_trajectory_max_residual(const ptw_trajectory* tr, double* out) {
  return guard([&] {
    require_ptr(tr, "trajectory");
    require_ptr(out, "out");
    double worst = 0;
    const bool pv = tr->tr.kind == ptw::PainleveTrajectory::Kind::PhiV;
    for (double t : tr->tr.t)
      worst = std::max(worst, pv ? ptw::toeplitz_pv_residual(tr->tr.n, t)
                                 : ptw::toeplitz_piii_residual(tr->tr.n, t));
    *out = worst;
  });
}

ptw_status ptw_trajectory_format(const ptw_trajectory* tr, ptw_format fmt, char** out) {
  return guard([&] {
    require_ptr(tr, "trajectory");
    require_ptr(out, "out");
    *out = to_c_string(fmt == PTW_FORMAT_JSON ? ptw::io::trajectory_json(tr->tr, tr->reference)
                                              : ptw::io::trajectory_csv(tr->tr, tr->reference));
  });
}

void ptw_trajectory_destroy(ptw_trajectory* tr) { delete tr; }

ptw_status ptw_pv_residual(int n, double t, double* out) {
  return guard([&] {
    require_ptr(out, "out");
    require(n >= 1, "n must be >= 1");
    *out = ptw::toeplitz_pv_residual(n, t);
  });
}

ptw_status ptw_piii_residual(int n, double t, double* out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = ptw::toeplitz_piii_residual(n, t);
  });
}

ptw_status ptw_derivative_residuals(int n, double t, double* out) {
  return guard([&] {
    require_ptr(out, "out");
    const auto r = ptw::derivative_identity_residuals(n, t);
    std::copy(r.begin(), r.end(), out);
  });
}

// ---- Painleve II and distributions

ptw_status ptw_airy(double s, double* ai, double* dai) {
  return guard([&] {
    require_ptr(ai, "ai");
    require_ptr(dai, "dai");
    const auto v = ptw::airy_ai(s);
    *ai = v.ai;
    *dai = v.dai;
  });
}

ptw_status ptw_pii_integrate(double s0, double s_min, double tol, double step, ptw_pii** out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = nullptr;
    *out = new ptw_pii{ptw::integrate_pii(s0, s_min, tol, step)};
  });
}

ptw_status ptw_pii_q(const ptw_pii* p, double s, double* q) {
  return guard([&] {
    require_ptr(p, "solution");
    require_ptr(q, "out");
    *q = p->sol.q_at(s);
  });
}

ptw_status ptw_pii_F(const ptw_pii* p, double s, double* F) {
  return guard([&] {
    require_ptr(p, "solution");
    require_ptr(F, "out");
    *F = p->sol.F_at(s);
  });
}

ptw_status ptw_pii_format(const ptw_pii* p, ptw_format fmt, char** out) {
  return guard([&] {
    require_ptr(p, "solution");
    require_ptr(out, "out");
    *out = to_c_string(fmt == PTW_FORMAT_JSON ? ptw::io::pii_json(p->sol) : ptw::io::pii_csv(p->sol));
  });
}

void ptw_pii_destroy(ptw_pii* p) { delete p; }

ptw_status ptw_dist_build(const ptw_pii* p, double s_lo, double s_hi, ptw_dist** out) {
  return guard([&] {
    require_ptr(p, "solution");
    require_ptr(out, "out");
    *out = nullptr;
    require(s_lo < s_hi, "clip window needs s_lo < s_hi");
    const std::pair<double, double> clip{s_lo, s_hi};
    *out = new ptw_dist{ptw::build_dist(p->sol, ptw::Distribution::F, clip),
                        ptw::build_dist(p->sol, ptw::Distribution::FO, clip)};
  });
}

ptw_status ptw_dist_stats(const ptw_dist* d, int odd, ptw_stats* out) {
  return guard([&] {
    require_ptr(d, "distribution");
    require_ptr(out, "out");
    const ptw::DistStats s = ptw::moments(pick(d, odd));
    *out = ptw_stats{s.mean, s.stddev, s.skewness, s.excess_kurtosis, s.mass};
  });
}

ptw_status ptw_dist_quantile(const ptw_dist* d, int odd, double prob, double* out) {
  return guard([&] {
    require_ptr(d, "distribution");
    require_ptr(out, "out");
    *out = ptw::quantile(pick(d, odd), prob);
  });
}

ptw_status ptw_dist_cdf(const ptw_dist* d, int odd, double s, double* out) {
  return guard([&] {
    require_ptr(d, "distribution");
    require_ptr(out, "out");
    *out = pick(d, odd).cdf(s);
  });
}

ptw_status ptw_dist_format(const ptw_dist* d, ptw_format fmt, char** out) {
  return guard([&] {
    require_ptr(d, "distribution");
    require_ptr(out, "out");
    switch (fmt) {
      case PTW_FORMAT_CSV: *out = to_c_string(ptw::io::dist_csv(d->F, d->FO)); break;
      case PTW_FORMAT_JSON: *out = to_c_string(ptw::io::dist_json(d->F, d->FO)); break;
      case PTW_FORMAT_TEXT:
        *out = to_c_string(ptw::io::stats_text(ptw::moments(d->F), ptw::moments(d->FO)));
        break;
      default: throw ptw::InvalidArgument("unknown format");
    }
  });
}

void ptw_dist_destroy(ptw_dist* d) { delete d; }

// ---- censuses and reports

ptw_status ptw_census_compute(ptw_group group, int N_min, int N_max, ptw_census** out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = nullptr;
    require(N_min >= 0 && N_min <= N_max, "need 0 <= N_min <= N_max");
    auto c = std::make_unique<ptw_census>();
    for (int N = N_min; N <= N_max; ++N)
      c->list.push_back(group == PTW_GROUP_ODD ? ptw::census_odd(N) : ptw::census_symmetric(N));
    *out = c.release();
  });
}

ptw_status ptw_census_count(const ptw_census* c, int N, int n, unsigned long long* out) {
  return guard([&] {
    require_ptr(c, "census");
    require_ptr(out, "out");
    for (const auto& cs : c->list)
      if (cs.N == N) {
        *out = cs.count_at_most(n);
        return;
      }
    throw ptw::OutOfRange("N = " + std::to_string(N) + " not in this census");
  });
}

ptw_status ptw_census_format(const ptw_census* c, ptw_format fmt, char** out) {
  return guard([&] {
    require_ptr(c, "census");
    require_ptr(out, "out");
    *out = to_c_string(fmt == PTW_FORMAT_JSON ? ptw::io::census_json(c->list)
                                              : ptw::io::census_csv(c->list));
  });
}

void ptw_census_destroy(ptw_census* c) { delete c; }

ptw_status ptw_verify_generating(int n_max, int N_max, ptw_report** out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = nullptr;
    *out = new ptw_report{ptw::verify_generating(n_max, N_max)};
  });
}

ptw_status ptw_verify_monotonicity(ptw_group group, int N_max, ptw_report** out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = nullptr;
    *out = new ptw_report{ptw::check_monotonicity(
        group == PTW_GROUP_ODD ? ptw::Group::Odd : ptw::Group::Symmetric, N_max)};
  });
}

ptw_status ptw_depoisson(int n, int k_max, ptw_report** out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = nullptr;
    *out = new ptw_report{ptw::depoisson_demo(n, k_max)};
  });
}

size_t ptw_report_checks(const ptw_report* r) {
  if (r == nullptr) return 0;
  if (const auto* v = std::get_if<ptw::VerifyReport>(&r->value)) return v->checks.size();
  return std::get<ptw::DepoissonReport>(r->value).monotonicity.checks.size() + 1;
}

size_t ptw_report_failures(const ptw_report* r) {
  if (r == nullptr) return 0;
  if (const auto* v = std::get_if<ptw::VerifyReport>(&r->value)) return v->failures();
  const auto& d = std::get<ptw::DepoissonReport>(r->value);
  return d.monotonicity.failures() + (d.phi_monotone ? 0 : 1);
}

ptw_status ptw_report_format(const ptw_report* r, ptw_format fmt, char** out) {
  return guard([&] {
    require_ptr(r, "report");
    require_ptr(out, "out");
    if (const auto* v = std::get_if<ptw::VerifyReport>(&r->value)) {
      if (fmt == PTW_FORMAT_JSON) {
        *out = to_c_string(ptw::io::report_json(*v));
      } else if (fmt == PTW_FORMAT_CSV) {
        *out = to_c_string(ptw::io::report_csv(*v));
      } else {
        std::string text;
        for (const auto& c : v->checks)
          if (!c.passed)
            text += "FAIL " + c.identity + " (n=" + std::to_string(c.n) + ", N=" +
                    std::to_string(c.N) + "): " + c.detail + "\n";
        text += std::to_string(v->checks.size()) + " checks, " + std::to_string(v->failures()) +
                " failures\n";
        *out = to_c_string(text);
      }
      return;
    }
    const auto& d = std::get<ptw::DepoissonReport>(r->value);
    switch (fmt) {
      case PTW_FORMAT_JSON: *out = to_c_string(ptw::io::depoisson_json(d)); break;
      case PTW_FORMAT_CSV: *out = to_c_string(ptw::io::report_csv(d.monotonicity)); break;
      default: *out = to_c_string(ptw::io::depoisson_text(d)); break;
    }
  });
}

void ptw_report_destroy(ptw_report* r) { delete r; }

// ---- experiments

ptw_status ptw_experiment_run(ptw_experiment kind, const double* s, size_t ns, const double* t,
                              size_t nt, long bits, const ptw_pii* p, ptw_table** out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = nullptr;
    require_ptr(p, "solution");
    require(s != nullptr && t != nullptr, "grids are NULL");
    require(bits >= ptw::kMinBits, "precision must be at least 64 bits");
    const std::vector<double> sv(s, s + ns), tv(t, t + nt);
    auto tb = std::make_unique<ptw_table>();
    switch (kind) {
      case PTW_EXPERIMENT_BDJ: tb->rows = ptw::bdj_table(sv, tv, bits, p->sol); break;
      case PTW_EXPERIMENT_ODD_G:
        tb->rows = ptw::odd_limit_table(sv, tv, bits, p->sol, ptw::OddRoute::G);
        break;
      case PTW_EXPERIMENT_ODD_G_EVEN:
        tb->rows = ptw::odd_limit_table(sv, tv, bits, p->sol, ptw::OddRoute::GEven);
        break;
      case PTW_EXPERIMENT_ODD_G_ODD:
        tb->rows = ptw::odd_limit_table(sv, tv, bits, p->sol, ptw::OddRoute::GOdd);
        break;
      case PTW_EXPERIMENT_ODD_H_EVEN:
        tb->rows = ptw::odd_limit_table(sv, tv, bits, p->sol, ptw::OddRoute::HEven);
        break;
      case PTW_EXPERIMENT_USCALE: tb->rows = ptw::u_scaling_table(sv, tv, bits, p->sol); break;
      default: throw ptw::InvalidArgument("unknown experiment");
    }
    *out = tb.release();
  });
}

size_t ptw_table_rows(const ptw_table* tb) {
  if (tb == nullptr) return 0;
  return std::visit([](const auto& v) { return v.size(); }, tb->rows);
}

ptw_status ptw_table_value(const ptw_table* tb, size_t i, double* out) {
  return guard([&] {
    require_ptr(tb, "table");
    require_ptr(out, "out");
    if (i >= ptw_table_rows(tb)) throw ptw::OutOfRange("row index past the end of the table");
    if (const auto* v = std::get_if<std::vector<ptw::LimitRecord>>(&tb->rows))
      *out = (*v)[i].abs_error;
    else
      *out = std::get<std::vector<ptw::UScalingRecord>>(tb->rows)[i].ratio;
  });
}

ptw_status ptw_table_format(const ptw_table* tb, ptw_format fmt, char** out) {
  return guard([&] {
    require_ptr(tb, "table");
    require_ptr(out, "out");
    const bool json = fmt == PTW_FORMAT_JSON;
    if (const auto* v = std::get_if<std::vector<ptw::LimitRecord>>(&tb->rows))
      *out = to_c_string(json ? ptw::io::limit_json(*v) : ptw::io::limit_csv(*v));
    else {
      const auto& u = std::get<std::vector<ptw::UScalingRecord>>(tb->rows);
      *out = to_c_string(json ? ptw::io::uscale_json(u) : ptw::io::uscale_csv(u));
    }
  });
}

void ptw_table_destroy(ptw_table* tb) { delete tb; }

}  // extern "C"
