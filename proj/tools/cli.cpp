// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ptw/ptw.h"

namespace ptw_cli {

namespace {

constexpr long kDefaultBits = 128;

// Failure carrying the exit code to return.
struct Exit {
  int code;
  std::string message;
};

struct Common {
  std::string format;
  std::string output;
  long bits = kDefaultBits;
};

ptw_format to_format(const std::string& f) {
  if (f == "json") return PTW_FORMAT_JSON;
  if (f == "text") return PTW_FORMAT_TEXT;
  return PTW_FORMAT_CSV;
}

void check(ptw_status st) {
  if (st == PTW_OK) return;
  const int code = st == PTW_INVALID_ARGUMENT || st == PTW_OUT_OF_RANGE ? kExitUsage : kExitFailure;
  throw Exit{code, std::string(ptw_status_name(st)) + ": " + ptw_last_error()};
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::unique_ptr<char, decltype(&ptw_free)> guard(s, &ptw_free);
  return s ? std::string(s) : std::string();
}

template <class T, void (*Destroy)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Destroy(p); }
  T** out() { return &p; }
  operator const T*() const { return p; }
};

using Corners = Handle<ptw_corners, ptw_corners_destroy>;
using USeq = Handle<ptw_useq, ptw_useq_destroy>;
using Trajectory = Handle<ptw_trajectory, ptw_trajectory_destroy>;
using Pii = Handle<ptw_pii, ptw_pii_destroy>;
using Dist = Handle<ptw_dist, ptw_dist_destroy>;
using Census = Handle<ptw_census, ptw_census_destroy>;
using Report = Handle<ptw_report, ptw_report_destroy>;
using Table = Handle<ptw_table, ptw_table_destroy>;

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void add_common(CLI::App* sub, Common& c, const char* default_format) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->default_str(default_format);
  sub->add_option("--output,-o", c.output, "Write results to this file instead of stdout");
  sub->add_option("--precision", c.bits, "Working precision in bits (default: RPL_PRECISION or 128)")
      ->check(CLI::Range(64L, 1L << 20));
}

long env_precision() {
  const char* env = std::getenv("RPL_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultBits;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 64) throw Exit{kExitUsage, "RPL_PRECISION must be an integer >= 64"};
  return v;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toeplitz determinants, Painleve transcendents and longest increasing subsequences",
               "ptw"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ptw_version()));

  long default_bits = kDefaultBits;
  try {
    default_bits = env_precision();
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  }

  Common common;
  std::function<int(std::string&)> action;

  // dn
  int n = 1;
  std::string t = "1";
  int digits = 30;
  auto* dn = app.add_subcommand("dn", "D_n(t), U_n and corner quantities at one (n, t)");
  add_common(dn, common, "text");
  dn->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
  dn->add_option("--t", t, "t as a decimal literal")->required();
  dn->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 1000));
  dn->callback([&] {
    action = [&](std::string& result) {
      Corners c;
      check(ptw_corners_solve(n, t.c_str(), common.bits, c.out()));
      const ptw_format f = common.format == "json" ? PTW_FORMAT_JSON : PTW_FORMAT_TEXT;
      result = take([&] {
        char* s = nullptr;
        check(ptw_corners_format(c, f, digits, &s));
        return s;
      }());
      return kExitOk;
    };
  });

  // seq
  int n_max = 20;
  std::string method = "levinson";
  bool seq_check = false;
  auto* seq = app.add_subcommand("seq", "U_1..U_n and log D_k at fixed t");
  add_common(seq, common, "csv");
  seq->add_option("--n-max", n_max, "Largest index")->check(CLI::PositiveNumber);
  seq->add_option("--t", t, "t as a decimal literal")->required();
  seq->add_option("--method", method, "Sequence algorithm")
      ->check(CLI::IsMember({"levinson", "direct", "dpii"}))
      ->capture_default_str();
  seq->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 1000));
  seq->add_flag("--check", seq_check,
                "Compare all three algorithms and the recurrence residual; exit 1 on disagreement");
  seq->callback([&] {
    action = [&](std::string& result) {
      if (seq_check) {
        USeq a, b, c;
        check(ptw_useq_compute(n_max, t.c_str(), common.bits, PTW_USEQ_DIRECT, a.out()));
        check(ptw_useq_compute(n_max, t.c_str(), common.bits, PTW_USEQ_LEVINSON, b.out()));
        check(ptw_useq_compute(n_max, t.c_str(), common.bits, PTW_USEQ_DPII, c.out()));
        double dl = 0, dd = 0, res = 0;
        check(ptw_useq_max_relative_difference(a, b, &dl));
        check(ptw_useq_max_relative_difference(a, c, &dd));
        check(ptw_useq_max_recurrence_residual(a, &res));
        const bool ok = dl < 1e-20 && dd < 1e-20 && res < 1e-25 && ptw_useq_size(c) == n_max;
        result = "direct vs levinson max relative difference " + fmt_double(dl) +
                 "\ndirect vs recurrence max relative difference " + fmt_double(dd) +
                 "\nrecurrence residual (scaled) " + fmt_double(res) + "\n" +
                 (ok ? "agreement: pass\n" : "agreement: FAIL\n");
        return ok ? kExitOk : kExitFailure;
      }
      const std::map<std::string, ptw_useq_method> m{
          {"levinson", PTW_USEQ_LEVINSON}, {"direct", PTW_USEQ_DIRECT}, {"dpii", PTW_USEQ_DPII}};
      USeq s;
      check(ptw_useq_compute(n_max, t.c_str(), common.bits, m.at(method), s.out()));
      char* text = nullptr;
      check(ptw_useq_format(s, to_format(common.format), digits, &text));
      result = take(text);
      if (const int k = ptw_useq_first_unstable(s); k > 0)
        err << "warning: recurrence lost precision at k = " << k << '\n';
      return kExitOk;
    };
  });

  // pv / piii
  double t0 = 0.2, t1 = 3.0, tol = 1e-12;
  std::size_t samples = 101;
  std::string start = "series";
  auto trajectory_output = [&](Trajectory& tr, std::string& result) {
    if (common.format == "text") {
      double dev = 0, res = 0;
      check(ptw_trajectory_max_deviation(tr, &dev));
      check(ptw_trajectory_max_residual(tr, &res));
      result = "max |trajectory - Toeplitz| " + fmt_double(dev) +
               "\nmax residual of the Toeplitz-derived function " + fmt_double(res) + "\n";
    } else {
      char* s = nullptr;
      check(ptw_trajectory_format(tr, to_format(common.format), &s));
      result = take(s);
    }
  };
  auto* pv = app.add_subcommand("pv", "Integrate the equation for phi = 1 - U_n^2");
  add_common(pv, common, "csv");
  pv->add_option("--n", n, "Index")->required()->check(CLI::PositiveNumber);
  pv->add_option("--t0", t0, "Start (initial data from the Toeplitz corners)")->capture_default_str();
  pv->add_option("--t1", t1, "End")->capture_default_str();
  pv->add_option("--tol", tol, "Local error tolerance")->capture_default_str();
  pv->add_option("--samples", samples, "Output points")->capture_default_str();
  pv->callback([&] {
    action = [&](std::string& result) {
      Trajectory tr;
      check(ptw_pv_integrate(n, t0, t1, tol, samples, tr.out()));
      trajectory_output(tr, result);
      return kExitOk;
    };
  });
  double piii_t0 = 0.01;
  auto* piii = app.add_subcommand("piii", "Integrate the equation for W_n = U_n / U_{n-1}");
  add_common(piii, common, "csv");
  piii->add_option("--n", n, "Index (>= 2)")->required()->check(CLI::Range(2, 1 << 20));
  piii->add_option("--t0", piii_t0, "Start")->capture_default_str();
  piii->add_option("--t1", t1, "End")->capture_default_str();
  piii->add_option("--tol", tol, "Local error tolerance")->capture_default_str();
  piii->add_option("--samples", samples, "Output points")->capture_default_str();
  piii->add_option("--start", start, "Initial data: small-t series or Toeplitz corners")
      ->check(CLI::IsMember({"series", "toeplitz"}))
      ->capture_default_str();
  piii->callback([&] {
    action = [&](std::string& result) {
      Trajectory tr;
      check(ptw_piii_integrate(n, piii_t0, t1, tol, samples,
                               start == "toeplitz" ? PTW_PIII_TOEPLITZ : PTW_PIII_SERIES, tr.out()));
      trajectory_output(tr, result);
      return kExitOk;
    };
  });

  // pii / tw
  double s0 = 8, s_min = -10, s_max = 6, step = 0.005;
  auto* pii = app.add_subcommand("pii", "Painleve II solution with Airy decay, with R, E and F");
  add_common(pii, common, "csv");
  pii->add_option("--s0", s0, "Start of the downward integration")->capture_default_str();
  pii->add_option("--s-min", s_min, "End of the integration")->capture_default_str();
  pii->add_option("--tol", tol, "Local error tolerance")->capture_default_str();
  pii->add_option("--step", step, "Output spacing")->capture_default_str();
  pii->callback([&] {
    action = [&](std::string& result) {
      Pii p;
      check(ptw_pii_integrate(s0, s_min, tol, step, p.out()));
      if (common.format == "text") {
        std::ostringstream os;
        os << "s q(s) F(s) q(s)/Ai(s)\n";
        for (double s : {-8.0, -4.0, -2.0, 0.0, 2.0, 4.0, 6.0}) {
          if (s < s_min || s > s0) continue;
          double q = 0, F = 0;
          check(ptw_pii_q(p, s, &q));
          check(ptw_pii_F(p, s, &F));
          os << fmt_double(s) << ' ' << fmt_double(q) << ' ' << fmt_double(F);
          double ai = 0, dai = 0;
          if (s >= 4 && ptw_airy(s, &ai, &dai) == PTW_OK) os << ' ' << fmt_double(q / ai);
          os << '\n';
        }
        result = os.str();
      } else {
        char* s = nullptr;
        check(ptw_pii_format(p, to_format(common.format), &s));
        result = take(s);
      }
      return kExitOk;
    };
  });
  bool stats = false;
  std::vector<double> quantiles;
  auto* tw = app.add_subcommand("tw", "Tracy-Widom F and F_O = F^2: densities, moments, quantiles");
  add_common(tw, common, "csv");
  tw->add_option("--s0", s0, "Start of the Painleve II integration")->capture_default_str();
  tw->add_option("--s-min", s_min, "Lower end of the grid")->capture_default_str();
  tw->add_option("--s-max", s_max, "Upper end of the grid")->capture_default_str();
  tw->add_option("--step", step, "Grid spacing")->capture_default_str();
  tw->add_flag("--stats", stats, "Print the moment table instead of the grid");
  tw->add_option("--quantile", quantiles, "Also print the quantile of F and F_O at p")
      ->delimiter(',');
  tw->callback([&] {
    action = [&](std::string& result) {
      Pii p;
      check(ptw_pii_integrate(s0, s_min, 1e-12, step, p.out()));
      Dist d;
      check(ptw_dist_build(p, s_min, s_max, d.out()));
      if (stats) {
        if (common.format == "json") {
          ptw_stats a{}, b{};
          check(ptw_dist_stats(d, 0, &a));
          check(ptw_dist_stats(d, 1, &b));
          auto one = [](const ptw_stats& s) {
            return "{\"mean\": " + fmt_double(s.mean) + ", \"stddev\": " + fmt_double(s.stddev) +
                   ", \"skewness\": " + fmt_double(s.skewness) + ", \"excess_kurtosis\": " +
                   fmt_double(s.excess_kurtosis) + ", \"mass\": " + fmt_double(s.mass) + "}";
          };
          result = "{\"F\": " + one(a) + ", \"F_O\": " + one(b) + "}\n";
        } else {
          char* s = nullptr;
          check(ptw_dist_format(d, PTW_FORMAT_TEXT, &s));
          result = take(s);
        }
      } else {
        char* s = nullptr;
        check(ptw_dist_format(d, common.format == "json" ? PTW_FORMAT_JSON : PTW_FORMAT_CSV, &s));
        result = take(s);
      }
      for (double q : quantiles) {
        double a = 0, b = 0;
        check(ptw_dist_quantile(d, 0, q, &a));
        check(ptw_dist_quantile(d, 1, q, &b));
        err << "quantile p=" << fmt_double(q) << " F: " << fmt_double(a) << " F_O: " << fmt_double(b)
            << '\n';
      }
      return kExitOk;
    };
  });

  // census
  std::string group = "sym";
  int N_max = 8, N_min = 1;
  auto* census = app.add_subcommand("census", "Exhaustive LIS census of S_N or O_N");
  add_common(census, common, "csv");
  census->add_option("--group", group, "Permutation group")
      ->check(CLI::IsMember({"sym", "odd"}))
      ->capture_default_str();
  census->add_option("--N-min", N_min, "Smallest N")->capture_default_str();
  census->add_option("--N-max", N_max, "Largest N (11 for sym, 13 for odd)")->capture_default_str();
  census->callback([&] {
    action = [&](std::string& result) {
      Census c;
      check(ptw_census_compute(group == "odd" ? PTW_GROUP_ODD : PTW_GROUP_SYMMETRIC, N_min, N_max,
                               c.out()));
      char* s = nullptr;
      check(ptw_census_format(c, common.format == "json" ? PTW_FORMAT_JSON : PTW_FORMAT_CSV, &s));
      result = take(s);
      return kExitOk;
    };
  });

  // verify / depoisson
  int verify_n_max = 4, verify_N_max = 8;
  bool monotone = false;
  auto report_output = [&](std::vector<Report>& reports, std::string& result) {
    std::size_t failures = 0;
    for (auto& r : reports) {
      char* s = nullptr;
      check(ptw_report_format(r, to_format(common.format), &s));
      result += take(s);
      failures += ptw_report_failures(r);
    }
    return failures == 0 ? kExitOk : kExitFailure;
  };
  auto* verify = app.add_subcommand("verify", "Exact generating-function identities against censuses");
  add_common(verify, common, "text");
  verify->add_option("--n-max", verify_n_max, "Largest n (<= 6)")->capture_default_str();
  verify->add_option("--N-max", verify_N_max, "Largest N (<= 10)")->capture_default_str();
  verify->add_flag("--monotone", monotone, "Also check F_{N+2} <= F_N on S_N (N <= 11) and O_N (N <= 13)");
  verify->callback([&] {
    action = [&](std::string& result) {
      std::vector<Report> reports(monotone ? 3 : 1);
      check(ptw_verify_generating(verify_n_max, verify_N_max, reports[0].out()));
      if (monotone) {
        check(ptw_verify_monotonicity(PTW_GROUP_SYMMETRIC, 11, reports[1].out()));
        check(ptw_verify_monotonicity(PTW_GROUP_ODD, 13, reports[2].out()));
      }
      return report_output(reports, result);
    };
  });
  int k_max = 6;
  auto* depo = app.add_subcommand("depoisson", "Monotonicity in N and Poissonized probabilities");
  add_common(depo, common, "text");
  depo->add_option("--n", n, "Bound on the LIS length")->required()->check(CLI::PositiveNumber);
  depo->add_option("--k-max", k_max, "Largest k (<= 6)")->capture_default_str();
  depo->callback([&] {
    action = [&](std::string& result) {
      std::vector<Report> reports(1);
      check(ptw_depoisson(n, k_max, reports[0].out()));
      return report_output(reports, result);
    };
  });

  // experiments
  std::vector<double> s_list{-2, -1, 0, 1}, t_list{20, 40, 60};
  std::string route = "G";
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--s", s_list, "Comma-separated s values (use --s=-2,-1,...)")->delimiter(',');
    sub->add_option("--t", t_list, "Comma-separated t values")->delimiter(',');
    sub->add_option("--s0", s0, "Painleve II start for the limit values")->capture_default_str();
  };
  auto run_experiment = [&](ptw_experiment kind, std::string& result) {
    double lo = -10;
    for (double s : s_list) lo = std::min(lo, s - 1);
    Pii p;
    check(ptw_pii_integrate(s0, lo, 1e-12, 0.005, p.out()));
    Table tb;
    check(ptw_experiment_run(kind, s_list.data(), s_list.size(), t_list.data(), t_list.size(),
                             common.bits, p, tb.out()));
    char* s = nullptr;
    check(ptw_table_format(tb, common.format == "json" ? PTW_FORMAT_JSON : PTW_FORMAT_CSV, &s));
    result = take(s);
    return kExitOk;
  };
  auto* bdj = app.add_subcommand("bdj", "e^(-t^2) D_n(t) with n = 2t + s t^(1/3) against F(s)");
  add_common(bdj, common, "csv");
  add_grid(bdj);
  bdj->callback([&] {
    action = [&](std::string& result) { return run_experiment(PTW_EXPERIMENT_BDJ, result); };
  });
  auto* oddlim = app.add_subcommand("oddlim", "Odd-permutation generating functions against F(s)^2");
  add_common(oddlim, common, "csv");
  add_grid(oddlim);
  oddlim->add_option("--route", route, "Which n and product to use")
      ->check(CLI::IsMember({"G", "G_even", "G_odd", "H_even"}))
      ->capture_default_str();
  oddlim->callback([&] {
    action = [&](std::string& result) {
      const std::map<std::string, ptw_experiment> m{{"G", PTW_EXPERIMENT_ODD_G},
                                                    {"G_even", PTW_EXPERIMENT_ODD_G_EVEN},
                                                    {"G_odd", PTW_EXPERIMENT_ODD_G_ODD},
                                                    {"H_even", PTW_EXPERIMENT_ODD_H_EVEN}};
      return run_experiment(m.at(route), result);
    };
  });
  auto* uscale = app.add_subcommand("uscale", "|U_n| t^(1/3) against q(s) near n = 2t + s t^(1/3)");
  add_common(uscale, common, "csv");
  add_grid(uscale);
  uscale->callback([&] {
    action = [&](std::string& result) { return run_experiment(PTW_EXPERIMENT_USCALE, result); };
  });

  for (CLI::App* sub : app.get_subcommands({})) sub->get_option("--precision")->default_val(default_bits);
  common.bits = default_bits;

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << ptw_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun 'ptw --help' for usage\n";
    return kExitUsage;
  }
  if (common.format.empty()) {
    for (CLI::App* sub : app.get_subcommands()) common.format = sub->get_option("--format")->get_default_str();
  }

  try {
    std::string result;
    const int code = action(result);
    if (common.output.empty()) {
      out << result;
    } else {
      std::ofstream f(common.output, std::ios::binary);
      if (!f) throw Exit{kExitFailure, "cannot open " + common.output};
      f << result;
      if (!f) throw Exit{kExitFailure, "write to " + common.output + " failed"};
    }
    return code;
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  }
}

}  // namespace ptw_cli
