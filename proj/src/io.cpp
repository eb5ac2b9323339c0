// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptw/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "ptw/error.hpp"

namespace ptw::io {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void check_same_grid(const DistGrid& F, const DistGrid& FO) {
  if (F.s != FO.s) throw InvalidArgument("F and F_O grids differ");
}

}  // namespace

std::string dist_csv(const DistGrid& F, const DistGrid& FO) {
  check_same_grid(F, FO);
  std::ostringstream os;
  os << "s,F,f,F_O,f_O\n";
  for (std::size_t i = 0; i < F.size(); ++i)
    os << format_double(F.s[i]) << ',' << format_double(F.F[i]) << ','
       << format_double(F.density[i]) << ',' << format_double(FO.F[i]) << ','
       << format_double(FO.density[i]) << '\n';
  return os.str();
}

std::string dist_json(const DistGrid& F, const DistGrid& FO) {
  check_same_grid(F, FO);
  json rows = json::array();
  for (std::size_t i = 0; i < F.size(); ++i)
    rows.push_back({{"s", F.s[i]}, {"F", F.F[i]}, {"f", F.density[i]}, {"F_O", FO.F[i]},
                    {"f_O", FO.density[i]}});
  return rows.dump(2) + "\n";
}

std::string stats_json(const DistStats& F, const DistStats& FO) {
  auto one = [](const DistStats& s) {
    return json{{"mean", s.mean},
                {"stddev", s.stddev},
                {"skewness", s.skewness},
                {"excess_kurtosis", s.excess_kurtosis},
                {"mass", s.mass}};
  };
  return json{{"F", one(F)}, {"F_O", one(FO)}}.dump(2) + "\n";
}

std::string census_csv(const std::vector<PermutationCensus>& censuses) {
  std::ostringstream os;
  os << "N,n,count,probability_numerator,probability_denominator\n";
  for (const auto& c : censuses)
    for (int n = 1; n <= c.N; ++n) {
      const mpq_class p = c.probability(n);
      os << c.N << ',' << n << ',' << c.count_at_most(n) << ',' << p.get_num().get_str() << ','
         << p.get_den().get_str() << '\n';
    }
  return os.str();
}

std::string census_json(const std::vector<PermutationCensus>& censuses) {
  json rows = json::array();
  for (const auto& c : censuses)
    for (int n = 1; n <= c.N; ++n) {
      const mpq_class p = c.probability(n);
      rows.push_back({{"group", c.group == Group::Symmetric ? "symmetric" : "odd"},
                      {"N", c.N},
                      {"n", n},
                      {"count", c.count_at_most(n)},
                      {"probability_numerator", p.get_num().get_str()},
                      {"probability_denominator", p.get_den().get_str()}});
    }
  return rows.dump(2) + "\n";
}

std::string limit_csv(const std::vector<LimitRecord>& records) {
  std::ostringstream os;
  os << "s,t,n,finite_value,limit_value,abs_error\n";
  for (const auto& r : records)
    os << format_double(r.s) << ',' << format_double(r.t) << ',' << r.n << ','
       << format_double(r.finite_value) << ',' << format_double(r.limit_value) << ','
       << format_double(r.abs_error) << '\n';
  return os.str();
}

std::string limit_json(const std::vector<LimitRecord>& records) {
  json rows = json::array();
  for (const auto& r : records) {
    json j{{"s", r.s},
           {"t", r.t},
           {"n", r.n},
           {"finite_value", r.finite_value},
           {"limit_value", r.limit_value},
           {"abs_error", r.abs_error},
           {"route", r.route}};
    if (r.u_half) j["u_half"] = *r.u_half;
    rows.push_back(j);
  }
  return rows.dump(2) + "\n";
}

std::string uscale_csv(const std::vector<UScalingRecord>& records) {
  std::ostringstream os;
  os << "s,t,n,U_n,U_n1,q,ratio,alternating\n";
  for (const auto& r : records)
    os << format_double(r.s) << ',' << format_double(r.t) << ',' << r.n << ','
       << format_double(r.U_n) << ',' << format_double(r.U_next) << ',' << format_double(r.q)
       << ',' << format_double(r.ratio) << ',' << (r.alternating ? 1 : 0) << '\n';
  return os.str();
}

std::string uscale_json(const std::vector<UScalingRecord>& records) {
  json rows = json::array();
  for (const auto& r : records)
    rows.push_back({{"s", r.s},
                    {"t", r.t},
                    {"n", r.n},
                    {"U_n", r.U_n},
                    {"U_n1", r.U_next},
                    {"q", r.q},
                    {"ratio", r.ratio},
                    {"alternating", r.alternating}});
  return rows.dump(2) + "\n";
}

std::string report_csv(const VerifyReport& report) {
  std::ostringstream os;
  os << "identity,n,N,passed,detail\n";
  for (const auto& c : report.checks)
    os << csv_quote(c.identity) << ',' << c.n << ',' << c.N << ',' << (c.passed ? "true" : "false") << ','
       << csv_quote(c.detail) << '\n';
  return os.str();
}

std::string report_json(const VerifyReport& report) {
  json rows = json::array();
  for (const auto& c : report.checks)
    rows.push_back(
        {{"identity", c.identity}, {"n", c.n}, {"N", c.N}, {"passed", c.passed}, {"detail", c.detail}});
  return json{{"failures", report.failures()}, {"checks", rows}}.dump(2) + "\n";
}

namespace {

json corner_fields(const CornerData& c, int digits) {
  return json{{"n", c.n},
              {"t", c.t.to_string(digits)},
              {"D_n", exp(c.log_det).to_string(digits)},
              {"log_D_n", c.log_det.to_string(digits)},
              {"U_n", c.U_minus.to_string(digits)},
              {"U_plus", c.U_plus.to_string(digits)},
              {"V_plus", c.V_plus.to_string(digits)},
              {"V_minus", c.V_minus.to_string(digits)}};
}

}  // namespace

std::string corners_text(const CornerData& c, int digits) {
  const json j = corner_fields(c, digits);
  std::ostringstream os;
  for (const char* key : {"n", "t", "D_n", "log_D_n", "U_n", "U_plus", "V_plus", "V_minus"}) {
    const json& v = j.at(key);
    os << key << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  return os.str();
}

std::string corners_json(const CornerData& c, int digits) {
  return corner_fields(c, digits).dump(2) + "\n";
}

std::string useq_csv(const USequence& seq, int digits) {
  std::ostringstream os;
  os << "k,U_k,log_D_k\n";
  for (int k = 1; k <= seq.n_max(); ++k)
    os << k << ',' << seq.u(k).to_string(digits) << ',' << seq.log_d(k).to_string(digits) << '\n';
  return os.str();
}

std::string useq_json(const USequence& seq, int digits) {
  json rows = json::array();
  for (int k = 1; k <= seq.n_max(); ++k)
    rows.push_back({{"k", k}, {"U_k", seq.u(k).to_string(digits)},
                    {"log_D_k", seq.log_d(k).to_string(digits)}});
  return json{{"t", seq.t.to_string(digits)}, {"rows", rows}}.dump(2) + "\n";
}

std::string dpii_csv(const DpiiResult& r, int digits) {
  std::ostringstream os;
  os << "k,U_k\n";
  for (std::size_t i = 0; i < r.U.size(); ++i) os << i + 1 << ',' << r.U[i].to_string(digits) << '\n';
  return os.str();
}

std::string dpii_json(const DpiiResult& r, int digits) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.U.size(); ++i)
    rows.push_back({{"k", i + 1}, {"U_k", r.U[i].to_string(digits)}});
  json j{{"rows", rows}};
  j["first_unstable"] = r.first_unstable ? json(*r.first_unstable) : json(nullptr);
  return j.dump(2) + "\n";
}

std::string trajectory_csv(const PainleveTrajectory& tr, const std::vector<double>& reference) {
  std::ostringstream os;
  os << "t,value,derivative,toeplitz_value,deviation\n";
  for (std::size_t i = 0; i < tr.t.size(); ++i)
    os << format_double(tr.t[i]) << ',' << format_double(tr.value[i]) << ','
       << format_double(tr.derivative[i]) << ',' << format_double(reference.at(i)) << ','
       << format_double(tr.value[i] - reference.at(i)) << '\n';
  return os.str();
}

std::string trajectory_json(const PainleveTrajectory& tr, const std::vector<double>& reference) {
  json rows = json::array();
  for (std::size_t i = 0; i < tr.t.size(); ++i)
    rows.push_back({{"t", tr.t[i]},
                    {"value", tr.value[i]},
                    {"derivative", tr.derivative[i]},
                    {"toeplitz_value", reference.at(i)},
                    {"deviation", tr.value[i] - reference.at(i)}});
  return json{{"equation", tr.kind == PainleveTrajectory::Kind::PhiV ? "phi" : "W"},
              {"n", tr.n},
              {"rows", rows}}
             .dump(2) +
         "\n";
}

std::string pii_csv(const PainleveIISolution& sol) {
  std::ostringstream os;
  os << "s,q,dq,R,E,F\n";
  for (std::size_t i = 0; i < sol.size(); ++i)
    os << format_double(sol.s[i]) << ',' << format_double(sol.q[i]) << ','
       << format_double(sol.dq[i]) << ',' << format_double(sol.R[i]) << ','
       << format_double(sol.E[i]) << ',' << format_double(std::exp(-sol.E[i])) << '\n';
  return os.str();
}

std::string pii_json(const PainleveIISolution& sol) {
  json rows = json::array();
  for (std::size_t i = 0; i < sol.size(); ++i)
    rows.push_back({{"s", sol.s[i]},
                    {"q", sol.q[i]},
                    {"dq", sol.dq[i]},
                    {"R", sol.R[i]},
                    {"E", sol.E[i]},
                    {"F", std::exp(-sol.E[i])}});
  return json{{"s0", sol.s0}, {"rows", rows}}.dump(2) + "\n";
}

std::string stats_text(const DistStats& F, const DistStats& FO) {
  std::ostringstream os;
  char buf[160];
  os << "distribution        mean      stddev    skewness    kurtosis\n";
  for (const auto& [name, st] : {std::pair<const char*, const DistStats*>{"F", &F}, {"F_O", &FO}}) {
    std::snprintf(buf, sizeof buf, "%-12s %11.6f %11.6f %11.6f %11.6f\n", name, st->mean,
                  st->stddev, st->skewness, st->excess_kurtosis);
    os << buf;
  }
  return os.str();
}

std::string depoisson_text(const DepoissonReport& r) {
  std::ostringstream os;
  os << "monotonicity checks: " << r.monotonicity.checks.size() << ", failures "
     << r.monotonicity.failures() << '\n';
  os << "n = " << r.n << "\n k point        lambda           phi_e           phi_o\n";
  char buf[160];
  for (const auto& row : r.rows) {
    if (row.defined)
      std::snprintf(buf, sizeof buf, "%2d %-5s %13.6g %15.9g %15.9g\n", row.k, row.point.c_str(),
                    row.lambda, row.phi_even, row.phi_odd);
    else
      std::snprintf(buf, sizeof buf, "%2d %-5s %13.6g %15s %15s\n", row.k, row.point.c_str(),
                    row.lambda, "n/a", "n/a");
    os << buf;
  }
  os << "phi nonincreasing in lambda: " << (r.phi_monotone ? "yes" : "no") << '\n';
  return os.str();
}

std::string depoisson_json(const DepoissonReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j{{"k", row.k}, {"point", row.point}, {"lambda", row.lambda}, {"defined", row.defined}};
    if (row.defined) {
      j["phi_even"] = row.phi_even;
      j["phi_odd"] = row.phi_odd;
    }
    rows.push_back(j);
  }
  return json{{"n", r.n},
              {"monotonicity_checks", r.monotonicity.checks.size()},
              {"monotonicity_failures", r.monotonicity.failures()},
              {"phi_monotone", r.phi_monotone},
              {"rows", rows}}
             .dump(2) +
         "\n";
}

}  // namespace ptw::io
