// Copyright 2026 The ptw Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ptw");
  std::ostringstream out, err;
  const int code = ptw_cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == ptw_cli::kExitUsage);
  CHECK(run({"nonsense"}).code == ptw_cli::kExitUsage);
  CHECK(run({"dn", "--n", "2"}).code == ptw_cli::kExitUsage);
  CHECK(run({"dn", "--n", "2", "--t", "1", "--frobnicate"}).code == ptw_cli::kExitUsage);
  CHECK(run({"seq", "--t", "1", "--precision", "32"}).code == ptw_cli::kExitUsage);
  CHECK(run({"seq", "--t", "1", "--format", "xml"}).code == ptw_cli::kExitUsage);
  // Rejected by the library as an invalid argument.
  const Run bad = run({"dn", "--n", "2", "--t", "not-a-number"});
  CHECK(bad.code == ptw_cli::kExitUsage);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == ptw_cli::kExitOk);
  CHECK(r.out.find("census") != std::string::npos);
  CHECK(run({"tw", "--help"}).code == ptw_cli::kExitOk);
}

TEST_CASE("dn text and json") {
  const Run r = run({"dn", "--n", "3", "--t", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("U_n") != std::string::npos);
  CHECK(run({"dn", "--n", "3", "--t", "1", "--format", "json"}).out.find('{') != std::string::npos);
}

TEST_CASE("seq output is byte-identical across runs") {
  const Run a = run({"seq", "--n-max", "10", "--t", "0.5"});
  const Run b = run({"seq", "--n-max", "10", "--t", "0.5"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("k,U_k,log_D_k\n", 0) == 0);
}

TEST_CASE("seq --check passes for the three routes") {
  const Run r = run({"seq", "--n-max", "20", "--t", "2", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("RPL_PRECISION sets the default precision") {
  setenv("RPL_PRECISION", "40", 1);
  CHECK(run({"dn", "--n", "1", "--t", "1"}).code == ptw_cli::kExitUsage);
  setenv("RPL_PRECISION", "192", 1);
  const Run hi = run({"dn", "--n", "1", "--t", "1", "--digits", "50"});
  unsetenv("RPL_PRECISION");
  CHECK(hi.code == 0);
  const Run lo = run({"dn", "--n", "1", "--t", "1", "--digits", "50"});
  CHECK(hi.out != lo.out);
}

TEST_CASE("output file") {
  const std::string path = "test_cli_census.csv";
  std::remove(path.c_str());
  const Run r = run({"census", "--group", "odd", "--N-max", "5", "--output", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path, std::ios::binary);
  const std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(body == run({"census", "--group", "odd", "--N-max", "5"}).out);
  CHECK(body.rfind("N,n,count", 0) == 0);
  std::remove(path.c_str());
  CHECK(run({"census", "--output", "/nonexistent-dir/x.csv"}).code == ptw_cli::kExitFailure);
}

TEST_CASE("verification commands") {
  CHECK(run({"verify", "--n-max", "4", "--N-max", "8"}).code == 0);
  CHECK(run({"verify", "--n-max", "9"}).code == ptw_cli::kExitUsage);
  CHECK(run({"depoisson", "--n", "2", "--k-max", "3"}).code == 0);
}

TEST_CASE("integration failures exit 1") {
  const Run r = run({"piii", "--n", "2", "--t0", "0.01", "--t1", "3"});
  CHECK(r.code == ptw_cli::kExitFailure);
  CHECK(run({"piii", "--n", "2", "--t0", "0.2", "--start", "toeplitz", "--format", "text"}).code == 0);
  CHECK(run({"pv", "--n", "2", "--format", "json"}).code == 0);
}

TEST_CASE("distribution and experiments") {
  const Run stats = run({"tw", "--stats"});
  REQUIRE(stats.code == 0);
  CHECK(stats.out.find("-1.771") != std::string::npos);
  const Run pii = run({"pii", "--format", "text"});
  CHECK(pii.code == 0);
  const Run bdj = run({"bdj", "--s=-1,0", "--t", "10"});
  REQUIRE(bdj.code == 0);
  CHECK(bdj.out.rfind("s,t,n,finite_value,limit_value,abs_error\n", 0) == 0);
  CHECK(run({"oddlim", "--s=0", "--t", "10", "--route", "H_even", "--format", "json"}).code == 0);
  CHECK(run({"oddlim", "--s=0", "--t", "10", "--route", "X"}).code == ptw_cli::kExitUsage);
  CHECK(run({"uscale", "--s=0", "--t", "10"}).code == 0);
}
