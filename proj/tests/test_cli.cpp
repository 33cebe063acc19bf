#include "commands.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

using namespace fibcube;
using namespace fibcube::cli;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(FIBCUBE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

std::string compute_value(ComputeArgs args) {
  std::ostringstream out, err;
  cmd_compute(args, out, err);
  const auto ls = lines(out.str());
  return ls.at(1).substr(ls.at(1).rfind(',') + 1);
}

}  // namespace

TEST(Compute, SingleMethods) {
  EXPECT_EQ(compute_value({.family = "gamma", .quantity = "mostar", .n = 5, .method = "closed"}), "92");
  EXPECT_EQ(compute_value({.family = "lambda", .quantity = "mostar", .n = 3, .method = "closed"}), "6");
  EXPECT_EQ(compute_value({.family = "gamma", .quantity = "wiener", .n = 2, .method = "brute"}), "4");
  EXPECT_EQ(compute_value({.family = "gamma", .quantity = "wiener", .n = 5, .method = "recursion"}), "176");
}

TEST(Compute, AllMethodsAgree) {
  for (const char* quantity : {"mostar", "wiener"})
    for (int n = 2; n <= 9; ++n) {
      std::ostringstream out, err;
      cmd_compute({.family = "gamma", .quantity = quantity, .n = n, .method = "all"}, out, err);
      const auto ls = lines(out.str());
      ASSERT_EQ(ls.size(), 1 + applicable_methods(CubeKind::Gamma, *parse_quantity(quantity)).size());
      const std::string first = ls[1].substr(ls[1].rfind(',') + 1);
      for (std::size_t i = 2; i < ls.size(); ++i) EXPECT_EQ(ls[i].substr(ls[i].rfind(',') + 1), first) << ls[i];
    }
}

TEST(Compute, AllAtLargeNRefusesOracle) {
  std::ostringstream out, err;
  EXPECT_THROW(cmd_compute({.family = "gamma", .quantity = "mostar", .n = 40, .method = "all"}, out, err),
               UsageError);
  EXPECT_NO_THROW(cmd_compute({.family = "gamma", .quantity = "mostar", .n = 40, .method = "closed",
                               .format = Format::Json, .timings = true},
                              out, err));
  const auto json = nlohmann::json::parse(out.str());
  ASSERT_EQ(json.size(), 1u);
  EXPECT_EQ(json[0]["method"], "closed");
  EXPECT_EQ(json[0]["value"], to_decimal(mostar_gamma_sum(40)));
  EXPECT_NE(err.str().find("timing,gamma,40,mostar,closed,"), std::string::npos);
}

TEST(Compute, UsageErrors) {
  std::ostringstream out, err;
  EXPECT_THROW(cmd_compute({.family = "lambda", .quantity = "wiener", .n = 4, .method = "closed"}, out, err),
               UsageError);
  EXPECT_THROW(cmd_compute({.family = "lambda", .quantity = "mostar", .n = 4, .method = "sum"}, out, err),
               UsageError);
  EXPECT_THROW(cmd_compute({.family = "gamma", .quantity = "mostar", .n = 1, .method = "closed"}, out, err),
               UsageError);
  EXPECT_THROW(cmd_compute({.family = "gamma", .quantity = "mostar", .n = 31, .method = "brute"}, out, err),
               UsageError);
  EXPECT_THROW(cmd_compute({.family = "cube", .quantity = "mostar", .n = 3}, out, err), UsageError);
  EXPECT_THROW(cmd_compute({.family = "gamma", .quantity = "mostar", .n = 3, .method = "magic"}, out, err),
               UsageError);
}

TEST(Table, CsvRows) {
  std::ostringstream out;
  cmd_table({.max_n = 5}, out);
  const auto ls = lines(out.str());
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0], "n,mo_gamma,mo_lambda,w_gamma,a,b,c");
  EXPECT_EQ(ls[1], "2,2,2,4,1,1,0");
  EXPECT_EQ(ls[4], "5,92,75,176,54,15,23");
}

TEST(Table, ColumnSubsetAndJsonRoundTrip) {
  std::ostringstream csv;
  cmd_table({.max_n = 3, .quantities = "c,mo_gamma"}, csv);
  EXPECT_EQ(lines(csv.str())[0], "n,mo_gamma,c");

  std::ostringstream js, plain;
  cmd_table({.max_n = 60, .format = Format::Json}, js);
  cmd_table({.max_n = 60}, plain);
  const auto json = nlohmann::json::parse(js.str());
  const auto rows = lines(plain.str());
  ASSERT_EQ(json.size() + 1, rows.size());
  for (std::size_t i = 0; i < json.size(); ++i) {
    const auto& r = json[i];
    std::string rebuilt = std::to_string(r["n"].get<int>());
    for (const auto& c : table_columns()) {
      rebuilt += "," + r[c].get<std::string>();
      EXPECT_EQ(from_decimal(r[c].get<std::string>()).str(), r[c].get<std::string>());
    }
    EXPECT_EQ(rebuilt, rows[i + 1]);
  }
  EXPECT_THROW(cmd_table({.max_n = 1}, js), UsageError);
  EXPECT_THROW(cmd_table({.max_n = 4, .quantities = "nope"}, js), UsageError);
}

TEST(Dump, SmallGraphs) {
  std::ostringstream g2, l3, g0;
  cmd_dump({.family = "gamma", .n = 2}, g2);
  EXPECT_EQ(g2.str(), "00\n01\n10\n0 2 1\n0 1 2\n");
  cmd_dump({.family = "lambda", .n = 3}, l3);
  EXPECT_EQ(lines(l3.str()).size(), 7u);
  EXPECT_EQ(l3.str(), "000\n001\n010\n100\n0 3 1\n0 2 2\n0 1 3\n");
  cmd_dump({.family = "gamma", .n = 0}, g0);
  EXPECT_EQ(g0.str(), "\n");
  EXPECT_THROW(cmd_dump({.family = "lambda", .n = 1}, g0), UsageError);
  EXPECT_THROW(cmd_dump({.family = "gamma", .n = 31}, g0), UsageError);
}

TEST(Check, MisreadExitsOne) {
  std::ostringstream out;
  EXPECT_EQ(cmd_check({.max_n = 10, .oracle_max_n = 4}, out), 0);
  const auto misread = [](int n) {
    auto m = mn_recursion(n);
    if (n >= 3) m.a += 2;  // any corruption of the a column
    return m;
  };
  std::ostringstream bad;
  EXPECT_EQ(cmd_check({.max_n = 10, .oracle_max_n = 4}, bad, misread), 1);
  EXPECT_NE(bad.str().find("FAIL"), std::string::npos);
}

TEST(Binary, ExitCodesAndDeterminism) {
  const auto closed = run_cli("compute --family gamma --quantity mostar -n 5 --method closed");
  EXPECT_EQ(closed.exit_code, 0);
  EXPECT_EQ(closed.out, "family,n,quantity,method,value\ngamma,5,mostar,closed,92\n");

  const auto check = run_cli("check --max-n 50 --oracle-max-n 10");
  EXPECT_EQ(check.exit_code, 0) << check.out;
  EXPECT_NE(check.out.find("checks passed"), std::string::npos);
  EXPECT_EQ(run_cli("check --max-n 2 --oracle-max-n 2").exit_code, 0);
  EXPECT_EQ(run_cli("check --max-n 5 --oracle-max-n 8").exit_code, 2);

  EXPECT_EQ(run_cli("compute --family lambda --quantity wiener -n 4 --method closed").exit_code, 2);
  EXPECT_EQ(run_cli("compute --family gamma --quantity mostar -n 35 --method brute").exit_code, 2);
  EXPECT_EQ(run_cli("compute --family torus -n 3").exit_code, 2);
  EXPECT_EQ(run_cli("table --max-n 5 --format xml").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);

  const auto t1 = run_cli("table --max-n 30 --format json");
  const auto t2 = run_cli("table --max-n 30 --format json");
  EXPECT_EQ(t1.exit_code, 0);
  EXPECT_EQ(t1.out, t2.out);
  EXPECT_EQ(run_cli("dump --family gamma -n 8").out, run_cli("dump --family gamma -n 8").out);

  const auto bench = run_cli("bench --max-oracle-n 8 --max-closed-n 200");
  EXPECT_EQ(bench.exit_code, 0);
  EXPECT_NE(bench.out.find("brute,8,"), std::string::npos);
  EXPECT_NE(bench.out.find("closed,8,"), std::string::npos);
  EXPECT_NE(bench.out.find("closed,200,"), std::string::npos);
}
