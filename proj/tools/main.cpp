// fibcube: compute, cross-validate, tabulate and dump Fibonacci/Lucas cube invariants.
#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

const std::map<std::string, fibcube::cli::Format> kFormats{{"csv", fibcube::cli::Format::Csv},
                                                            {"json", fibcube::cli::Format::Json}};

}  // namespace

int main(int argc, char** argv) {
  using namespace fibcube::cli;

  CLI::App app{"Mostar and Wiener indices of Fibonacci and Lucas cubes"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate one index by one or all methods");
  compute_cmd->add_option("--family", compute.family, "gamma | lambda")->check(CLI::IsMember({"gamma", "lambda"}));
  compute_cmd->add_option("--quantity", compute.quantity, "mostar | wiener")->check(CLI::IsMember({"mostar", "wiener"}));
  compute_cmd->add_option("-n,--n", compute.n, "Dimension")->required();
  compute_cmd->add_option("--method", compute.method, "brute | sum | alt | closed | cited | recursion | gf | all");
  compute_cmd->add_flag("--force", compute.force, "Allow brute force above n = 30");
  compute_cmd->add_option("--format", compute.format, "csv | json")->transform(CLI::CheckedTransformer(kFormats));
  compute_cmd->add_flag("--timings", compute.timings, "Write elapsed nanoseconds to stderr");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run every identity; exit 1 on any mismatch");
  check_cmd->add_option("--max-n", check.max_n, "Upper n for formula-level identities");
  check_cmd->add_option("--oracle-max-n", check.oracle_max_n, "Upper n for brute-force comparisons");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "One row per n: n,mo_gamma,mo_lambda,w_gamma,a,b,c");
  table_cmd->add_option("--max-n", table.max_n)->required();
  table_cmd->add_option("--quantities", table.quantities, "Comma list of columns, or all");
  table_cmd->add_option("--format", table.format, "csv | json")->transform(CLI::CheckedTransformer(kFormats));

  DumpArgs dump;
  auto* dump_cmd = app.add_subcommand("dump", "Print vertex words then edges as 'u v k'");
  dump_cmd->add_option("--family", dump.family)->check(CLI::IsMember({"gamma", "lambda"}));
  dump_cmd->add_option("-n,--n", dump.n)->required();
  dump_cmd->add_flag("--force", dump.force);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time brute force against the formulas");
  bench_cmd->add_option("--max-oracle-n", bench.max_oracle_n);
  bench_cmd->add_option("--max-closed-n", bench.max_closed_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute_cmd) return cmd_compute(compute, std::cout, std::cerr);
    if (*check_cmd) return cmd_check(check, std::cout);
    if (*table_cmd) return cmd_table(table, std::cout);
    if (*dump_cmd) return cmd_dump(dump, std::cout);
    if (*bench_cmd) return cmd_bench(bench, std::cout);
  } catch (const fibcube::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
