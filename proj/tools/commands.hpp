// commands.hpp: the fibcube subcommands, writing to caller-supplied streams.
//
// Exit codes: 0 success, 1 mathematical mismatch, 2 usage error (thrown as UsageError
// and mapped by main). Values go to `out`; timings only ever go to `err`.
#pragma once

#include "fibcube/check.hpp"
#include "fibcube/closed_form.hpp"
#include "fibcube/cube_graph.hpp"
#include "fibcube/methods.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fibcube::cli {

enum class Format { Csv, Json };

struct OutputRecord {
  std::string family;
  int n = 0;
  std::string quantity;
  std::string method;
  std::string value;  // exact decimal
  long long elapsed_ns = 0;
};

namespace detail {

template <class Fn>
auto timed(Fn&& fn, long long& elapsed_ns) {
  const auto start = std::chrono::steady_clock::now();
  auto result = fn();
  elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
                   .count();
  return result;
}

inline void write_records(const std::vector<OutputRecord>& records, Format format, std::ostream& out) {
  if (format == Format::Json) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& r : records)
      array.push_back(nlohmann::ordered_json{{"family", r.family},
                       {"n", r.n},
                       {"quantity", r.quantity},
                       {"method", r.method},
                       {"value", r.value}});
    out << array.dump(2) << '\n';
    return;
  }
  out << "family,n,quantity,method,value\n";
  for (const auto& r : records)
    out << r.family << ',' << r.n << ',' << r.quantity << ',' << r.method << ',' << r.value << '\n';
}

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) parts.push_back(item);
  return parts;
}

}  // namespace detail

struct ComputeArgs {
  std::string family = "gamma";
  std::string quantity = "mostar";
  int n = 2;
  std::string method = "all";
  bool force = false;
  Format format = Format::Csv;
  bool timings = false;
};

inline int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(args.family);
  const auto quantity = parse_quantity(args.quantity);
  if (!family) throw UsageError("unknown family \"" + args.family + "\"");
  if (!quantity) throw UsageError("unknown quantity \"" + args.quantity + "\"");

  std::vector<Method> methods;
  if (args.method == "all") {
    for (Method m : applicable_methods(*family, *quantity))
      if (args.n >= min_dimension(*family, *quantity, m)) methods.push_back(m);
    if (methods.empty()) throw UsageError("no method accepts n = " + std::to_string(args.n));
  } else if (auto m = parse_method(args.method)) {
    methods.push_back(*m);
  } else {
    throw UsageError("unknown method \"" + args.method + "\"");
  }

  const BuildOptions options{.allow_large = args.force};
  std::vector<OutputRecord> records;
  for (Method m : methods) {
    OutputRecord r{std::string(to_string(*family)), args.n, std::string(to_string(*quantity)),
                   std::string(to_string(m)), {}, 0};
    r.value = to_decimal(detail::timed([&] { return evaluate(*family, *quantity, m, args.n, options); }, r.elapsed_ns));
    records.push_back(std::move(r));
  }
  detail::write_records(records, args.format, out);
  if (args.timings)
    for (const auto& r : records)
      err << "timing," << r.family << ',' << r.n << ',' << r.quantity << ',' << r.method << ','
          << r.elapsed_ns << '\n';
  return 0;
}

struct CheckArgs {
  int max_n = 50;
  int oracle_max_n = 10;
};

inline int cmd_check(const CheckArgs& args, std::ostream& out,
                     std::function<PartitionPolynomial(int)> recursion = mn_recursion) {
  CheckOptions options;
  options.max_n = args.max_n;
  options.oracle_max_n = args.oracle_max_n;
  options.partition_recursion = std::move(recursion);
  return report_checks(run_checks(options), out);
}

inline const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> columns{"mo_gamma", "mo_lambda", "w_gamma", "a", "b", "c"};
  return columns;
}

struct TableArgs {
  int max_n = 10;
  std::string quantities = "all";  // comma list drawn from table_columns()
  Format format = Format::Csv;
};

inline int cmd_table(const TableArgs& args, std::ostream& out) {
  if (args.max_n < 2) throw UsageError("table requires max-n >= 2");
  std::vector<std::string> selected;
  if (args.quantities == "all") {
    selected = table_columns();
  } else {
    const auto wanted = detail::split_commas(args.quantities);
    for (const auto& w : wanted)
      if (std::find(table_columns().begin(), table_columns().end(), w) == table_columns().end())
        throw UsageError("unknown table column \"" + w + "\"");
    for (const auto& c : table_columns())
      if (std::find(wanted.begin(), wanted.end(), c) != wanted.end()) selected.push_back(c);
  }

  const auto mn = mn_sequence(args.max_n);
  std::vector<std::map<std::string, std::string>> rows;
  for (int n = 2; n <= args.max_n; ++n) {
    const auto& m = mn[static_cast<std::size_t>(n)];
    rows.push_back({{"mo_gamma", to_decimal(mostar_gamma_closed(n))},
                    {"mo_lambda", to_decimal(mostar_lambda(n))},
                    {"w_gamma", to_decimal(wiener_gamma_closed_new(n))},
                    {"a", to_decimal(m.a)},
                    {"b", to_decimal(m.b)},
                    {"c", to_decimal(m.c)}});
  }

  if (args.format == Format::Json) {
    auto array = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      nlohmann::ordered_json row;
      row["n"] = static_cast<int>(i) + 2;
      for (const auto& c : selected) row[c] = rows[i].at(c);
      array.push_back(row);
    }
    out << array.dump(2) << '\n';
    return 0;
  }
  out << "n";
  for (const auto& c : selected) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << i + 2;
    for (const auto& c : selected) out << ',' << rows[i].at(c);
    out << '\n';
  }
  return 0;
}

struct DumpArgs {
  std::string family = "gamma";
  int n = 2;
  bool force = false;
};

/// Vertex words one per line in canonical order, then "u-index v-index k" per edge.
inline int cmd_dump(const DumpArgs& args, std::ostream& out) {
  const auto family = parse_family(args.family);
  if (!family) throw UsageError("unknown family \"" + args.family + "\"");
  const int min_n = *family == CubeKind::Gamma ? 0 : 2;
  if (args.n < min_n || args.n > BitWord::kMaxLength || (args.n > kDeskScaleLimit && !args.force))
    throw UsageError("dump: n = " + std::to_string(args.n) + " out of range");
  const CubeGraph g = build_cube(*family, args.n, BuildOptions{.allow_large = args.force});
  for (const BitWord& w : g.vertices()) out << w.str() << '\n';
  for (const auto& e : g.edges()) out << e.u_index << ' ' << e.v_index << ' ' << e.k << '\n';
  return 0;
}

struct BenchArgs {
  int max_oracle_n = 14;
  int max_closed_n = 1000;
};

/// Wall time per (method, n) for Mo(Γₙ). Timing only; no assertions.
inline int cmd_bench(const BenchArgs& args, std::ostream& out) {
  if (args.max_oracle_n > kDeskScaleLimit) throw UsageError("bench: max-oracle-n above desk scale");
  std::vector<int> formula_ns;
  for (int n = 2; n <= std::min(args.max_oracle_n, args.max_closed_n); ++n) formula_ns.push_back(n);
  for (int n : {20, 50, 100, 200, 500, 1000, 2000, 5000, 10000})
    if (n > args.max_oracle_n && n <= args.max_closed_n) formula_ns.push_back(n);

  out << "method,n,elapsed_ns,digits\n";
  const auto row = [&](Method m, int n) {
    long long ns = 0;
    const auto value = detail::timed([&] { return evaluate(CubeKind::Gamma, Quantity::Mostar, m, n); }, ns);
    out << to_string(m) << ',' << n << ',' << ns << ',' << to_decimal(value).size() << '\n';
  };
  for (int n = 2; n <= args.max_oracle_n; ++n) row(Method::Brute, n);
  for (Method m : {Method::Sum, Method::Closed, Method::Recursion, Method::Gf})
    for (int n : formula_ns) row(m, n);
  return 0;
}

}  // namespace fibcube::cli
