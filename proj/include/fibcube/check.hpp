// check.hpp: the full cross-validation suite behind `fibcube check`.
//
// Formula-level identities run for n up to max_n; anything that builds a graph
// runs for n up to oracle_max_n. Each check reports its first counterexample.
#pragma once

#include "fibcube/closed_form.hpp"
#include "fibcube/cube_graph.hpp"
#include "fibcube/methods.hpp"
#include "fibcube/oracle.hpp"
#include "fibcube/series.hpp"
#include "fibcube/sequences.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace fibcube {

struct Counterexample {
  std::string location;  // e.g. "n=4" or "n=5 k=2"
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string name;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure; }
};

struct CheckOptions {
  int max_n = 50;
  int oracle_max_n = 10;
  /// Mₙ coefficient source under test; swapped out only to exercise failure reporting.
  std::function<PartitionPolynomial(int)> partition_recursion = mn_recursion;
};

namespace detail {

using Outcome = std::optional<Counterexample>;

inline std::string at_n(int n) { return "n=" + std::to_string(n); }
inline std::string at_nk(int n, int k) { return at_n(n) + " k=" + std::to_string(k); }

template <class T>
std::string render(const T& value) {
  if constexpr (std::is_same_v<T, PartitionPolynomial>)
    return value.str();
  else if constexpr (std::is_same_v<T, ExactInteger>)
    return to_decimal(value);
  else if constexpr (std::is_same_v<T, bool>)
    return value ? "true" : "false";
  else
    return std::to_string(value);
}

template <class T>
Outcome expect_equal(const std::string& where, const T& expected, const T& actual) {
  if (expected == actual) return std::nullopt;
  return Counterexample{where, render(expected), render(actual)};
}

/// First counterexample of body(n) over n in [lo, hi].
template <class Body>
Outcome over_n(int lo, int hi, Body&& body) {
  for (int n = lo; n <= hi; ++n)
    if (auto out = body(n)) return out;
  return std::nullopt;
}

class Runner {
 public:
  explicit Runner(std::vector<CheckResult>& results) : results_(results) {}

  template <class Fn>
  void operator()(std::string name, Fn&& fn) {
    results_.push_back(CheckResult{std::move(name), fn()});
  }

 private:
  std::vector<CheckResult>& results_;
};

inline void seq_checks(Runner& run, const CheckOptions& o) {
  const FibTable f(o.max_n + 1);
  run("fib/lucas seeds f0=0 f1=1 L0=2 L1=1", [] {
    if (auto r = expect_equal<ExactInteger>("fib(0)", 0, fib(0))) return r;
    if (auto r = expect_equal<ExactInteger>("fib(1)", 1, fib(1))) return r;
    if (auto r = expect_equal<ExactInteger>("lucas(0)", 2, lucas(0))) return r;
    return expect_equal<ExactInteger>("lucas(1)", 1, lucas(1));
  });
  run("fib(n) = fib(n-1) + fib(n-2)", [&] {
    return over_n(2, o.max_n, [&](int n) { return expect_equal(at_n(n), fib(n - 1) + fib(n - 2), fib(n)); });
  });
  run("lucas(n) = lucas(n-1) + lucas(n-2)", [&] {
    return over_n(2, o.max_n,
                  [&](int n) { return expect_equal(at_n(n), lucas(n - 1) + lucas(n - 2), lucas(n)); });
  });
  run("lucas(n) = fib(n-1) + fib(n+1)", [&] {
    return over_n(1, o.max_n, [&](int n) { return expect_equal(at_n(n), f[n - 1] + f[n + 1], lucas(n)); });
  });
  run("fib monotone nondecreasing", [&] {
    return over_n(1, o.max_n, [&](int n) { return expect_equal(at_n(n), true, f[n] >= f[n - 1]); });
  });
}

inline void cube_checks(Runner& run, const CheckOptions& o) {
  const int top = o.oracle_max_n;
  const FibTable f(top + 2);

  run("word packing: coordinate k is bit n-k, parse/str round trip", [&] {
    return over_n(0, top, [&](int n) -> Outcome {
      for (const BitWord& w : enum_fib_words(n)) {
        if (BitWord::parse(w.str()) != w) return Counterexample{at_n(n), w.str(), BitWord::parse(w.str()).str()};
        for (int k = 1; k <= n; ++k)
          if (w.at(k) != (w.str()[static_cast<std::size_t>(k - 1)] == '1') ||
              w.at(k) != (((w.packed() >> (n - k)) & 1u) != 0))
            return Counterexample{at_nk(n, k) + " word=" + w.str(), "consistent", "inconsistent"};
      }
      return std::nullopt;
    });
  });
  run("|V(Gamma_n)| = f(n+2)", [&] {
    return over_n(0, top, [&](int n) {
      return expect_equal(at_n(n), f[n + 2], ExactInteger(build_cube(CubeKind::Gamma, n).vertex_count()));
    });
  });
  run("|V(Lambda_n)| = L(n)", [&] {
    return over_n(2, top, [&](int n) {
      return expect_equal(at_n(n), lucas(n), ExactInteger(build_cube(CubeKind::Lambda, n).vertex_count()));
    });
  });
  run("|E(Gamma_n)| = sum_k f(k) f(n-k+1)", [&] {
    return over_n(2, top, [&](int n) {
      ExactInteger expected = 0;
      for (int k = 1; k <= n; ++k) expected += f[k] * f[n - k + 1];
      return expect_equal(at_n(n), expected, ExactInteger(build_cube(CubeKind::Gamma, n).edges().size()));
    });
  });
  run("|E(Lambda_n)| = n f(n-1)", [&] {
    return over_n(2, top, [&](int n) {
      return expect_equal(at_n(n), ExactInteger(n) * f[n - 1],
                          ExactInteger(build_cube(CubeKind::Lambda, n).edges().size()));
    });
  });
  run("Gamma_n coordinate-k cut size = f(k) f(n-k+1)", [&] {
    return over_n(2, top, [&](int n) -> Outcome {
      const auto g = build_cube(CubeKind::Gamma, n);
      for (int k = 1; k <= n; ++k)
        if (auto r = expect_equal(at_nk(n, k), f[k] * f[n - k + 1], edges_at_coordinate(g, k))) return r;
      return std::nullopt;
    });
  });
  run("Lambda_n coordinate-k cut size = f(n-1) (measured)", [&] {
    return over_n(2, top, [&](int n) -> Outcome {
      const auto g = build_cube(CubeKind::Lambda, n);
      for (int k = 1; k <= n; ++k)
        if (auto r = expect_equal(at_nk(n, k), f[n - 1], edges_at_coordinate(g, k))) return r;
      return std::nullopt;
    });
  });
  run("fundamental decomposition 0Gamma_{n-1} + 10Gamma_{n-2}, f(n) link edges", [&] {
    return over_n(2, top, [&](int n) -> Outcome {
      const auto g = build_cube(CubeKind::Gamma, n);
      std::set<std::string> head0, head10;
      for (const BitWord& w : g.vertices()) {
        const std::string s = w.str();
        if (s[0] == '0')
          head0.insert(s.substr(1));
        else if (s.compare(0, 2, "10") == 0)
          head10.insert(s.substr(2));
        else
          return Counterexample{at_n(n), "prefix 0 or 10", s};
      }
      std::set<std::string> sub1, sub2;
      for (const BitWord& w : enum_fib_words(n - 1)) sub1.insert(w.str());
      for (const BitWord& w : enum_fib_words(n - 2)) sub2.insert(w.str());
      if (head0 != sub1) return Counterexample{at_n(n), "0-part = Gamma_{n-1}", "differs"};
      if (head10 != sub2) return Counterexample{at_n(n), "10-part = Gamma_{n-2}", "differs"};
      std::set<std::string> link_u, link_v;
      for (const auto& e : g.edges()) {
        if (e.k != 1) continue;
        const std::string u = e.u.str(), v = e.v.str();
        if (u.compare(0, 2, "00") != 0 || v.compare(0, 2, "10") != 0 || u.substr(2) != v.substr(2))
          return Counterexample{at_n(n), "link edge 00x-10x", u + "-" + v};
        link_u.insert(u);
        link_v.insert(v);
      }
      // Perfect matching: every 10x and every 00x appears exactly once.
      if (auto r = expect_equal(at_n(n) + " link edges", f[n], ExactInteger(link_u.size()))) return r;
      if (auto r = expect_equal(at_n(n) + " 10-side", ExactInteger(head10.size()), ExactInteger(link_v.size())))
        return r;
      return std::nullopt;
    });
  });
  run("edge endpoints valid; clearing a 1 keeps a word valid", [&] {
    for (CubeKind kind : {CubeKind::Gamma, CubeKind::Lambda}) {
      const int lo = kind == CubeKind::Gamma ? 0 : 2;
      if (auto r = over_n(lo, top, [&](int n) -> Outcome {
            const auto g = build_cube(kind, n);
            for (const auto& e : g.edges())
              if (!g.is_valid_word(e.u) || !g.is_valid_word(e.v) || !g.contains(e.u) || !g.contains(e.v) ||
                  hamming_distance(e.u, e.v) != 1 || e.u.at(e.k) || !e.v.at(e.k))
                return Counterexample{at_nk(n, e.k), "valid oriented edge", e.u.str() + "-" + e.v.str()};
            for (const BitWord& w : g.vertices())
              for (int k = 1; k <= n; ++k)
                if (w.at(k) && !g.contains(w.with(k, false)))
                  return Counterexample{at_nk(n, k), "cleared word is a vertex", w.with(k, false).str()};
            return std::nullopt;
          }))
        return r;
    }
    return Outcome{};
  });
  run("enumeration duplicate-free and deterministic", [&] {
    return over_n(2, top, [&](int n) -> Outcome {
      for (auto words : {enum_fib_words(n), enum_lucas_words(n)}) {
        for (std::size_t i = 1; i < words.size(); ++i)
          if (!(words[i - 1] < words[i])) return Counterexample{at_n(n), "strictly ascending", words[i].str()};
      }
      if (enum_fib_words(n) != enum_fib_words(n) || enum_lucas_words(n) != enum_lucas_words(n))
        return Counterexample{at_n(n), "identical reruns", "differs"};
      return std::nullopt;
    });
  });
}

inline void oracle_checks(Runner& run, const CheckOptions& o) {
  const int top = o.oracle_max_n;
  const FibTable f(top + 2);

  run("Lemma 1: n_u = f(k+1) f(n-k+2), n_v = f(k) f(n-k+1) on Gamma_n", [&] {
    return over_n(2, top, [&](int n) -> Outcome {
      const auto g = build_cube(CubeKind::Gamma, n);
      for (const auto& e : g.edges()) {
        const auto bal = nu_nv(g, e);
        const int k = e.k;
        if (auto r = expect_equal(at_nk(n, k) + " n_u", f[k + 1] * f[n - k + 2], bal.n_u)) return r;
        if (auto r = expect_equal(at_nk(n, k) + " n_v", f[k] * f[n - k + 1], bal.n_v)) return r;
      }
      return std::nullopt;
    });
  });
  run("Lemma 3: n_u = f(n+1), n_v = f(n-1) on Lambda_n", [&] {
    return over_n(3, top, [&](int n) -> Outcome {
      const auto g = build_cube(CubeKind::Lambda, n);
      for (const auto& e : g.edges()) {
        const auto bal = nu_nv(g, e);
        if (auto r = expect_equal(at_nk(n, e.k) + " n_u", f[n + 1], bal.n_u)) return r;
        if (auto r = expect_equal(at_nk(n, e.k) + " n_v", f[n - 1], bal.n_v)) return r;
        if (auto r = expect_equal(at_nk(n, e.k) + " |n_u-n_v|", f[n], ExactInteger(abs(bal.n_u - bal.n_v))))
          return r;
      }
      return std::nullopt;
    });
  });
  run("n_u + n_v = |V| on every edge", [&] {
    for (CubeKind kind : {CubeKind::Gamma, CubeKind::Lambda})
      if (auto r = over_n(2, top, [&](int n) -> Outcome {
            const auto g = build_cube(kind, n);
            for (const auto& e : g.edges()) {
              const auto bal = nu_nv(g, e);
              if (auto r = expect_equal(std::string(to_string(kind)) + " " + at_nk(n, e.k),
                                        ExactInteger(g.vertex_count()), ExactInteger(bal.n_u + bal.n_v)))
                return r;
              if (bal.n_u < 1 || bal.n_v < 1) return Counterexample{at_nk(n, e.k), "both sides nonempty", "empty"};
            }
            return std::nullopt;
          }))
        return r;
    return Outcome{};
  });
  run("mostar_brute(Gamma_n) = a + b + c of brute partition", [&] {
    return over_n(2, top, [&](int n) {
      return expect_equal(at_n(n), mn_partition_brute(n).total(), mostar_brute(build_cube(CubeKind::Gamma, n)));
    });
  });
  run("mostar_brute invariant under word reversal", [&] {
    return over_n(2, top, [&](int n) -> Outcome {
      const auto g = build_cube(CubeKind::Gamma, n);
      for (const auto& e : g.edges()) {
        const OrientedEdge mirror{e.u.reversed(), e.v.reversed(), n - e.k + 1, g.index_of(e.u.reversed()),
                                  g.index_of(e.v.reversed())};
        const auto a = nu_nv(g, e);
        const auto b = nu_nv(g, mirror);
        if (a.n_u != b.n_u || a.n_v != b.n_v)
          return Counterexample{at_nk(n, e.k), render(a.n_u) + "/" + render(a.n_v), render(b.n_u) + "/" + render(b.n_v)};
      }
      return std::nullopt;
    });
  });
  run("BFS distance = Hamming distance", [&] {
    if (auto r = over_n(0, top, [&](int n) { return expect_equal(at_n(n), true, distance_check(build_cube(CubeKind::Gamma, n))); }))
      return r;
    return over_n(2, top, [&](int n) { return expect_equal("lambda " + at_n(n), true, distance_check(build_cube(CubeKind::Lambda, n))); });
  });
}

inline void closed_form_checks(Runner& run, const CheckOptions& o) {
  const FibTable f(2 * o.max_n + 3);
  const auto& mn = o.partition_recursion;

  run("M_2..M_5 = x+y, 4x+2y+z, 16x+6y+6z, 54x+15y+23z", [&] {
    const PartitionPolynomial table[] = {{1, 1, 0}, {4, 2, 1}, {16, 6, 6}, {54, 15, 23}};
    return over_n(2, std::min(5, o.max_n), [&](int n) { return expect_equal(at_n(n), table[n - 2], mn(n)); });
  });
  run("M_0 = M_1 = 0", [&] {
    if (auto r = expect_equal(at_n(0), PartitionPolynomial{}, mn(0))) return r;
    return expect_equal(at_n(1), PartitionPolynomial{}, mn(1));
  });
  run("b_n = f(n) f(n-1)", [&] {
    return over_n(2, o.max_n, [&](int n) { return expect_equal(at_n(n), f[n] * f[n - 1], mn(n).b); });
  });
  run("Mo(Gamma_n): sum = alt = closed = a+b+c", [&] {
    return over_n(2, o.max_n, [&](int n) -> Outcome {
      const ExactInteger sum = mostar_gamma_sum(n);
      if (auto r = expect_equal(at_n(n) + " alt", sum, mostar_gamma_alt(n))) return r;
      if (auto r = expect_equal(at_n(n) + " closed", sum, mostar_gamma_closed(n))) return r;
      return expect_equal(at_n(n) + " recursion", sum, mn(n).total());
    });
  });
  run("Mo(Gamma_n) formulas = brute force", [&] {
    return over_n(2, o.oracle_max_n, [&](int n) -> Outcome {
      const ExactInteger brute = mostar_brute(build_cube(CubeKind::Gamma, n));
      if (auto r = expect_equal(at_n(n) + " sum", brute, mostar_gamma_sum(n))) return r;
      if (auto r = expect_equal(at_n(n) + " alt", brute, mostar_gamma_alt(n))) return r;
      if (auto r = expect_equal(at_n(n) + " closed", brute, mostar_gamma_closed(n))) return r;
      return expect_equal(at_n(n) + " recursion", brute, mn(n).total());
    });
  });
  run("Mo(Lambda_n) = n f(n) f(n-1) = brute force", [&] {
    return over_n(2, o.oracle_max_n, [&](int n) {
      return expect_equal(at_n(n), mostar_brute(build_cube(CubeKind::Lambda, n)), mostar_lambda(n));
    });
  });
  run("M_n recursion = brute edge partition", [&] {
    return over_n(2, o.oracle_max_n, [&](int n) { return expect_equal(at_n(n), mn_partition_brute(n), mn(n)); });
  });
  run("W(Gamma_n): sum = cited = new = Mo + square cut sum", [&] {
    if (auto r = expect_equal(at_n(1) + " cited", wiener_gamma_sum(1), wiener_gamma_closed_cited(1))) return r;
    return over_n(2, o.max_n, [&](int n) -> Outcome {
      const ExactInteger sum = wiener_gamma_sum(n);
      if (auto r = expect_equal(at_n(n) + " cited", sum, wiener_gamma_closed_cited(n))) return r;
      if (auto r = expect_equal(at_n(n) + " new", sum, wiener_gamma_closed_new(n))) return r;
      return expect_equal(at_n(n) + " Mo+squares", sum, mostar_gamma_closed(n) + square_cut_sum(n));
    });
  });
  run("W(Gamma_n) formulas = brute force", [&] {
    return over_n(1, o.oracle_max_n, [&](int n) {
      return expect_equal(at_n(n), wiener_brute(build_cube(CubeKind::Gamma, n)), wiener_gamma_sum(n));
    });
  });
  run("a_n = W(Gamma_{n-1})", [&] {
    if (auto r = over_n(3, o.max_n, [&](int n) { return expect_equal(at_n(n), wiener_gamma_sum(n - 1), mn(n).a); }))
      return r;
    return over_n(3, o.oracle_max_n, [&](int n) {
      return expect_equal(at_n(n) + " brute", wiener_brute(build_cube(CubeKind::Gamma, n - 1)), mn(n).a);
    });
  });
  run("25 divides the Mo and W brackets", [&] {
    return over_n(2, o.max_n, [&](int n) -> Outcome {
      if (!divides(25, mostar_gamma_bracket(n))) return Counterexample{at_n(n) + " Mo", "0 mod 25", to_decimal(mostar_gamma_bracket(n) % 25)};
      if (!divides(25, wiener_cited_bracket(n))) return Counterexample{at_n(n) + " W cited", "0 mod 25", to_decimal(wiener_cited_bracket(n) % 25)};
      if (!divides(25, wiener_new_bracket(n))) return Counterexample{at_n(n) + " W new", "0 mod 25", to_decimal(wiener_new_bracket(n) % 25)};
      return std::nullopt;
    });
  });
  run("f(k+1)f(n-k+2) - f(k)f(n-k+1) = f(k)f(n-k) + f(k-1)f(n-k+2)", [&] {
    return over_n(1, o.max_n, [&](int n) -> Outcome {
      for (int k = 1; k <= n; ++k)
        if (auto r = expect_equal(at_nk(n, k), f[k + 1] * f[n - k + 2] - f[k] * f[n - k + 1],
                                  f[k] * f[n - k] + f[k - 1] * f[n - k + 2]))
          return r;
      return std::nullopt;
    });
  });
}

inline void series_checks(Runner& run, const CheckOptions& o) {
  const std::size_t count = static_cast<std::size_t>(o.max_n) + 1;
  const FibTable f(2 * o.max_n + 3);
  const auto coeffs = [count](GfName name) { return gf_coefficients(builtin_gf(name), count); };
  const auto mo = coeffs(GfName::MoGamma);
  const auto w = coeffs(GfName::WGamma);
  const auto& mn = o.partition_recursion;

  run("series A + B + C = MoGamma", [&] {
    const auto a = coeffs(GfName::A), b = coeffs(GfName::B), c = coeffs(GfName::C);
    return over_n(0, o.max_n, [&](int n) { return expect_equal(at_n(n), mo[n], ExactInteger(a[n] + b[n] + c[n])); });
  });
  run("series MoGamma + CutSquares = WGamma", [&] {
    const auto sq = coeffs(GfName::CutSquares);
    return over_n(0, o.max_n, [&](int n) { return expect_equal(at_n(n), w[n], ExactInteger(mo[n] + sq[n])); });
  });
  run("1/(1-3t+t^2) coefficients = f(2n+2)", [&] {
    const auto s = coeffs(GfName::FibOdd);
    return over_n(0, o.max_n, [&](int n) { return expect_equal(at_n(n), f[2 * n + 2], s[n]); });
  });
  run("1/(1-3t+t^2)^2 coefficients = ((4n+2)f(2n+2) + (3n+3)f(2n+1))/5", [&] {
    const auto s = coeffs(GfName::FibOddSquaredExpansion);
    return over_n(0, o.max_n, [&](int n) -> Outcome {
      const ExactInteger bracket = (4 * n + 2) * f[2 * n + 2] + (3 * n + 3) * f[2 * n + 1];
      if (!divides(5, bracket)) return Counterexample{at_n(n), "0 mod 5", to_decimal(bracket % 5)};
      return expect_equal(at_n(n), divide_exact(bracket, 5), s[n]);
    });
  });
  run("MoGamma coefficients = closed form", [&] {
    if (auto r = expect_equal<ExactInteger>(at_n(0), 0, mo[0])) return r;
    if (auto r = expect_equal<ExactInteger>(at_n(1), 0, mo[1])) return r;
    return over_n(2, o.max_n, [&](int n) { return expect_equal(at_n(n), mostar_gamma_closed(n), mo[n]); });
  });
  run("WGamma coefficients = Wiener sum", [&] {
    return over_n(1, o.max_n, [&](int n) { return expect_equal(at_n(n), wiener_gamma_sum(n), w[n]); });
  });
  run("series A, B, C coefficients = a_n, b_n, c_n", [&] {
    const auto a = coeffs(GfName::A), b = coeffs(GfName::B), c = coeffs(GfName::C);
    return over_n(2, o.max_n, [&](int n) -> Outcome {
      const auto m = mn(n);
      if (auto r = expect_equal(at_n(n) + " a", m.a, a[n])) return r;
      if (auto r = expect_equal(at_n(n) + " b", m.b, b[n])) return r;
      return expect_equal(at_n(n) + " c", m.c, c[n]);
    });
  });
}

}  // namespace detail

/// Throws UsageError unless 2 ≤ oracle_max_n ≤ max_n and oracle_max_n is desk scale.
inline std::vector<CheckResult> run_checks(const CheckOptions& options) {
  if (options.oracle_max_n < 2 || options.oracle_max_n > options.max_n)
    throw UsageError("check requires 2 <= oracle-max-n <= max-n");
  if (options.oracle_max_n > kDeskScaleLimit)
    throw UsageError("oracle-max-n above " + std::to_string(kDeskScaleLimit));
  if (!options.partition_recursion) throw UsageError("check: missing partition recursion");
  std::vector<CheckResult> results;
  detail::Runner run(results);
  detail::seq_checks(run, options);
  detail::cube_checks(run, options);
  detail::oracle_checks(run, options);
  detail::closed_form_checks(run, options);
  detail::series_checks(run, options);
  return results;
}

/// One PASS/FAIL line per check and a summary line; returns 0 if all pass, else 1.
inline int report_checks(const std::vector<CheckResult>& results, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (r.passed()) {
      out << "PASS  " << r.name << '\n';
    } else {
      ++failed;
      out << "FAIL  " << r.name << ": " << r.failure->location << " expected " << r.failure->expected
          << " actual " << r.failure->actual << '\n';
    }
  }
  out << (results.size() - failed) << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace fibcube
