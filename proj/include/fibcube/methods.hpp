// methods.hpp: one entry point per (family, quantity, method) used by the CLI and benchmarks.
#pragma once

#include "fibcube/closed_form.hpp"
#include "fibcube/cube_graph.hpp"
#include "fibcube/oracle.hpp"
#include "fibcube/series.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibcube {

/// Request that can never be satisfied: bad combination or out-of-range n.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Quantity { Mostar, Wiener };
enum class Method { Brute, Sum, Alt, Closed, Cited, Recursion, Gf };

inline constexpr Method kAllMethods[] = {Method::Brute,  Method::Sum,       Method::Alt, Method::Closed,
                                         Method::Cited, Method::Recursion, Method::Gf};

inline std::string_view to_string(Quantity q) { return q == Quantity::Mostar ? "mostar" : "wiener"; }

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::Brute: return "brute";
    case Method::Sum: return "sum";
    case Method::Alt: return "alt";
    case Method::Closed: return "closed";
    case Method::Cited: return "cited";
    case Method::Recursion: return "recursion";
    case Method::Gf: return "gf";
  }
  return "?";
}

inline std::optional<CubeKind> parse_family(std::string_view s) {
  if (s == "gamma") return CubeKind::Gamma;
  if (s == "lambda") return CubeKind::Lambda;
  return std::nullopt;
}

inline std::optional<Quantity> parse_quantity(std::string_view s) {
  if (s == "mostar") return Quantity::Mostar;
  if (s == "wiener") return Quantity::Wiener;
  return std::nullopt;
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : kAllMethods)
    if (to_string(m) == s) return m;
  return std::nullopt;
}

struct IndexValue {
  CubeKind family;
  int n;
  Quantity quantity;
  Method method;
  ExactInteger value;
};

/// Methods implemented for a family/quantity pair, in report order.
inline std::vector<Method> applicable_methods(CubeKind family, Quantity quantity) {
  if (family == CubeKind::Lambda)
    return quantity == Quantity::Mostar ? std::vector{Method::Brute, Method::Closed}
                                        : std::vector{Method::Brute};
  if (quantity == Quantity::Mostar)
    return {Method::Brute, Method::Sum, Method::Alt, Method::Closed, Method::Recursion, Method::Gf};
  return {Method::Brute, Method::Sum,       Method::Alt, Method::Closed,
          Method::Cited, Method::Recursion, Method::Gf};
}

/// Smallest n a method accepts.
inline int min_dimension(CubeKind family, Quantity quantity, Method method) {
  if (family == CubeKind::Lambda || quantity == Quantity::Mostar) return 2;
  // Wiener on Γₙ: the sum, cited form, series and brute force start at n = 1.
  switch (method) {
    case Method::Alt:
    case Method::Closed: return 2;
    default: return 1;
  }
}

inline bool is_oracle(Method m) { return m == Method::Brute; }

inline ExactInteger evaluate(CubeKind family, Quantity quantity, Method method, int n,
                             const BuildOptions& options = {}) {
  const auto methods = applicable_methods(family, quantity);
  if (std::find(methods.begin(), methods.end(), method) == methods.end())
    throw UsageError("method " + std::string(to_string(method)) + " is not available for " +
                     std::string(to_string(family)) + " " + std::string(to_string(quantity)));
  const int min_n = min_dimension(family, quantity, method);
  if (n < min_n)
    throw UsageError("n = " + std::to_string(n) + " is below the minimum " + std::to_string(min_n) +
                     " for " + std::string(to_string(method)));
  if (is_oracle(method)) {
    if (n > BitWord::kMaxLength || (n > kDeskScaleLimit && !options.allow_large))
      throw UsageError("brute force refuses n = " + std::to_string(n) + " (limit " +
                       std::to_string(kDeskScaleLimit) + ", override with --force)");
    const CubeGraph g = build_cube(family, n, options);
    return quantity == Quantity::Mostar ? mostar_brute(g) : wiener_brute(g);
  }

  const auto series_coefficient = [n](GfName name) {
    return gf_coefficients(builtin_gf(name), static_cast<std::size_t>(n) + 1).back();
  };

  if (family == CubeKind::Lambda) return mostar_lambda(n);
  if (quantity == Quantity::Mostar) {
    switch (method) {
      case Method::Sum: return mostar_gamma_sum(n);
      case Method::Alt: return mostar_gamma_alt(n);
      case Method::Closed: return mostar_gamma_closed(n);
      case Method::Recursion: return mn_recursion(n).total();
      case Method::Gf: return series_coefficient(GfName::MoGamma);
      default: break;
    }
  } else {
    switch (method) {
      case Method::Sum: return wiener_gamma_sum(n);
      case Method::Alt: return mostar_gamma_closed(n) + square_cut_sum(n);
      case Method::Closed: return wiener_gamma_closed_new(n);
      case Method::Cited: return wiener_gamma_closed_cited(n);
      case Method::Recursion: return mn_recursion(n + 1).a;  // aₙ₊₁ = W(Γₙ)
      case Method::Gf: return series_coefficient(GfName::WGamma);
      default: break;
    }
  }
  throw std::logic_error("evaluate: unhandled method");
}

}  // namespace fibcube
