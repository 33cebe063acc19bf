// series.hpp: integer polynomials and power-series coefficients of rational generating functions.
#pragma once

#include "fibcube/exact_integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibcube {

/// Σ cᵢ tⁱ with trailing zeros stripped; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<ExactInteger> coefficients) : c_(coefficients) { normalize(); }
  explicit IntPolynomial(std::vector<ExactInteger> coefficients) : c_(std::move(coefficients)) {
    normalize();
  }

  /// c·tᵉ
  static IntPolynomial monomial(ExactInteger c, std::size_t exponent) {
    std::vector<ExactInteger> out(exponent + 1);
    out[exponent] = std::move(c);
    return IntPolynomial(std::move(out));
  }

  const std::vector<ExactInteger>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// −1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  ExactInteger operator[](std::size_t i) const { return i < c_.size() ? c_[i] : ExactInteger(0); }

  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<ExactInteger> out(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] + q[i];
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<ExactInteger> out(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] - q[i];
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<ExactInteger> out(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      ExactInteger mag = c_[i] < 0 ? ExactInteger(-c_[i]) : c_[i];
      if (out.empty())
        out += c_[i] < 0 ? "-" : "";
      else
        out += c_[i] < 0 ? " - " : " + ";
      if (mag != 1 || i == 0) out += to_decimal(mag);
      if (i >= 1) out += "t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<ExactInteger> c_;
};

inline IntPolynomial poly_multiply(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

inline IntPolynomial poly_power(const IntPolynomial& p, unsigned exponent) {
  IntPolynomial out{1};
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

/// Product of factor^multiplicity, i.e. the expanded form of a factored polynomial.
inline IntPolynomial from_factors(std::initializer_list<std::pair<IntPolynomial, unsigned>> factors) {
  IntPolynomial out{1};
  for (const auto& [factor, multiplicity] : factors) out = out * poly_power(factor, multiplicity);
  return out;
}

struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

/// First `count` coefficients s₀ … s_{count−1} of numerator/denominator as a power series in t,
/// from q₀·sₙ = pₙ − Σ_{i≥1} qᵢ·sₙ₋ᵢ. Requires q₀ = ±1 so every coefficient is an integer.
inline std::vector<ExactInteger> gf_coefficients(const RationalGF& f, std::size_t count) {
  if (count == 0) throw std::invalid_argument("gf_coefficients: count must be positive");
  const auto& q = f.denominator.coefficients();
  if (q.empty() || (q[0] != 1 && q[0] != -1))
    throw std::invalid_argument("gf_coefficients: denominator constant term must be +1 or -1, got " +
                                (q.empty() ? std::string("0") : to_decimal(q[0])));
  std::vector<ExactInteger> s(count);
  for (std::size_t n = 0; n < count; ++n) {
    ExactInteger acc = f.numerator[n];
    for (std::size_t i = 1; i < q.size() && i <= n; ++i) acc -= q[i] * s[n - i];
    s[n] = q[0] == 1 ? acc : ExactInteger(-acc);
  }
  return s;
}

enum class GfName { B, A, C, MoGamma, CutSquares, WGamma, FibOdd, FibOddSquaredExpansion };

inline constexpr GfName kAllGfNames[] = {GfName::B,      GfName::A,          GfName::C,
                                         GfName::MoGamma, GfName::CutSquares, GfName::WGamma,
                                         GfName::FibOdd, GfName::FibOddSquaredExpansion};

inline std::string_view to_string(GfName name) {
  switch (name) {
    case GfName::B: return "B";
    case GfName::A: return "A";
    case GfName::C: return "C";
    case GfName::MoGamma: return "MoGamma";
    case GfName::CutSquares: return "CutSquares";
    case GfName::WGamma: return "WGamma";
    case GfName::FibOdd: return "FibOdd";
    case GfName::FibOddSquaredExpansion: return "FibOddSquaredExpansion";
  }
  throw std::invalid_argument("unknown generating function");
}

inline std::optional<GfName> parse_gf_name(std::string_view text) {
  for (GfName name : kAllGfNames)
    if (to_string(name) == text) return name;
  return std::nullopt;
}

namespace gf_factors {

inline IntPolynomial one_plus_t() { return {1, 1}; }
inline IntPolynomial golden_quadratic() { return {1, -3, 1}; }  // 1 − 3t + t²

/// (1+t)²(1−3t+t²)², shared by A, C, MoGamma, CutSquares and WGamma.
inline IntPolynomial squared_denominator() {
  return from_factors({{one_plus_t(), 2}, {golden_quadratic(), 2}});
}

}  // namespace gf_factors

/// Rational generating functions of the sequences indexed by n (coefficient of tⁿ):
///   B                       fₙ fₙ₋₁                       t² / ((1+t)(1−3t+t²))
///   A                       aₙ                            t² / ((1+t)²(1−3t+t²)²)
///   C                       cₙ                            (t³ + 2t⁴ − t⁵) / ((1+t)²(1−3t+t²)²)
///   MoGamma                 Mo(Γₙ), n ≥ 2                 (2−t)t² / ((1+t)²(1−3t+t²)²)
///   CutSquares              Σₖ (f_k f_{n−k+1})²           t(1−t)² / ((1+t)²(1−3t+t²)²)
///   WGamma                  W(Γₙ), n ≥ 1                  t / ((1+t)²(1−3t+t²)²)
///   FibOdd                  f_{2n+2}                      1 / (1−3t+t²)
///   FibOddSquaredExpansion  ((4n+2)f_{2n+2}+(3n+3)f_{2n+1})/5   1 / (1−3t+t²)²
inline RationalGF builtin_gf(GfName name) {
  using namespace gf_factors;
  const IntPolynomial t = IntPolynomial::monomial(1, 1);
  const IntPolynomial t2 = IntPolynomial::monomial(1, 2);
  switch (name) {
    case GfName::B:
      return {t2, from_factors({{one_plus_t(), 1}, {golden_quadratic(), 1}})};
    case GfName::A:
      return {t2, squared_denominator()};
    case GfName::C:
      return {IntPolynomial{0, 0, 0, 1, 2, -1}, squared_denominator()};
    case GfName::MoGamma:
      return {IntPolynomial{2, -1} * t2, squared_denominator()};
    case GfName::CutSquares:
      return {t * poly_power(IntPolynomial{1, -1}, 2), squared_denominator()};
    case GfName::WGamma:
      return {t, squared_denominator()};
    case GfName::FibOdd:
      return {IntPolynomial{1}, golden_quadratic()};
    case GfName::FibOddSquaredExpansion:
      return {IntPolynomial{1}, poly_power(golden_quadratic(), 2)};
  }
  throw std::invalid_argument("builtin_gf: unknown name");
}

inline RationalGF builtin_gf(std::string_view name) {
  if (auto parsed = parse_gf_name(name)) return builtin_gf(*parsed);
  throw std::invalid_argument("builtin_gf: unknown name \"" + std::string(name) + "\"");
}

}  // namespace fibcube
