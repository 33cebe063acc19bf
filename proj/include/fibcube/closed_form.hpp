// closed_form.hpp: formula-level evaluators for Mo(Γₙ), Mo(Λₙ), W(Γₙ) and the Mₙ recursion.
#pragma once

#include "fibcube/exact_integer.hpp"
#include "fibcube/partition.hpp"
#include "fibcube/sequences.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fibcube {

namespace detail {

inline void require_at_least(int n, int min_n, const char* what) {
  if (n < min_n)
    throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) + " below minimum " +
                            std::to_string(min_n));
}

inline int alternating_sign(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// Σₖ f_k f_{n−k+1} (f_{k+1} f_{n−k+2} − f_k f_{n−k+1}): cut size times |n_u − n_v| per coordinate.
inline ExactInteger mostar_gamma_sum(int n) {
  detail::require_at_least(n, 2, "mostar_gamma_sum");
  const FibTable f(n + 2);
  ExactInteger total = 0;
  for (int k = 1; k <= n; ++k) {
    const ExactInteger cut = f[k] * f[n - k + 1];
    total += cut * (f[k + 1] * f[n - k + 2] - cut);
  }
  return total;
}

/// Same sum with the per-coordinate imbalance written as f_k f_{n−k} + f_{k−1} f_{n−k+2}.
inline ExactInteger mostar_gamma_alt(int n) {
  detail::require_at_least(n, 2, "mostar_gamma_alt");
  const FibTable f(n + 2);
  ExactInteger total = 0;
  for (int k = 1; k <= n; ++k)
    total += f[k] * f[n - k + 1] * (f[k] * f[n - k] + f[k - 1] * f[n - k + 2]);
  return total;
}

/// (3n−2) f_{2n+2} + n f_{2n+1} + (3n+2)(−1)ⁿ, which is 25·Mo(Γₙ).
inline ExactInteger mostar_gamma_bracket(int n) {
  detail::require_at_least(n, 2, "mostar_gamma_bracket");
  const FibTable f(2 * n + 2);
  return ExactInteger(3 * n - 2) * f[2 * n + 2] + ExactInteger(n) * f[2 * n + 1] +
         ExactInteger(3 * n + 2) * detail::alternating_sign(n);
}

inline ExactInteger mostar_gamma_closed(int n) { return divide_exact(mostar_gamma_bracket(n), 25); }

/// n f_n f_{n−1}: every one of the n f_{n−1} edges of Λₙ contributes f_n.
inline ExactInteger mostar_lambda(int n) {
  detail::require_at_least(n, 2, "mostar_lambda");
  return ExactInteger(n) * fib(n) * fib(n - 1);
}

/// M₀ … M_last by coefficient recurrence:
///   aₙ = aₙ₋₁ + cₙ₋₁ + 2aₙ₋₂ + bₙ₋₂ + cₙ₋₂ + fₙ₋₁(fₙ + fₙ₋₂)
///   bₙ = fₙ fₙ₋₁
///   cₙ = aₙ₋₁ + aₙ₋₂ + bₙ₋₂ + cₙ₋₂
/// obtained by expanding Mₙ = Mₙ₋₁(x+z, 0, x) + Mₙ₋₂(2x+z, x+z, x+z) + fₙ₋₁(fₙ+fₙ₋₂)x + fₙfₙ₋₁y.
inline std::vector<PartitionPolynomial> mn_sequence(int last) {
  if (last < 0) throw std::out_of_range("mn_sequence: negative n");
  const FibTable f(std::max(last, 1));
  std::vector<PartitionPolynomial> m(static_cast<std::size_t>(last) + 1);
  for (int n = 2; n <= last; ++n) {
    const auto& p1 = m[static_cast<std::size_t>(n - 1)];
    const auto& p2 = m[static_cast<std::size_t>(n - 2)];
    auto& out = m[static_cast<std::size_t>(n)];
    out.a = p1.a + p1.c + 2 * p2.a + p2.b + p2.c + f[n - 1] * (f[n] + f[n - 2]);
    out.b = f[n] * f[n - 1];
    out.c = p1.a + p2.a + p2.b + p2.c;
  }
  return m;
}

inline PartitionPolynomial mn_recursion(int n) {
  if (n < 0) throw std::out_of_range("mn_recursion: negative n");
  return mn_sequence(n).back();
}

/// Σₖ f_k f_{k+1} f_{n−k+1} f_{n−k+2}.
inline ExactInteger wiener_gamma_sum(int n) {
  detail::require_at_least(n, 1, "wiener_gamma_sum");
  const FibTable f(n + 2);
  ExactInteger total = 0;
  for (int k = 1; k <= n; ++k) total += f[k] * f[k + 1] * f[n - k + 1] * f[n - k + 2];
  return total;
}

/// 4(n+1) f_n² + (9n+2) f_n f_{n+1} + 6n f_{n+1}², which is 25·W(Γₙ).
inline ExactInteger wiener_cited_bracket(int n) {
  detail::require_at_least(n, 1, "wiener_cited_bracket");
  const ExactInteger fn = fib(n);
  const ExactInteger fn1 = fib(n + 1);
  return ExactInteger(4 * (n + 1)) * fn * fn + ExactInteger(9 * n + 2) * fn * fn1 +
         ExactInteger(6 * n) * fn1 * fn1;
}

inline ExactInteger wiener_gamma_closed_cited(int n) {
  return divide_exact(wiener_cited_bracket(n), 25);
}

/// (3n+2) f_{2n+3} + (n−2) f_{2n+2} − (n+2)(−1)ⁿ, which is 25·W(Γₙ) for n ≥ 2.
inline ExactInteger wiener_new_bracket(int n) {
  detail::require_at_least(n, 2, "wiener_new_bracket");
  const FibTable f(2 * n + 3);
  return ExactInteger(3 * n + 2) * f[2 * n + 3] + ExactInteger(n - 2) * f[2 * n + 2] -
         ExactInteger(n + 2) * detail::alternating_sign(n);
}

inline ExactInteger wiener_gamma_closed_new(int n) {
  return divide_exact(wiener_new_bracket(n), 25);
}

/// Σₖ (f_k f_{n−k+1})², the gap W(Γₙ) − Mo(Γₙ).
inline ExactInteger square_cut_sum(int n) {
  detail::require_at_least(n, 1, "square_cut_sum");
  const FibTable f(n);
  ExactInteger total = 0;
  for (int k = 1; k <= n; ++k) {
    const ExactInteger cut = f[k] * f[n - k + 1];
    total += cut * cut;
  }
  return total;
}

}  // namespace fibcube
