// sequences.hpp: exact Fibonacci and Lucas numbers.
#pragma once

#include "fibcube/exact_integer.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fibcube {

namespace detail {

inline void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index " + std::to_string(n));
}

// x_n for x_n = x_{n-1} + x_{n-2} with the given seeds.
inline ExactInteger linear_two_term(int n, ExactInteger x0, ExactInteger x1) {
  if (n == 0) return x0;
  for (int i = 1; i < n; ++i) {
    ExactInteger next = x0 + x1;
    x0 = std::move(x1);
    x1 = std::move(next);
  }
  return x1;
}

}  // namespace detail

/// f_n with f_0 = 0, f_1 = 1.
inline ExactInteger fib(int n) {
  detail::require_nonnegative(n, "fib");
  return detail::linear_two_term(n, 0, 1);
}

/// L_n with L_0 = 2, L_1 = 1.
inline ExactInteger lucas(int n) {
  detail::require_nonnegative(n, "lucas");
  return detail::linear_two_term(n, 2, 1);
}

/// f_0 .. f_last inclusive. Summation formulas index into this instead of calling fib() per term.
class FibTable {
 public:
  explicit FibTable(int last) {
    detail::require_nonnegative(last, "FibTable");
    values_.reserve(static_cast<std::size_t>(last) + 1);
    values_.emplace_back(0);
    if (last >= 1) values_.emplace_back(1);
    for (int i = 2; i <= last; ++i)
      values_.push_back(values_[i - 1] + values_[i - 2]);
  }

  const ExactInteger& operator[](int n) const {
    if (n < 0 || n > last())
      throw std::out_of_range("FibTable: index " + std::to_string(n) + " outside [0, " +
                              std::to_string(last()) + "]");
    return values_[static_cast<std::size_t>(n)];
  }

  int last() const { return static_cast<int>(values_.size()) - 1; }

 private:
  std::vector<ExactInteger> values_;
};

}  // namespace fibcube
