// exact_integer.hpp: arbitrary-precision signed integer used for every count and index value.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibcube {

// Expression templates off so arithmetic results are plain values (safe with auto and templates).
using ExactInteger =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

inline std::string to_decimal(const ExactInteger& value) { return value.str(); }

inline ExactInteger from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  std::size_t i = (text.front() == '-') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("bad decimal string");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("bad decimal string: " + std::string(text));
  return ExactInteger(std::string(text));
}

// Quotient of an exact division; throws std::logic_error when divisor does not divide.
inline ExactInteger divide_exact(const ExactInteger& dividend, const ExactInteger& divisor) {
  ExactInteger quotient, remainder;
  boost::multiprecision::divide_qr(dividend, divisor, quotient, remainder);
  if (remainder != 0)
    throw std::logic_error("inexact division: " + to_decimal(dividend) + " / " +
                           to_decimal(divisor));
  return quotient;
}

inline bool divides(const ExactInteger& divisor, const ExactInteger& dividend) {
  return dividend % divisor == 0;
}

}  // namespace fibcube
