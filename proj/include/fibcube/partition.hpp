// partition.hpp: Mₙ(x, y, z) = a·x + b·y + c·z, Mostar contributions split by edge class
// of the decomposition Γₙ = 0Γₙ₋₁ + 10Γₙ₋₂.
//   a: edges inside 0Γₙ₋₁
//   b: link edges between 00Γₙ₋₂ and 10Γₙ₋₂
//   c: edges inside 10Γₙ₋₂
#pragma once

#include "fibcube/exact_integer.hpp"

#include <string>

namespace fibcube {

struct PartitionPolynomial {
  ExactInteger a;
  ExactInteger b;
  ExactInteger c;

  ExactInteger evaluate(const ExactInteger& x, const ExactInteger& y, const ExactInteger& z) const {
    return a * x + b * y + c * z;
  }

  /// Mₙ(1,1,1) = Mo(Γₙ).
  ExactInteger total() const { return a + b + c; }

  std::string str() const {
    return "(" + to_decimal(a) + ", " + to_decimal(b) + ", " + to_decimal(c) + ")";
  }

  friend bool operator==(const PartitionPolynomial&, const PartitionPolynomial&) = default;
};

}  // namespace fibcube
