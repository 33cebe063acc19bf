// bit_word.hpp: fixed-length binary word used as a cube vertex label.
//
// Coordinates are 1-based and read left to right as the word is written:
// coordinate 1 is the leftmost character. A word of length n is packed into
// a machine integer whose binary rendering (most significant bit first,
// zero-padded to n digits) is the written word, so coordinate k lives at
// bit position n - k. Ascending packed value is lexicographic order.
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibcube {

class BitWord {
 public:
  static constexpr int kMaxLength = 63;

  constexpr BitWord() = default;

  constexpr BitWord(int length, std::uint64_t packed) : length_(length), packed_(packed) {
    if (length < 0 || length > kMaxLength) throw std::invalid_argument("BitWord: bad length");
    if (length < 64 && (packed >> length) != 0)
      throw std::invalid_argument("BitWord: packed value wider than length");
  }

  static BitWord parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxLength))
      throw std::invalid_argument("BitWord: word too long");
    std::uint64_t packed = 0;
    for (char c : text) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("BitWord: invalid character in \"" + std::string(text) + "\"");
      packed = (packed << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitWord(static_cast<int>(text.size()), packed);
  }

  constexpr int length() const { return length_; }
  constexpr std::uint64_t packed() const { return packed_; }

  static constexpr std::uint64_t coordinate_mask(int length, int k) {
    return std::uint64_t{1} << (length - k);
  }

  constexpr bool at(int k) const {
    check_coordinate(k);
    return (packed_ & coordinate_mask(length_, k)) != 0;
  }

  constexpr BitWord with(int k, bool bit) const {
    check_coordinate(k);
    const std::uint64_t mask = coordinate_mask(length_, k);
    return BitWord(length_, bit ? (packed_ | mask) : (packed_ & ~mask));
  }

  constexpr BitWord reversed() const {
    std::uint64_t out = 0;
    for (int i = 0; i < length_; ++i)
      out |= ((packed_ >> i) & 1u) << (length_ - 1 - i);
    return BitWord(length_, out);
  }

  constexpr int weight() const { return std::popcount(packed_); }

  /// No two adjacent coordinates both 1.
  constexpr bool is_fibonacci() const { return (packed_ & (packed_ >> 1)) == 0; }

  /// Fibonacci, and not both the first and the last coordinate set.
  constexpr bool is_lucas() const {
    if (!is_fibonacci()) return false;
    if (length_ == 0) return true;
    return !(at(1) && at(length_));
  }

  std::string str() const {
    std::string out(static_cast<std::size_t>(length_), '0');
    for (int k = 1; k <= length_; ++k)
      if (at(k)) out[static_cast<std::size_t>(k - 1)] = '1';
    return out;
  }

  constexpr auto operator<=>(const BitWord&) const = default;

 private:
  constexpr void check_coordinate(int k) const {
    if (k < 1 || k > length_) throw std::out_of_range("BitWord: coordinate out of range");
  }

  int length_ = 0;
  std::uint64_t packed_ = 0;
};

inline int hamming_distance(const BitWord& a, const BitWord& b) {
  if (a.length() != b.length()) throw std::invalid_argument("hamming_distance: length mismatch");
  return std::popcount(a.packed() ^ b.packed());
}

}  // namespace fibcube
