#pragma once

#include <cstdint>
#include <string>

namespace ghz {

// Fixed-length bit string; player i (1-based) owns string position i-1 and
// bit i-1 of the packed word. That single convention is used everywhere:
// the leftmost character of "0110" is player 1 and bit 0 of packed().
class BitString {
 public:
  static constexpr int kMaxBits = 64;

  BitString() = default;
  BitString(int n, std::uint64_t bits);

  static BitString parse(const std::string& text);
  static BitString zeros(int n);

  int size() const { return n_; }
  std::uint64_t packed() const { return bits_; }

  int bit(int i) const;
  BitString with_bit(int i, int value) const;

  int hamming_weight() const;
  std::string str() const;

  friend bool operator==(const BitString& a, const BitString& b) = default;
  // Lexicographic order of the string form.
  friend bool operator<(const BitString& a, const BitString& b);

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace ghz
