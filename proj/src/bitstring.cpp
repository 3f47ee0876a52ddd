#include "ghz/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace ghz {

BitString::BitString(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxBits) {
    throw std::invalid_argument("BitString: length must be in [1, 64], got " +
                                std::to_string(n));
  }
  if (n < kMaxBits && (bits >> n) != 0) {
    throw std::invalid_argument("BitString: packed value has bits beyond length");
  }
}

BitString BitString::parse(const std::string& text) {
  if (text.empty() || text.size() > kMaxBits) {
    throw std::invalid_argument("BitString: expected 1..64 characters");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= 1ull << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("BitString: invalid character '" +
                                  std::string(1, text[i]) + "'");
    }
  }
  return BitString(static_cast<int>(text.size()), bits);
}

BitString BitString::zeros(int n) { return BitString(n, 0); }

int BitString::bit(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("BitString: bit index out of range");
  return static_cast<int>((bits_ >> i) & 1u);
}

BitString BitString::with_bit(int i, int value) const {
  if (i < 0 || i >= n_) throw std::out_of_range("BitString: bit index out of range");
  const std::uint64_t mask = 1ull << i;
  return BitString(n_, value ? (bits_ | mask) : (bits_ & ~mask));
}

int BitString::hamming_weight() const { return std::popcount(bits_); }

std::string BitString::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

bool operator<(const BitString& a, const BitString& b) {
  const int common = a.n_ < b.n_ ? a.n_ : b.n_;
  for (int i = 0; i < common; ++i) {
    const int ai = static_cast<int>((a.bits_ >> i) & 1u);
    const int bi = static_cast<int>((b.bits_ >> i) & 1u);
    if (ai != bi) return ai < bi;
  }
  return a.n_ < b.n_;
}

}  // namespace ghz
