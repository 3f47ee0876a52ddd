#include "ghz/game.hpp"

#include <bit>
#include <stdexcept>

namespace ghz {

int hamming_weight(const BitString& x) { return x.hamming_weight(); }

bool satisfies_promise(const BitString& x) { return (x.hamming_weight() & 1) == 0; }

int target_parity(const BitString& x) { return (x.hamming_weight() >> 1) & 1; }

bool is_winning(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("is_winning: question and answer lengths differ");
  }
  if (!satisfies_promise(x)) {
    throw std::invalid_argument("is_winning: question '" + x.str() +
                                "' violates the promise");
  }
  return (y.hamming_weight() & 1) == target_parity(x);
}

static void check_enumeration_range(int n) {
  if (n < kMinPlayers || n > kEnumerationLimit) {
    throw std::invalid_argument("question enumeration requires 3 <= n <= " +
                                std::to_string(kEnumerationLimit) + ", got " +
                                std::to_string(n));
  }
}

BitString question_by_index(int n, std::uint64_t index) {
  check_enumeration_range(n);
  if (index >= (1ull << (n - 1))) {
    throw std::out_of_range("question_by_index: index beyond 2^(n-1)");
  }
  std::uint64_t bits = 0;
  int weight = 0;
  for (int pos = 0; pos < n - 1; ++pos) {
    // leftmost character carries the most significant index bit
    const std::uint64_t b = (index >> (n - 2 - pos)) & 1u;
    bits |= b << pos;
    weight += static_cast<int>(b);
  }
  if (weight & 1) bits |= 1ull << (n - 1);
  return BitString(n, bits);
}

std::vector<BitString> enumerate_questions(int n) {
  check_enumeration_range(n);
  const std::uint64_t count = 1ull << (n - 1);
  std::vector<BitString> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(question_by_index(n, i));
  return out;
}

void for_each_question(int n, const std::function<void(std::uint64_t)>& fn) {
  check_enumeration_range(n);
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t v = 0; v < limit; ++v) {
    if ((std::popcount(v) & 1) == 0) fn(v);
  }
}

DyadicRational classical_bound(int n) {
  if (n < kMinPlayers) {
    throw std::invalid_argument("classical_bound requires n >= 3");
  }
  const unsigned k = static_cast<unsigned>((n + 1) / 2);  // ceil(n/2)
  return DyadicRational(pow2(k - 1) + 1, k);
}

}  // namespace ghz
