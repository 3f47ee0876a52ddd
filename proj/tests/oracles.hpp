#pragma once

// Brute-force reference computations used as independent oracles.
// Everything here enumerates; none of it touches the closed forms under test.

#include <bit>
#include <cstdint>
#include <vector>

#include "ghz/bigint.hpp"
#include "ghz/bitstring.hpp"
#include "ghz/strategy.hpp"

namespace oracles {

// sum of C(n, i) over i = a (mod 4), by direct summation
inline ghz::BigInt direct_binomial_sum_mod4(int n, int a) {
  ghz::BigInt sum = 0;
  for (int i = a; i <= n; i += 4) sum += ghz::binomial(n, i);
  return sum;
}

// |S^k_{a,b}| by walking every even-weight string
inline ghz::BigInt brute_force_set_size(int n, int k, int a, int b) {
  ghz::BigInt count = 0;
  const std::uint64_t limit = 1ull << n;
  const std::uint64_t prefix_mask = k == 0 ? 0 : (k == 64 ? ~0ull : (1ull << k) - 1);
  for (std::uint64_t x = 0; x < limit; ++x) {
    const int total = std::popcount(x);
    if (total % 2 != 0) continue;
    if (std::popcount(x & prefix_mask) % 2 != a) continue;
    if (total % 4 != 2 * b) continue;
    ++count;
  }
  return count;
}

// promise questions won by the strategy, by evaluating every one
inline std::uint64_t brute_force_winning_count(const ghz::DeterministicStrategy& s) {
  const int n = s.players();
  std::uint64_t wins = 0;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t x = 0; x < limit; ++x) {
    const int w = std::popcount(x);
    if (w % 2 != 0) continue;
    const std::uint64_t y = ghz::apply_strategy_packed(s.mask0(), s.mask1(), x);
    if (std::popcount(y & (limit - 1)) % 2 == (w / 2) % 2) ++wins;
  }
  return wins;
}

inline std::vector<ghz::BitString> brute_force_promise_inputs(int n) {
  std::vector<ghz::BitString> out;
  for (std::uint64_t x = 0; x < (1ull << n); ++x) {
    if (std::popcount(x) % 2 == 0) out.emplace_back(n, x);
  }
  return out;
}

}  // namespace oracles
