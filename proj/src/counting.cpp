#include "ghz/counting.hpp"

#include <stdexcept>

#include "ghz/game.hpp"

namespace ghz {

BigInt binomial_sum_mod4(int n, int a) {
  if (a < 0 || a > 3) throw std::invalid_argument("binomial_sum_mod4: a must be in 0..3");
  if (n < 0) throw std::invalid_argument("binomial_sum_mod4: n must be nonnegative");
  if (n < 3) {
    BigInt sum = 0;
    for (int i = a; i <= n; i += 4) sum += binomial(n, i);
    return sum;
  }
  switch (((n - 2 * a) % 8 + 8) % 8) {
    case 0:
      return pow2(n - 2) + pow2(n / 2 - 1);
    case 4:
      return pow2(n - 2) - pow2(n / 2 - 1);
    case 2:
    case 6:
      return pow2(n - 2);
    case 1:
    case 7:
      return pow2(n - 2) + pow2((n - 3) / 2);
    default:  // 3, 5
      return pow2(n - 2) - pow2((n - 3) / 2);
  }
}

BigInt set_size(int n, int k, int a, int b) {
  if (n < kMinPlayers) throw std::invalid_argument("set_size: n must be >= 3");
  if (k < 0 || k > n) throw std::invalid_argument("set_size: k must be in 0..n");
  if ((a != 0 && a != 1) || (b != 0 && b != 1)) {
    throw std::invalid_argument("set_size: a and b must be bits");
  }
  // Split the total weight i+j (prefix i over k bits, suffix j over n-k)
  // by residue mod 4: i runs over {a, a+2}, j makes the total 2b.
  BigInt total = 0;
  for (int i : {a, a + 2}) {
    const int imod = i % 4;
    const int jmod = ((2 * b - imod) % 4 + 4) % 4;
    total += binomial_sum_mod4(k, imod) * binomial_sum_mod4(n - k, jmod);
  }
  return total;
}

BigInt winning_count(int n, const StrategyClass& cls) {
  if (n < kMinPlayers) throw std::invalid_argument("winning_count: n must be >= 3");
  if (cls.k < 0 || cls.k > n) throw std::invalid_argument("winning_count: k out of range");
  if (cls.flip_parity != 0 && cls.flip_parity != 1) {
    throw std::invalid_argument("winning_count: flip parity must be a bit");
  }
  BigInt even_flip_count;  // |S^k_{0,0}| + |S^k_{1,1}|
  if (n % 2 == 1) {
    const int r = ((n - 1) / 2 + 3 * (n - cls.k)) % 4;
    even_flip_count = (r == 0 || r == 3) ? pow2(n - 2) + pow2((n - 3) / 2)
                                         : pow2(n - 2) - pow2((n - 3) / 2);
  } else {
    const int r = (n / 2 + 3 * (n - cls.k)) % 4;
    if (r == 1 || r == 3) {
      even_flip_count = pow2(n - 2);
    } else if (r == 0) {
      even_flip_count = pow2(n - 2) + pow2(n / 2 - 1);
    } else {
      even_flip_count = pow2(n - 2) - pow2(n / 2 - 1);
    }
  }
  return cls.flip_parity ? pow2(n - 1) - even_flip_count : even_flip_count;
}

DyadicRational proportion(const DeterministicStrategy& s) {
  const int n = s.players();
  if (n < kMinPlayers) throw std::invalid_argument("proportion: n must be >= 3");
  return DyadicRational(winning_count(n, classify(s)), static_cast<unsigned>(n - 1));
}

BestDeterministic best_deterministic(int n) {
  if (n < kMinPlayers || n > kEnumerationLimit) {
    throw std::invalid_argument("best_deterministic requires 3 <= n <= " +
                                std::to_string(kEnumerationLimit));
  }
  BigInt best_count = -1;
  for (int k = 0; k <= n; ++k) {
    for (int parity = 0; parity <= 1; ++parity) {
      const BigInt c = winning_count(n, StrategyClass{k, parity});
      if (c > best_count) best_count = c;
    }
  }
  BestDeterministic result;
  result.best = DyadicRational(best_count, static_cast<unsigned>(n - 1));
  for (int k = 0; k <= n; ++k) {
    for (int parity = 0; parity <= 1; ++parity) {
      if (winning_count(n, StrategyClass{k, parity}) == best_count) {
        result.optimal_classes.push_back(StrategyClass{k, parity});
      }
    }
  }
  return result;
}

DeterministicStrategy simple_optimal_strategy(int n) {
  if (n < kMinPlayers) {
    throw std::invalid_argument("simple_optimal_strategy requires n >= 3");
  }
  // Keyed on n mod 8: player 1's code, then one code for players 2..n.
  static constexpr PlayerCode kRows[8][2] = {
      {PlayerCode::Zero, PlayerCode::Zero},    // 0
      {PlayerCode::Zero, PlayerCode::Zero},    // 1
      {PlayerCode::Copy, PlayerCode::Zero},    // 2
      {PlayerCode::One, PlayerCode::One},      // 3
      {PlayerCode::One, PlayerCode::Zero},     // 4
      {PlayerCode::One, PlayerCode::One},      // 5
      {PlayerCode::Negate, PlayerCode::Zero},  // 6
      {PlayerCode::Zero, PlayerCode::Zero},    // 7
  };
  std::vector<PlayerCode> codes(static_cast<std::size_t>(n), kRows[n % 8][1]);
  codes[0] = kRows[n % 8][0];
  return DeterministicStrategy::from_codes(codes);
}

std::vector<DeterministicStrategy> enumerate_optimal_strategies(int n) {
  if (n < kMinPlayers || n > 8) {
    throw std::invalid_argument("enumerate_optimal_strategies requires 3 <= n <= 8");
  }
  // Per-class counts fit comfortably in 64 bits here.
  std::vector<std::uint64_t> counts(2 * static_cast<std::size_t>(n + 1));
  std::uint64_t best = 0;
  for (int k = 0; k <= n; ++k) {
    for (int parity = 0; parity <= 1; ++parity) {
      const auto c =
          winning_count(n, StrategyClass{k, parity}).convert_to<std::uint64_t>();
      counts[static_cast<std::size_t>(2 * k + parity)] = c;
      if (c > best) best = c;
    }
  }
  std::vector<DeterministicStrategy> out;
  const std::uint64_t total = 1ull << (2 * n);
  for (std::uint64_t enc = 0; enc < total; ++enc) {
    const DeterministicStrategy s = DeterministicStrategy::from_encoding(n, enc);
    const StrategyClass cls = classify(s);
    if (counts[static_cast<std::size_t>(2 * cls.k + cls.flip_parity)] == best) {
      out.push_back(s);
    }
  }
  return out;
}

BigInt count_optimal_strategies(int n) {
  if (n < kMinPlayers) {
    throw std::invalid_argument("count_optimal_strategies requires n >= 3");
  }
  const BestDeterministic best = best_deterministic(n);
  // Class (k, parity) holds C(n,k) placements, 2^k 01/10 choices split by
  // negator count l, and constant codes split by the count m of ones, with
  // l + m matching the parity.
  auto half_sum = [](int t, int residue) -> BigInt {
    // sum of C(t, m) over m = residue (mod 2)
    if (t == 0) return residue == 0 ? 1 : 0;
    return pow2(t - 1);
  };
  BigInt total = 0;
  for (const StrategyClass& cls : best.optimal_classes) {
    BigInt per_placement = 0;
    for (int l = 0; l <= cls.k; ++l) {
      per_placement +=
          binomial(cls.k, l) * half_sum(n - cls.k, (cls.flip_parity - l % 2 + 2) % 2);
    }
    total += binomial(n, cls.k) * per_placement;
  }
  return total;
}

}  // namespace ghz
