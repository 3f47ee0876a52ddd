#include "ghz/conjecture.hpp"

#include <stdexcept>

#include "ghz/game.hpp"

namespace ghz {

namespace {

// dp[(k*2 + flip)*2 + out]: number of per-player code assignments with k
// input-sensitive players, the given flip parity, and answer parity out on
// a question of weight w. Players are interchangeable, so only w matters.
std::vector<BigInt> class_output_counts(int n, int w) {
  const auto idx = [](int k, int f, int o) {
    return static_cast<std::size_t>((k * 2 + f) * 2 + o);
  };
  std::vector<BigInt> dp(static_cast<std::size_t>(n + 1) * 4, BigInt(0));
  dp[idx(0, 0, 0)] = 1;
  for (int player = 0; player < n; ++player) {
    const int b = player < w ? 1 : 0;  // this player's input bit
    std::vector<BigInt> next(dp.size(), BigInt(0));
    for (int k = 0; k <= player; ++k) {
      for (int f = 0; f < 2; ++f) {
        for (int o = 0; o < 2; ++o) {
          const BigInt& c = dp[idx(k, f, o)];
          if (c == 0) continue;
          next[idx(k, f, o)] += c;                      // code 00: output 0
          next[idx(k, f ^ 1, o ^ 1)] += c;              // code 11: output 1
          next[idx(k + 1, f, o ^ b)] += c;              // code 01: copy
          next[idx(k + 1, f ^ 1, o ^ b ^ 1)] += c;      // code 10: negate
        }
      }
    }
    dp = std::move(next);
  }
  return dp;
}

struct WeightSummary {
  BigInt winners;
  BigInt total;
};

WeightSummary uniform_optimal_summary(int n, int w) {
  const BestDeterministic best = best_deterministic(n);
  const std::vector<BigInt> dp = class_output_counts(n, w);
  const auto idx = [](int k, int f, int o) {
    return static_cast<std::size_t>((k * 2 + f) * 2 + o);
  };
  const int target = (w / 2) % 2;
  WeightSummary out{0, 0};
  for (const StrategyClass& cls : best.optimal_classes) {
    out.winners += dp[idx(cls.k, cls.flip_parity, target)];
    out.total += dp[idx(cls.k, cls.flip_parity, 0)] + dp[idx(cls.k, cls.flip_parity, 1)];
  }
  return out;
}

}  // namespace

Rational uniform_optimal_success(const BitString& x) {
  const int n = x.size();
  if (n < kMinPlayers) {
    throw std::invalid_argument("uniform_optimal_success requires n >= 3");
  }
  if (!satisfies_promise(x)) {
    throw std::invalid_argument("uniform_optimal_success: question '" + x.str() +
                                "' violates the promise");
  }
  const WeightSummary s = uniform_optimal_summary(n, x.hamming_weight());
  return Rational(s.winners, s.total);
}

ConjectureReport conjecture_check(int n) {
  if (n < kMinPlayers || n > kConjectureLimit) {
    throw std::invalid_argument("conjecture_check requires 3 <= n <= " +
                                std::to_string(kConjectureLimit));
  }
  ConjectureReport report;
  report.n = n;
  report.bound = classical_bound(n);
  report.optimal_classes = best_deterministic(n).optimal_classes;
  report.optimal_count = count_optimal_strategies(n);
  const Rational bound = report.bound.to_rational();

  // One dynamic program per even weight; every question of that weight
  // shares the value.
  std::vector<Rational> by_weight(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; w += 2) {
    const WeightSummary s = uniform_optimal_summary(n, w);
    by_weight[static_cast<std::size_t>(w)] = Rational(s.winners, s.total);
  }

  report.all_equal_bound = true;
  const std::uint64_t count = 1ull << (n - 1);
  for (std::uint64_t i = 0; i < count; ++i) {
    const BitString x = question_by_index(n, i);
    const Rational& v = by_weight[static_cast<std::size_t>(x.hamming_weight())];
    report.per_input.emplace(x.str(), v);
    if (v != bound && report.all_equal_bound) {
      report.all_equal_bound = false;
      report.counterexample = x.str();
    }
  }
  return report;
}

}  // namespace ghz
