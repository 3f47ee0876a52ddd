// Acceptance suite: one line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "ghz/conjecture.hpp"
#include "ghz/counting.hpp"
#include "ghz/game.hpp"
#include "ghz/harness.hpp"
#include "ghz/mixture.hpp"
#include "ghz/noise.hpp"
#include "ghz/quantum.hpp"
#include "ghz/rng.hpp"
#include "ghz/stats.hpp"
#include "oracles.hpp"

using namespace ghz;

namespace {

int g_failures = 0;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

void criterion(int number, const std::string& title, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty()) {
    std::printf("[PASS] criterion %2d: %s (%.2fs)\n", number, title.c_str(), secs);
  } else {
    std::printf("[FAIL] criterion %2d: %s (%.2fs) -- %s\n", number, title.c_str(), secs,
                failure.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

// 1. class-enumerated optimum equals 1/2 + 2^-ceil(n/2) exactly for n = 3..10,
//    and matches raw 4^n brute force on every strategy for n <= 8
void criterion_optimum_exact() {
  for (int n = 3; n <= 10; ++n) {
    require(best_deterministic(n).best == classical_bound(n),
            "class optimum != bound at n=" + std::to_string(n));
  }
  for (int n = 3; n <= 8; ++n) {
    const std::uint64_t strategies = 1ull << (2 * n);
    for (std::uint64_t enc = 0; enc < strategies; ++enc) {
      const auto s = DeterministicStrategy::from_encoding(n, enc);
      const BigInt closed = winning_count(n, classify(s));
      if (closed != oracles::brute_force_winning_count(s)) {
        require(false, "class count != brute force for " + s.str());
      }
    }
  }
}

// 2. residue-class binomial sums: closed form equals direct summation for
//    all n <= 64, a in 0..3 (256 cases, every residue pair mod 8)
void criterion_binomial_sums() {
  for (int n = 0; n <= 64; ++n) {
    for (int a = 0; a <= 3; ++a) {
      if (binomial_sum_mod4(n, a) != oracles::direct_binomial_sum_mod4(n, a)) {
        require(false,
                "mismatch at n=" + std::to_string(n) + " a=" + std::to_string(a));
      }
    }
  }
}

// 3. winning-count case tables equal brute-force set counts for 3<=n<=19
void criterion_case_tables() {
  for (int n = 3; n <= 19; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigInt even_flip = 0;
      for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
          const BigInt brute = oracles::brute_force_set_size(n, k, a, b);
          if (set_size(n, k, a, b) != brute) {
            require(false, "set size mismatch at n=" + std::to_string(n) +
                               " k=" + std::to_string(k));
          }
          if (a == b) even_flip += brute;
        }
      }
      require(winning_count(n, StrategyClass{k, 0}) == even_flip,
              "case table mismatch at n=" + std::to_string(n) +
                  " k=" + std::to_string(k));
      require(winning_count(n, StrategyClass{k, 1}) == pow2(n - 1) - even_flip,
              "complement mismatch at n=" + std::to_string(n));
    }
  }
}

// 4. the hands-off strategy achieves exactly the bound for all 3<=n<=19
void criterion_handsoff_optimal() {
  for (int n = 3; n <= 19; ++n) {
    require(proportion(simple_optimal_strategy(n)) == classical_bound(n),
            "not optimal at n=" + std::to_string(n));
  }
}

// 5. the sampler wins every promise input (100 samples each) for n <= 16;
//    the state-vector law equals the uniform parity-class law for n <= 6
void criterion_perfect_play() {
  for (int n = 3; n <= 16; ++n) {
    const std::uint64_t inputs = 1ull << (n - 1);
    for (std::uint64_t i = 0; i < inputs; ++i) {
      const BitString x = question_by_index(n, i);
      SplitMix64 rng = stream(9000 + static_cast<std::uint64_t>(n), i);
      for (int s = 0; s < 100; ++s) {
        if (!is_winning(x, analytic_sample(x, rng))) {
          require(false, "sampled loss at x=" + x.str());
        }
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    for (const BitString& x : enumerate_questions(n)) {
      const auto oracle = oracle_answer_distribution(x);
      const auto analytic = analytic_answer_distribution(x);
      require(oracle.size() == analytic.size(),
              "support mismatch at x=" + x.str());
      for (const auto& [y, p] : analytic) {
        const auto it = oracle.find(y);
        require(it != oracle.end() && std::abs(it->second - p) <= 1e-12,
                "distribution mismatch at x=" + x.str() + " y=" + y.str());
      }
    }
  }
}

// 6. noisy success closed form and Monte Carlo at (3, 0.9); thresholds
void criterion_noisy_numbers() {
  require(std::abs(noisy_success(3, 0.9) - 0.756) <= 1e-12, "closed form at (3,0.9)");
  double even_sum = 0.0;
  for (int i = 0; i <= 3; i += 2) {
    even_sum += binomial(3, i).convert_to<double>() * std::pow(0.9, 3 - i) *
                std::pow(0.1, i);
  }
  require(std::abs(noisy_success(3, 0.9) - even_sum) <= 1e-12, "binomial-sum route");

  MatchConfig cfg;
  cfg.n = 3;
  cfg.kind = StrategyKind::QuantumNoisy;
  cfg.noise = NoiseModel::bit_flip(0.9);
  cfg.trials = 1000000;
  cfg.seed = 600613;
  const MatchStats stats = run_match(cfg, 8);
  const double sigma = std::sqrt(0.756 * 0.244 / 1e6);
  require(std::abs(stats.win_rate - 0.756) <= 4 * sigma,
          "Monte Carlo rate " + std::to_string(stats.win_rate));

  require(std::abs(threshold(3) - 0.897) <= 5e-4, "e_3");
  require(std::abs(threshold(5) - 0.879) <= 5e-4, "e_5");
  require(std::abs(threshold(1000) - 0.853553) <= 1e-3, "e_1000");
}

// 7. detector efficiency: the corollary's change of variables
void criterion_detector() {
  const double limit = 0.5 + std::sqrt(2.0) / 4.0;
  require(std::abs(detector_to_flip(1.0 / std::sqrt(2.0)) - limit) <= 1e-12,
          "detector map at 1/sqrt(2)");
  require(min_players_for_advantage(detector_to_flip(0.72), 400).has_value(),
          "q=0.72 should reach an advantage");
  require(!min_players_for_advantage(detector_to_flip(0.70), 400).has_value(),
          "q=0.70 should not reach an advantage");
}

// 8. uniform mixture over all optimal strategies hits the bound on every
//    input, exactly, for n = 3..10
void criterion_uniform_optimal_mixture() {
  for (int n = 3; n <= 10; ++n) {
    const ConjectureReport report = conjecture_check(n);
    require(report.all_equal_bound,
            "counterexample at n=" + std::to_string(n) + ": " +
                report.counterexample.value_or("?"));
  }
}

// 9. worst case of any mixture never beats the deterministic optimum;
//    one constructed mixture achieves it at n = 3
void criterion_mixture_bound() {
  SplitMix64 rng(424242);
  for (int n = 3; n <= 6; ++n) {
    const Rational bound = classical_bound(n).to_rational();
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t size = 1 + static_cast<std::size_t>(rng.next_below(6));
      std::vector<DeterministicStrategy> support;
      std::vector<BigInt> raw;
      BigInt total = 0;
      for (std::size_t i = 0; i < size; ++i) {
        support.push_back(
            DeterministicStrategy::from_encoding(n, rng.next_below(1ull << (2 * n))));
        raw.emplace_back(1 + rng.next_below(1000));
        total += raw.back();
      }
      std::vector<Rational> weights;
      for (const BigInt& w : raw) weights.emplace_back(w, total);
      const StrategyMixture mix(std::move(support), std::move(weights));
      require(mixture_worst_case(mix) <= bound, "mixture beat the bound");
    }
  }
  const auto equalizer = StrategyMixture::uniform(enumerate_optimal_strategies(3));
  require(mixture_worst_case(equalizer) == Rational(3, 4),
          "uniform-over-optimal should achieve 3/4 at n=3");
}

// 10. identical (config, seed) gives byte-identical JSON across 1 and 8 workers
void criterion_determinism() {
  MatchConfig cfg;
  cfg.n = 3;
  cfg.kind = StrategyKind::QuantumNoisy;
  cfg.noise = NoiseModel::bit_flip(0.9);
  cfg.trials = 50000;
  cfg.seed = 12345;
  cfg.per_input_breakdown = true;
  require(stats_to_json(cfg, run_match(cfg, 1)) == stats_to_json(cfg, run_match(cfg, 8)),
          "noisy quantum stats differ across worker counts");

  MatchConfig det;
  det.n = 6;
  det.kind = StrategyKind::Table1;
  det.trials = 30000;
  det.seed = 99;
  det.per_input_breakdown = true;
  require(stats_to_json(det, run_match(det, 1)) == stats_to_json(det, run_match(det, 8)),
          "table strategy stats differ across worker counts");
}

}  // namespace

int main() {
  criterion(1, "deterministic optimum: exact bound for n=3..10, brute force to 4^8",
            criterion_optimum_exact);
  criterion(2, "residue-class binomial sums equal direct summation, n<=64",
            criterion_binomial_sums);
  criterion(3, "winning-count case tables equal brute-force set counts, n<=19",
            criterion_case_tables);
  criterion(4, "hands-off strategy achieves the exact bound, n=3..19",
            criterion_handsoff_optimal);
  criterion(5, "perfect play: sampler never loses (n<=16), state vector matches law",
            criterion_perfect_play);
  criterion(6, "noisy success: closed form, binomial sum, 10^6-trial run, thresholds",
            criterion_noisy_numbers);
  criterion(7, "detector efficiency maps onto the flip threshold",
            criterion_detector);
  criterion(8, "uniform-over-optimal mixture equals the bound on all inputs, n=3..10",
            criterion_uniform_optimal_mixture);
  criterion(9, "mixture worst case never beats the optimum; equality constructed at n=3",
            criterion_mixture_bound);
  criterion(10, "byte-identical stats JSON across 1 and 8 workers",
            criterion_determinism);

  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
