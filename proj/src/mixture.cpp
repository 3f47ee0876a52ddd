#include "ghz/mixture.hpp"

#include <stdexcept>

#include "ghz/game.hpp"

namespace ghz {

StrategyMixture::StrategyMixture(std::vector<DeterministicStrategy> support,
                                 std::vector<Rational> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  if (support_.empty()) throw std::invalid_argument("mixture: empty support");
  if (support_.size() != weights_.size()) {
    throw std::invalid_argument("mixture: support/weight size mismatch");
  }
  const int n = support_.front().players();
  Rational sum = 0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i].players() != n) {
      throw std::invalid_argument("mixture: strategies disagree on player count");
    }
    if (weights_[i] <= 0) throw std::invalid_argument("mixture: weights must be positive");
    sum += weights_[i];
  }
  if (sum != 1) throw std::invalid_argument("mixture: weights must sum to exactly 1");
}

StrategyMixture StrategyMixture::single(DeterministicStrategy s) {
  std::vector<DeterministicStrategy> support{std::move(s)};
  return StrategyMixture(std::move(support), {Rational(1)});
}

StrategyMixture StrategyMixture::uniform(std::vector<DeterministicStrategy> support) {
  const Rational w(1, static_cast<unsigned long long>(support.size()));
  std::vector<Rational> weights(support.size(), w);
  return StrategyMixture(std::move(support), std::move(weights));
}

int StrategyMixture::players() const { return support_.front().players(); }

Rational mixture_success(const StrategyMixture& mix, const BitString& x) {
  if (mix.players() != x.size()) {
    throw std::invalid_argument("mixture_success: player count mismatch");
  }
  if (!satisfies_promise(x)) {
    throw std::invalid_argument("mixture_success: question '" + x.str() +
                                "' violates the promise");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < mix.size(); ++i) {
    if (is_winning(x, apply_strategy(mix.support()[i], x))) total += mix.weights()[i];
  }
  return total;
}

Rational mixture_worst_case(const StrategyMixture& mix) {
  const int n = mix.players();
  if (n < kMinPlayers || n > kEnumerationLimit) {
    throw std::invalid_argument("mixture_worst_case requires 3 <= n <= " +
                                std::to_string(kEnumerationLimit));
  }
  Rational worst = 1;
  for_each_question(n, [&](std::uint64_t q) {
    const Rational v = mixture_success(mix, BitString(n, q));
    if (v < worst) worst = v;
  });
  return worst;
}

}  // namespace ghz
