#pragma once

#include <vector>

#include "ghz/bigint.hpp"
#include "ghz/bitstring.hpp"
#include "ghz/strategy.hpp"

namespace ghz {

// Probability distribution over deterministic strategies with exact weights.
// The shared random variable of the initialization phase picks the entry.
class StrategyMixture {
 public:
  StrategyMixture(std::vector<DeterministicStrategy> support,
                  std::vector<Rational> weights);

  static StrategyMixture single(DeterministicStrategy s);
  static StrategyMixture uniform(std::vector<DeterministicStrategy> support);

  int players() const;
  std::size_t size() const { return support_.size(); }
  const std::vector<DeterministicStrategy>& support() const { return support_; }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<DeterministicStrategy> support_;
  std::vector<Rational> weights_;
};

// Exact win probability of the mixture on one promise question.
Rational mixture_success(const StrategyMixture& mix, const BitString& x);

// Exact min over all promise questions; never exceeds the deterministic
// optimum.
Rational mixture_worst_case(const StrategyMixture& mix);

}  // namespace ghz
