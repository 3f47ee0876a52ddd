#pragma once

#include <vector>

#include "ghz/bigint.hpp"
#include "ghz/dyadic.hpp"
#include "ghz/strategy.hpp"

namespace ghz {

// Sum of C(n, i) over i = a (mod 4). Closed form branches on (n - 2a) mod 8
// for n >= 3; below that the closed form has fractional exponents, so the
// sum is taken directly.
BigInt binomial_sum_mod4(int n, int a);

// Number of even-weight questions x of length n with
//   weight(x_1..x_k) = a (mod 2)  and  weight(x) = 2b (mod 4),
// expanded as products of binomial_sum_mod4 terms over the k-prefix and the
// (n-k)-suffix.
BigInt set_size(int n, int k, int a, int b);

// Number of promise questions a strategy of the given class answers
// correctly, out of 2^(n-1). Closed form: with
//   r = (n-1)/2 + 3(n-k) mod 4   (n odd)
//   r = n/2 + 3(n-k) mod 4       (n even)
// the flip_parity=0 count is 2^(n-2) +/- 2^((n-3)/2) (odd n; + for r in
// {0,3}) or 2^(n-2), 2^(n-2) +/- 2^(n/2-1) (even n; r odd, r=0, r=2).
// flip_parity=1 takes the complement within 2^(n-1).
BigInt winning_count(int n, const StrategyClass& cls);

// Exact success proportion of a deterministic strategy over the uniform
// promise distribution.
DyadicRational proportion(const DeterministicStrategy& s);

struct BestDeterministic {
  DyadicRational best;
  std::vector<StrategyClass> optimal_classes;  // k ascending, parity ascending
};

// Maximum proportion over all 4^n strategies, found by scanning the
// 2(n+1) classes, together with every class achieving it.
BestDeterministic best_deterministic(int n);

// The hands-off optimal strategy keyed on n mod 8: one code for player 1,
// one shared by everyone else. Constant except when n = 2 (mod 4).
DeterministicStrategy simple_optimal_strategy(int n);

// All strategies achieving the optimum, materialized from the 4^n sweep.
// Kept to n <= 8; count_optimal_strategies covers larger n.
std::vector<DeterministicStrategy> enumerate_optimal_strategies(int n);

// |{s : proportion(s) = classical_bound(n)}| by per-class combinatorics.
BigInt count_optimal_strategies(int n);

}  // namespace ghz
