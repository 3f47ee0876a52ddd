#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghz/bigint.hpp"
#include "ghz/bitstring.hpp"
#include "ghz/counting.hpp"
#include "ghz/dyadic.hpp"

namespace ghz {

// Full per-input sweeps of the uniform-over-optimal mixture are kept to
// this many players. The per-class counting makes each input O(1) after a
// small dynamic program per input weight, so the limit is generous.
inline constexpr int kConjectureLimit = 14;

// Success probability on question x of the uniform mixture over ALL optimal
// deterministic strategies, computed by class counting: a dynamic program
// over players tallies code assignments by (k, flip parity, output parity),
// and only the optimal (k, parity) classes contribute. No strategy set is
// materialized. The value depends on x only through its weight.
Rational uniform_optimal_success(const BitString& x);

struct ConjectureReport {
  int n = 0;
  DyadicRational bound;
  BigInt optimal_count;
  std::vector<StrategyClass> optimal_classes;
  std::map<std::string, Rational> per_input;
  bool all_equal_bound = false;
  // First (lexicographic) question whose value differs from the bound.
  std::optional<std::string> counterexample;
};

// Evaluates the uniform-over-optimal mixture on every promise question and
// reports whether every value equals the bound exactly. A counterexample is
// reported, never asserted away.
ConjectureReport conjecture_check(int n);

}  // namespace ghz
