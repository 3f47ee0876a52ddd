#pragma once

#include <optional>
#include <vector>

namespace ghz {

// Two models of imperfect players. bit_flip: each player independently
// outputs the predicted bit with probability p, the complement otherwise.
// detector: the apparatus fires with probability q; on no-fire the player
// outputs a uniformly random bit (the no-fire event is never reported to
// the referee).
struct NoiseModel {
  enum class Kind { BitFlip, Detector };

  Kind kind = Kind::BitFlip;
  double p = 1.0;
  double q = 1.0;

  static NoiseModel bit_flip(double p);
  static NoiseModel detector(double q);

  // Per-player probability of outputting the predicted bit.
  double effective_reliability() const;
};

// Win probability of the noisy protocol: 1/2 + (2p-1)^n / 2, the chance of
// an even number of flipped outputs.
double noisy_success(int n, double p);

// e_n = 1/2 + sqrt(2)^(1+1/n) / 4. For odd n, p > e_n is exactly the
// condition for the noisy protocol to beat every classical strategy.
double threshold(int n);

// Detector efficiency q maps to bit-flip reliability (1+q)/2.
double detector_to_flip(double q);

// Smallest n in [3, n_max] where the noisy protocol beats the classical
// bound, if any. Empty whenever 2p-1 <= 1/sqrt(2).
std::optional<int> min_players_for_advantage(double p, int n_max);

struct ThresholdRow {
  int n = 0;
  double e_n = 0.0;
  double bound = 0.0;
  std::vector<double> p_n;  // noisy_success at the sample reliabilities
};

std::vector<ThresholdRow> threshold_table(int n_min, int n_max,
                                          const std::vector<double>& sample_ps);

}  // namespace ghz
