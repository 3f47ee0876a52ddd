#include "ghz/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "ghz/game.hpp"

namespace ghz {

namespace {
void check_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
  }
}
void check_players(int n) {
  if (n < kMinPlayers) throw std::invalid_argument("n must be >= 3");
}
}  // namespace

NoiseModel NoiseModel::bit_flip(double p) {
  check_probability(p, "p");
  return NoiseModel{Kind::BitFlip, p, 1.0};
}

NoiseModel NoiseModel::detector(double q) {
  check_probability(q, "q");
  return NoiseModel{Kind::Detector, 1.0, q};
}

double NoiseModel::effective_reliability() const {
  return kind == Kind::BitFlip ? p : detector_to_flip(q);
}

double noisy_success(int n, double p) {
  check_players(n);
  check_probability(p, "p");
  return 0.5 + std::pow(2.0 * p - 1.0, n) / 2.0;
}

double threshold(int n) {
  check_players(n);
  return 0.5 + std::pow(std::sqrt(2.0), 1.0 + 1.0 / n) / 4.0;
}

double detector_to_flip(double q) {
  check_probability(q, "q");
  return (1.0 + q) / 2.0;
}

std::optional<int> min_players_for_advantage(double p, int n_max) {
  check_probability(p, "p");
  if (n_max < kMinPlayers) throw std::invalid_argument("n_max must be >= 3");
  for (int n = kMinPlayers; n <= n_max; ++n) {
    // the exact bound converted to double; 1e-12 slack absorbs rounding
    if (noisy_success(n, p) > classical_bound(n).to_double() + 1e-12) return n;
  }
  return std::nullopt;
}

std::vector<ThresholdRow> threshold_table(int n_min, int n_max,
                                          const std::vector<double>& sample_ps) {
  check_players(n_min);
  if (n_max < n_min) throw std::invalid_argument("n_max must be >= n_min");
  std::vector<ThresholdRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    ThresholdRow row;
    row.n = n;
    row.e_n = threshold(n);
    row.bound = classical_bound(n).to_double();
    row.p_n.reserve(sample_ps.size());
    for (double p : sample_ps) row.p_n.push_back(noisy_success(n, p));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ghz
