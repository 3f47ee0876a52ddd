#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghz/bitstring.hpp"
#include "ghz/game.hpp"
#include "ghz/mixture.hpp"
#include "ghz/noise.hpp"
#include "ghz/quantum.hpp"
#include "ghz/rng.hpp"
#include "ghz/strategy.hpp"

namespace ghz {

enum class StrategyKind {
  QuantumPerfect,
  QuantumNoisy,
  Deterministic,
  Mixture,
  Table1,
};

enum class InputMode { UniformPromise, Fixed, Exhaustive };

std::string to_string(StrategyKind k);
std::string to_string(InputMode m);
StrategyKind strategy_kind_from_string(const std::string& s);

// One trial's entangled resource. Each player touches only its own qubit:
// optionally the phase gate, then Hadamard, then measurement. The
// state-vector backend executes that literally (n <= kOracleLimit); the
// analytic backend samples the identical outcome law lazily, so any n fits.
class GhzResource {
 public:
  GhzResource(int n, bool state_vector_backend);

  int players() const { return n_; }
  // A player may measure its qubit exactly once.
  int measure(int player, bool apply_phase, SplitMix64& rng);

 private:
  int n_;
  bool state_vector_;
  std::vector<bool> measured_;
  // analytic backend
  int phase_count_ = 0;
  int measured_count_ = 0;
  int parity_so_far_ = 0;
  // state-vector backend
  std::unique_ptr<QuantumState> psi_;
};

// Everything a player carries out of the initialization phase: a handle to
// this trial's shared entangled state, or the deterministic strategy the
// shared randomness selected. Exactly one is set.
struct SharedSetup {
  GhzResource* ghz = nullptr;
  const DeterministicStrategy* strategy = nullptr;
};

// A player is a function of the shared setup, its own input bit and its own
// random stream — the signature is the no-communication guarantee: there is
// no parameter through which another player's input could arrive.
using PlayerFn = std::function<int(SharedSetup& shared, int own_bit, SplitMix64& own_rng)>;

// One refereed round: hand player i its bit of x plus a stream derived from
// (trial_seed, i+1), collect the answer bits.
BitString referee_round(const BitString& x, SharedSetup& setup,
                        std::span<const PlayerFn> players, std::uint64_t trial_seed);

struct MatchConfig {
  int n = kMinPlayers;
  StrategyKind kind = StrategyKind::QuantumPerfect;
  std::optional<NoiseModel> noise;                    // QuantumNoisy
  std::optional<DeterministicStrategy> strategy;      // Deterministic
  std::optional<StrategyMixture> mixture;             // Mixture
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  InputMode input_mode = InputMode::UniformPromise;
  std::optional<BitString> fixed_input;
  bool oracle_backend = false;  // state-vector resource, quantum kinds only
  bool per_input_breakdown = false;

  void validate() const;  // throws std::invalid_argument
};

struct PerInputCount {
  std::uint64_t wins = 0;
  std::uint64_t trials = 0;
  friend bool operator==(const PerInputCount&, const PerInputCount&) = default;
};

struct MatchStats {
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  double win_rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t no_fire_count = 0;  // detector model only
  std::map<std::string, PerInputCount> per_input;

  friend bool operator==(const MatchStats&, const MatchStats&) = default;
};

// Runs cfg.trials refereed rounds. Trial t draws every bit of randomness
// from streams keyed on (cfg.seed, t), so the result is identical for any
// worker count.
MatchStats run_match(const MatchConfig& cfg, int workers = 1);

// Canonical JSON document (sorted keys, stable float formatting); byte
// identical across worker counts.
std::string stats_to_json(const MatchConfig& cfg, const MatchStats& stats);

struct ExhaustiveConfig {
  int n = kMinPlayers;
  StrategyKind kind = StrategyKind::QuantumPerfect;
  std::optional<NoiseModel> noise;
  std::optional<DeterministicStrategy> strategy;
  std::optional<StrategyMixture> mixture;
  int samples_per_input = 100;      // sampled (quantum) kinds
  bool cross_check_oracle = false;  // n <= kOracleLimit
  std::uint64_t seed = 1;
};

struct ExhaustiveReport {
  int n = 0;
  std::uint64_t inputs = 0;
  std::uint64_t inputs_won = 0;  // inputs won exactly / with zero sampled losses
  bool all_won = false;
  // question -> "win"/"lose" (deterministic), exact rational (mixture),
  // or empirical rate (noisy quantum).
  std::map<std::string, std::string> per_input;
  std::vector<std::string> losing_inputs;  // capped at 32
  bool oracle_checked = false;
  double max_oracle_deviation = 0.0;
};

// Walks every promise question. Deterministic and mixture strategies are
// scored exactly; quantum kinds draw samples_per_input answers per question.
ExhaustiveReport exhaustive_verify(const ExhaustiveConfig& cfg);

std::string report_to_json(const ExhaustiveReport& report);

}  // namespace ghz
