#include "ghz/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "ghz/counting.hpp"
#include "ghz/game.hpp"
#include "ghz/stats.hpp"

namespace ghz {

using nlohmann::json;

std::string to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::QuantumPerfect: return "quantum_perfect";
    case StrategyKind::QuantumNoisy: return "quantum_noisy";
    case StrategyKind::Deterministic: return "deterministic";
    case StrategyKind::Mixture: return "mixture";
    case StrategyKind::Table1: return "table1";
  }
  return "?";
}

std::string to_string(InputMode m) {
  switch (m) {
    case InputMode::UniformPromise: return "uniform_promise";
    case InputMode::Fixed: return "fixed";
    case InputMode::Exhaustive: return "exhaustive";
  }
  return "?";
}

StrategyKind strategy_kind_from_string(const std::string& s) {
  if (s == "quantum_perfect") return StrategyKind::QuantumPerfect;
  if (s == "quantum_noisy") return StrategyKind::QuantumNoisy;
  if (s == "deterministic") return StrategyKind::Deterministic;
  if (s == "mixture") return StrategyKind::Mixture;
  if (s == "table1") return StrategyKind::Table1;
  throw std::invalid_argument("unknown strategy kind '" + s + "'");
}

GhzResource::GhzResource(int n, bool state_vector_backend)
    : n_(n), state_vector_(state_vector_backend), measured_(static_cast<std::size_t>(n)) {
  if (n < 1 || n > BitString::kMaxBits) {
    throw std::invalid_argument("GhzResource: player count out of range");
  }
  if (state_vector_) psi_ = std::make_unique<QuantumState>(build_ghz(n));
}

int GhzResource::measure(int player, bool apply_phase, SplitMix64& rng) {
  if (player < 0 || player >= n_) {
    throw std::out_of_range("GhzResource: player index out of range");
  }
  if (measured_[static_cast<std::size_t>(player)]) {
    throw std::logic_error("GhzResource: qubit measured twice");
  }
  measured_[static_cast<std::size_t>(player)] = true;
  if (state_vector_) {
    if (apply_phase) *psi_ = apply_single_qubit(*psi_, player, phase_s_gate());
    *psi_ = apply_single_qubit(*psi_, player, hadamard_gate());
    auto [bit, collapsed] = measure_qubit(*psi_, player, rng.next_double());
    *psi_ = std::move(collapsed);
    return bit;
  }
  // Outcome law of the measured protocol: the first n-1 measured qubits are
  // unbiased, the last closes the answer parity set by the phase count.
  phase_count_ += apply_phase ? 1 : 0;
  ++measured_count_;
  if (measured_count_ < n_) {
    const int bit = rng.next_bit();
    parity_so_far_ ^= bit;
    return bit;
  }
  if (phase_count_ % 2 != 0) {
    // off-promise question: the law is uniform over all answers
    return rng.next_bit();
  }
  return ((phase_count_ / 2) % 2) ^ parity_so_far_;
}

BitString referee_round(const BitString& x, SharedSetup& setup,
                        std::span<const PlayerFn> players, std::uint64_t trial_seed) {
  if (static_cast<int>(players.size()) != x.size()) {
    throw std::invalid_argument("referee_round: player count mismatch");
  }
  std::uint64_t answer = 0;
  for (int i = 0; i < x.size(); ++i) {
    SplitMix64 rng = stream(trial_seed, static_cast<std::uint64_t>(i) + 1);
    const int bit = players[static_cast<std::size_t>(i)](setup, x.bit(i), rng);
    answer |= static_cast<std::uint64_t>(bit & 1) << i;
  }
  return BitString(x.size(), answer);
}

namespace {

bool is_quantum(StrategyKind k) {
  return k == StrategyKind::QuantumPerfect || k == StrategyKind::QuantumNoisy;
}

void validate_common(int n, StrategyKind kind,
                     const std::optional<NoiseModel>& noise,
                     const std::optional<DeterministicStrategy>& strategy,
                     const std::optional<StrategyMixture>& mixture) {
  if (n < kMinPlayers || n > BitString::kMaxBits) {
    throw std::invalid_argument("config: n must be in [3, 64]");
  }
  if (noise.has_value() != (kind == StrategyKind::QuantumNoisy)) {
    throw std::invalid_argument("config: noise model required exactly for quantum_noisy");
  }
  if (noise) {
    const double v = noise->kind == NoiseModel::Kind::BitFlip ? noise->p : noise->q;
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("config: noise level out of range");
  }
  if (strategy.has_value() != (kind == StrategyKind::Deterministic)) {
    throw std::invalid_argument("config: codes required exactly for deterministic");
  }
  if (strategy && strategy->players() != n) {
    throw std::invalid_argument("config: strategy player count differs from n");
  }
  if (mixture.has_value() != (kind == StrategyKind::Mixture)) {
    throw std::invalid_argument("config: mixture required exactly for mixture kind");
  }
  if (mixture && mixture->players() != n) {
    throw std::invalid_argument("config: mixture player count differs from n");
  }
}

}  // namespace

void MatchConfig::validate() const {
  validate_common(n, kind, noise, strategy, mixture);
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (input_mode == InputMode::Fixed) {
    if (!fixed_input) throw std::invalid_argument("config: fixed mode needs an input");
    if (fixed_input->size() != n) {
      throw std::invalid_argument("config: fixed input length differs from n");
    }
    if (!satisfies_promise(*fixed_input)) {
      throw std::invalid_argument("config: fixed input violates the promise");
    }
  } else if (fixed_input) {
    throw std::invalid_argument("config: input given but mode is not fixed");
  }
  if (input_mode == InputMode::Exhaustive && n > kEnumerationLimit) {
    throw std::invalid_argument("config: exhaustive mode limited to n <= 24");
  }
  if (oracle_backend) {
    if (!is_quantum(kind)) {
      throw std::invalid_argument("config: oracle backend is for quantum kinds");
    }
    if (n > kOracleLimit) {
      throw std::invalid_argument("config: oracle backend limited to n <= " +
                                  std::to_string(kOracleLimit));
    }
  }
}

namespace {

// Integer weights over a common denominator, for exact mixture sampling.
struct MixtureSampler {
  std::vector<std::uint64_t> cumulative;
  std::uint64_t total = 0;

  explicit MixtureSampler(const StrategyMixture& mix) {
    BigInt denom = 1;
    for (const Rational& w : mix.weights()) {
      denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(w));
    }
    if (denom > BigInt(1) << 62) {
      throw std::invalid_argument("mixture weights too fine-grained to sample");
    }
    BigInt acc = 0;
    cumulative.reserve(mix.size());
    for (const Rational& w : mix.weights()) {
      acc += boost::multiprecision::numerator(w) *
             (denom / boost::multiprecision::denominator(w));
      cumulative.push_back(acc.convert_to<std::uint64_t>());
    }
    total = cumulative.back();  // weights sum to 1, so this equals denom
  }

  std::size_t draw(SplitMix64& rng) const {
    const std::uint64_t r = rng.next_below(total);
    return static_cast<std::size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin());
  }
};

std::vector<PlayerFn> make_players(const MatchConfig& cfg, std::uint64_t* no_fire) {
  std::vector<PlayerFn> players;
  players.reserve(static_cast<std::size_t>(cfg.n));
  for (int i = 0; i < cfg.n; ++i) {
    switch (cfg.kind) {
      case StrategyKind::QuantumPerfect:
        players.push_back([i](SharedSetup& s, int bit, SplitMix64& rng) {
          return s.ghz->measure(i, bit == 1, rng);
        });
        break;
      case StrategyKind::QuantumNoisy:
        if (cfg.noise->kind == NoiseModel::Kind::BitFlip) {
          const double p = cfg.noise->p;
          players.push_back([i, p](SharedSetup& s, int bit, SplitMix64& rng) {
            int y = s.ghz->measure(i, bit == 1, rng);
            if (rng.next_double() >= p) y ^= 1;
            return y;
          });
        } else {
          const double q = cfg.noise->q;
          players.push_back([i, q, no_fire](SharedSetup& s, int bit, SplitMix64& rng) {
            int y = s.ghz->measure(i, bit == 1, rng);
            if (rng.next_double() >= q) {
              if (no_fire) ++*no_fire;
              y = rng.next_bit();
            }
            return y;
          });
        }
        break;
      case StrategyKind::Deterministic:
      case StrategyKind::Mixture:
      case StrategyKind::Table1:
        players.push_back([i](SharedSetup& s, int bit, SplitMix64&) {
          return s.strategy->output(i, bit);
        });
        break;
    }
  }
  return players;
}

BitString draw_promise_question(int n, SplitMix64& rng) {
  std::uint64_t bits = 0;
  int parity = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int b = rng.next_bit();
    bits |= static_cast<std::uint64_t>(b) << i;
    parity ^= b;
  }
  if (parity) bits |= 1ull << (n - 1);
  return BitString(n, bits);
}

struct WorkerTally {
  std::uint64_t wins = 0;
  std::uint64_t no_fire = 0;
  std::map<std::string, PerInputCount> per_input;
};

}  // namespace

MatchStats run_match(const MatchConfig& cfg, int workers) {
  cfg.validate();
  if (workers < 1) throw std::invalid_argument("run_match: workers must be >= 1");

  const DeterministicStrategy table1 =
      cfg.kind == StrategyKind::Table1 ? simple_optimal_strategy(cfg.n)
                                       : DeterministicStrategy(cfg.n, 0, 0);
  const std::optional<MixtureSampler> sampler =
      cfg.kind == StrategyKind::Mixture ? std::optional<MixtureSampler>(*cfg.mixture)
                                        : std::nullopt;

  auto run_range = [&](std::uint64_t begin, std::uint64_t end, WorkerTally& tally) {
    std::vector<PlayerFn> players = make_players(cfg, &tally.no_fire);
    for (std::uint64_t t = begin; t < end; ++t) {
      const std::uint64_t trial_seed = derive_seed(cfg.seed, t);
      SplitMix64 referee = stream(trial_seed, 0);

      // initialization phase: shared entanglement or shared randomness
      std::optional<GhzResource> ghz;
      const DeterministicStrategy* chosen = nullptr;
      switch (cfg.kind) {
        case StrategyKind::QuantumPerfect:
        case StrategyKind::QuantumNoisy:
          ghz.emplace(cfg.n, cfg.oracle_backend);
          break;
        case StrategyKind::Deterministic:
          chosen = &*cfg.strategy;
          break;
        case StrategyKind::Table1:
          chosen = &table1;
          break;
        case StrategyKind::Mixture:
          chosen = &cfg.mixture->support()[sampler->draw(referee)];
          break;
      }
      SharedSetup setup{ghz ? &*ghz : nullptr, chosen};

      // separation, then inputs
      BitString x = BitString::zeros(cfg.n);
      switch (cfg.input_mode) {
        case InputMode::UniformPromise:
          x = draw_promise_question(cfg.n, referee);
          break;
        case InputMode::Fixed:
          x = *cfg.fixed_input;
          break;
        case InputMode::Exhaustive:
          x = question_by_index(cfg.n, t % (1ull << (cfg.n - 1)));
          break;
      }

      const BitString y = referee_round(x, setup, players, trial_seed);
      const bool won = is_winning(x, y);
      tally.wins += won ? 1 : 0;
      if (cfg.per_input_breakdown) {
        PerInputCount& c = tally.per_input[x.str()];
        c.trials += 1;
        c.wins += won ? 1 : 0;
      }
    }
  };

  std::vector<WorkerTally> tallies(static_cast<std::size_t>(workers));
  if (workers == 1) {
    run_range(0, cfg.trials, tallies[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t per = cfg.trials / static_cast<std::uint64_t>(workers);
    const std::uint64_t extra = cfg.trials % static_cast<std::uint64_t>(workers);
    std::uint64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t len = per + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
      threads.emplace_back(run_range, begin, begin + len,
                           std::ref(tallies[static_cast<std::size_t>(w)]));
      begin += len;
    }
    for (std::thread& th : threads) th.join();
  }

  MatchStats stats;
  stats.trials = cfg.trials;
  for (const WorkerTally& t : tallies) {
    stats.wins += t.wins;
    stats.no_fire_count += t.no_fire;
    for (const auto& [key, count] : t.per_input) {
      PerInputCount& c = stats.per_input[key];
      c.wins += count.wins;
      c.trials += count.trials;
    }
  }
  stats.win_rate = static_cast<double>(stats.wins) / static_cast<double>(stats.trials);
  std::tie(stats.ci_low, stats.ci_high) = wilson_interval(stats.wins, stats.trials, 0.95);
  return stats;
}

std::string stats_to_json(const MatchConfig& cfg, const MatchStats& stats) {
  json j;
  json& c = j["config"];
  c["n"] = cfg.n;
  c["strategy"] = to_string(cfg.kind);
  c["trials"] = cfg.trials;
  c["seed"] = cfg.seed;
  c["input_mode"] = to_string(cfg.input_mode);
  if (cfg.noise) {
    c["noise"]["kind"] =
        cfg.noise->kind == NoiseModel::Kind::BitFlip ? "bit_flip" : "detector";
    if (cfg.noise->kind == NoiseModel::Kind::BitFlip) {
      c["noise"]["p"] = cfg.noise->p;
    } else {
      c["noise"]["q"] = cfg.noise->q;
    }
  }
  if (cfg.strategy) c["codes"] = cfg.strategy->str();
  if (cfg.mixture) c["mixture_size"] = cfg.mixture->size();
  if (cfg.fixed_input) c["input"] = cfg.fixed_input->str();
  if (cfg.oracle_backend) c["oracle_backend"] = true;

  json& s = j["stats"];
  s["trials"] = stats.trials;
  s["wins"] = stats.wins;
  s["win_rate"] = stats.win_rate;
  s["ci_low"] = stats.ci_low;
  s["ci_high"] = stats.ci_high;
  if (cfg.noise && cfg.noise->kind == NoiseModel::Kind::Detector) {
    s["no_fire_count"] = stats.no_fire_count;
  }
  if (cfg.per_input_breakdown) {
    json& p = s["per_input"];
    for (const auto& [key, count] : stats.per_input) {
      p[key] = {{"wins", count.wins}, {"trials", count.trials}};
    }
  }
  return j.dump();
}

ExhaustiveReport exhaustive_verify(const ExhaustiveConfig& cfg) {
  validate_common(cfg.n, cfg.kind, cfg.noise, cfg.strategy, cfg.mixture);
  if (cfg.n > kEnumerationLimit) {
    throw std::invalid_argument("exhaustive_verify limited to n <= 24");
  }
  if (is_quantum(cfg.kind)) {
    if (cfg.n > 16) {
      throw std::invalid_argument("exhaustive quantum sweeps limited to n <= 16");
    }
    if (cfg.samples_per_input < 1) {
      throw std::invalid_argument("exhaustive_verify: samples_per_input must be >= 1");
    }
  }
  if (cfg.cross_check_oracle) {
    if (cfg.kind != StrategyKind::QuantumPerfect) {
      throw std::invalid_argument("oracle cross-check is for quantum_perfect");
    }
    if (cfg.n > kOracleLimit) {
      throw std::invalid_argument("oracle cross-check limited to n <= " +
                                  std::to_string(kOracleLimit));
    }
  }

  const std::optional<DeterministicStrategy> strat =
      cfg.kind == StrategyKind::Table1
          ? std::optional<DeterministicStrategy>(simple_optimal_strategy(cfg.n))
          : cfg.strategy;

  ExhaustiveReport report;
  report.n = cfg.n;
  report.inputs = 1ull << (cfg.n - 1);
  const auto samples = static_cast<std::uint64_t>(cfg.samples_per_input);

  for (std::uint64_t i = 0; i < report.inputs; ++i) {
    const BitString x = question_by_index(cfg.n, i);
    bool input_won = false;
    switch (cfg.kind) {
      case StrategyKind::Deterministic:
      case StrategyKind::Table1: {
        input_won = is_winning(x, apply_strategy(*strat, x));
        report.per_input.emplace(x.str(), input_won ? "win" : "lose");
        break;
      }
      case StrategyKind::Mixture: {
        const Rational r = mixture_success(*cfg.mixture, x);
        input_won = r == 1;
        report.per_input.emplace(x.str(), r.str());
        break;
      }
      case StrategyKind::QuantumPerfect:
      case StrategyKind::QuantumNoisy: {
        const double p = cfg.noise ? cfg.noise->effective_reliability() : 1.0;
        std::uint64_t won = 0;
        for (std::uint64_t s = 0; s < samples; ++s) {
          SplitMix64 rng = stream(cfg.seed, i * samples + s);
          BitString y = analytic_sample(x, rng);
          if (cfg.kind == StrategyKind::QuantumNoisy) {
            for (int b = 0; b < cfg.n; ++b) {
              if (rng.next_double() >= p) y = y.with_bit(b, y.bit(b) ^ 1);
            }
          }
          if (is_winning(x, y)) ++won;
        }
        input_won = won == samples;
        report.per_input.emplace(
            x.str(), std::to_string(won) + "/" + std::to_string(samples));
        break;
      }
    }
    if (input_won) {
      ++report.inputs_won;
    } else if (report.losing_inputs.size() < 32) {
      report.losing_inputs.push_back(x.str());
    }
    if (cfg.cross_check_oracle) {
      const auto oracle = oracle_answer_distribution(x);
      const auto analytic = analytic_answer_distribution(x);
      for (const auto& [y, prob] : oracle) {
        if (!is_winning(x, y)) {
          throw std::logic_error("oracle support contains a losing answer");
        }
        const auto it = analytic.find(y);
        const double ref = it == analytic.end() ? 0.0 : it->second;
        report.max_oracle_deviation =
            std::max(report.max_oracle_deviation, std::abs(prob - ref));
      }
      for (const auto& [y, prob] : analytic) {
        const auto it = oracle.find(y);
        const double got = it == oracle.end() ? 0.0 : it->second;
        report.max_oracle_deviation =
            std::max(report.max_oracle_deviation, std::abs(prob - got));
      }
      report.oracle_checked = true;
    }
  }
  report.all_won = report.inputs_won == report.inputs;
  return report;
}

std::string report_to_json(const ExhaustiveReport& report) {
  json j;
  j["n"] = report.n;
  j["inputs"] = report.inputs;
  j["inputs_won"] = report.inputs_won;
  j["all_won"] = report.all_won;
  j["per_input"] = report.per_input;
  j["losing_inputs"] = report.losing_inputs;
  if (report.oracle_checked) {
    j["oracle_checked"] = true;
    j["max_oracle_deviation"] = report.max_oracle_deviation;
  }
  return j.dump();
}

}  // namespace ghz
