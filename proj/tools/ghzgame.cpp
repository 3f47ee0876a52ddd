// Command-line front end: exact bounds and class tables, the quantum
// protocol (closed form and state vector), the uniform-over-optimal mixture
// report, noise thresholds, and the Monte Carlo referee.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 usage error.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ghz/conjecture.hpp"
#include "ghz/counting.hpp"
#include "ghz/game.hpp"
#include "ghz/harness.hpp"
#include "ghz/mixture.hpp"
#include "ghz/noise.hpp"
#include "ghz/quantum.hpp"
#include "ghz/rng.hpp"

using namespace ghz;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string bound_str(const DyadicRational& b) {
  return b.fraction_str() + " = " + b.decimal_str();
}

int cmd_bound(int n, bool as_json) {
  const DyadicRational b = classical_bound(n);
  if (as_json) {
    json j{{"n", n}, {"bound", b.fraction_str()}, {"decimal", b.to_double()}};
    std::cout << j.dump() << "\n";
  } else if (b.log2_den() <= 64) {
    std::cout << "n = " << n << "\nclassical bound: " << bound_str(b) << "\n";
  } else {
    // the exact decimal expansion would be thousands of digits
    std::cout << "n = " << n << "\nclassical bound: " << b.fraction_str() << " ~= "
              << b.to_double() << "\n";
  }
  return kExitOk;
}

int cmd_quantum(int n, const std::string& input, std::uint64_t trials,
                std::uint64_t seed, bool oracle, bool as_json) {
  if (!input.empty()) {
    const BitString x = BitString::parse(input);
    if (x.size() != n) throw std::invalid_argument("--input length differs from --n");
    if (!satisfies_promise(x)) {
      throw std::invalid_argument("input '" + input + "' violates the promise");
    }
    const auto analytic = analytic_answer_distribution(x);
    double max_dev = 0.0;
    bool support_wins = true;
    if (oracle) {
      const auto observed = oracle_answer_distribution(x);
      for (const auto& [y, p] : observed) {
        support_wins = support_wins && is_winning(x, y);
        const auto it = analytic.find(y);
        max_dev =
            std::max(max_dev, std::abs(p - (it == analytic.end() ? 0.0 : it->second)));
      }
      for (const auto& [y, p] : analytic) {
        if (!observed.count(y)) max_dev = std::max(max_dev, p);
      }
    }
    const bool verified = !oracle || (support_wins && max_dev <= 1e-12);
    if (as_json) {
      json dist;
      for (const auto& [y, p] : analytic) dist[y.str()] = p;
      json j{{"n", n},
             {"input", x.str()},
             {"answer_parity", target_parity(x) ? "odd" : "even"},
             {"support_size", analytic.size()},
             {"distribution", dist}};
      if (oracle) {
        j["oracle_max_deviation"] = max_dev;
        j["oracle_support_wins"] = support_wins;
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "input " << x.str() << ": answers are uniform over the "
                << (target_parity(x) ? "odd" : "even") << "-weight strings ("
                << analytic.size() << " outcomes, probability "
                << analytic.begin()->second << " each)\n";
      if (analytic.size() <= 64) {
        for (const auto& [y, p] : analytic) {
          std::cout << "  " << y.str() << "  " << p << "\n";
        }
      }
      if (oracle) {
        std::cout << "state-vector check: max deviation " << max_dev
                  << (verified ? " (match)" : " (MISMATCH)") << "\n";
      }
    }
    return verified ? kExitOk : kExitVerifyFail;
  }

  MatchConfig cfg;
  cfg.n = n;
  cfg.kind = StrategyKind::QuantumPerfect;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.oracle_backend = oracle;
  const MatchStats stats = run_match(cfg);
  if (as_json) {
    std::cout << stats_to_json(cfg, stats) << "\n";
  } else {
    std::cout << "quantum strategy, n = " << n << ", " << trials << " trials (seed "
              << seed << (oracle ? ", state-vector backend" : "") << "): won "
              << stats.wins << "/" << stats.trials << "\n";
  }
  return stats.wins == stats.trials ? kExitOk : kExitVerifyFail;
}

int cmd_enumerate(int n, bool as_json, bool as_csv) {
  const DyadicRational bound = classical_bound(n);
  const BestDeterministic best = best_deterministic(n);
  json classes = json::array();
  if (!as_json && !as_csv) {
    std::cout << "n = " << n << ", promise questions = " << (1ull << (n - 1))
              << ", bound = " << bound_str(bound) << "\n";
    std::cout << "  k  flip  wins        proportion\n";
  }
  if (as_csv) std::cout << "k,flip_parity,wins,proportion,optimal\n";
  for (int k = 0; k <= n; ++k) {
    for (int parity = 0; parity <= 1; ++parity) {
      const StrategyClass cls{k, parity};
      const BigInt wins = winning_count(n, cls);
      const DyadicRational prop(wins, static_cast<unsigned>(n - 1));
      const bool optimal = prop == bound;
      if (as_json) {
        classes.push_back(json{{"k", k},
                               {"flip_parity", parity},
                               {"wins", wins.str()},
                               {"proportion", prop.fraction_str()},
                               {"decimal", prop.to_double()},
                               {"optimal", optimal}});
      } else if (as_csv) {
        std::cout << k << "," << parity << "," << wins.str() << ","
                  << prop.fraction_str() << "," << (optimal ? 1 : 0) << "\n";
      } else {
        std::printf("%3d  %4d  %-10s  %s%s\n", k, parity, wins.str().c_str(),
                    bound_str(prop).c_str(), optimal ? "   * optimal" : "");
      }
    }
  }
  if (as_json) {
    json j{{"n", n},
           {"bound", bound.fraction_str()},
           {"decimal", bound.to_double()},
           {"classes", classes},
           {"optimal_class_count", best.optimal_classes.size()}};
    std::cout << j.dump() << "\n";
  }
  return kExitOk;
}

int cmd_table1(int n, bool verify, bool as_json) {
  const DeterministicStrategy s = simple_optimal_strategy(n);
  const DyadicRational prop = proportion(s);
  const DyadicRational bound = classical_bound(n);
  bool ok = prop == bound;
  std::uint64_t brute_wins = 0;
  if (verify && n <= kEnumerationLimit) {
    for_each_question(n, [&](std::uint64_t q) {
      const BitString x(n, q);
      if (is_winning(x, apply_strategy(s, x))) ++brute_wins;
    });
    ok = ok && DyadicRational(brute_wins, static_cast<unsigned>(n - 1)) == bound;
  }
  if (as_json) {
    json j{{"n", n},
           {"codes", s.str()},
           {"proportion", prop.fraction_str()},
           {"decimal", prop.to_double()},
           {"bound", bound.fraction_str()},
           {"optimal", ok}};
    if (verify && n <= kEnumerationLimit) j["brute_force_wins"] = brute_wins;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n = " << n << " (row " << n % 8 << "): " << s.str() << "\n";
    std::cout << "exact proportion " << bound_str(prop) << ", bound "
              << bound_str(bound) << (ok ? " -- optimal" : " -- NOT OPTIMAL") << "\n";
    if (verify && n <= kEnumerationLimit) {
      std::cout << "verified by enumeration: wins " << brute_wins << "/"
                << (1ull << (n - 1)) << "\n";
    }
  }
  return ok ? kExitOk : kExitVerifyFail;
}

int cmd_conjecture(int n, bool as_json) {
  const ConjectureReport report = conjecture_check(n);
  if (as_json) {
    json classes = json::array();
    for (const StrategyClass& cls : report.optimal_classes) {
      classes.push_back(json{{"k", cls.k}, {"flip_parity", cls.flip_parity}});
    }
    json per_input;
    for (const auto& [input, value] : report.per_input) per_input[input] = value.str();
    json j{{"n", n},
           {"bound", report.bound.fraction_str()},
           {"optimal_count", report.optimal_count.str()},
           {"classes", classes},
           {"per_input", per_input},
           {"all_equal_bound", report.all_equal_bound}};
    if (report.counterexample) j["counterexample"] = *report.counterexample;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n = " << n << ": uniform mixture over " << report.optimal_count.str()
              << " optimal strategies, bound " << bound_str(report.bound) << "\n";
    std::cout << "per-input success over " << report.per_input.size()
              << " promise questions: ";
    if (report.all_equal_bound) {
      std::cout << "all equal the bound exactly\n";
    } else {
      std::cout << "MISMATCH, first counterexample " << *report.counterexample << " -> "
                << report.per_input.at(*report.counterexample).str() << "\n";
    }
  }
  return report.all_equal_bound ? kExitOk : kExitVerifyFail;
}

int cmd_noise(int n, double p, bool threshold_mode, int n_max, double q,
              const std::string& out_file, bool as_json) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) throw std::invalid_argument("cannot open '" + out_file + "'");
    out = &file;
  }
  if (threshold_mode) {
    const std::vector<double> ps = {0.85, 0.90, 0.95, 1.0};
    const auto rows = threshold_table(3, n_max, ps);
    if (as_json) {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back(json{{"n", r.n}, {"e_n", r.e_n}, {"bound", r.bound}, {"p_n", r.p_n}});
      }
      *out << arr.dump() << "\n";
    } else {
      *out << "n,e_n,bound,p_n@0.85,p_n@0.90,p_n@0.95,p_n@1.00\n";
      for (const auto& r : rows) {
        *out << r.n << "," << r.e_n << "," << r.bound;
        for (double v : r.p_n) *out << "," << v;
        *out << "\n";
      }
    }
    return kExitOk;
  }
  if (q >= 0.0) {
    const double flip = detector_to_flip(q);
    const auto min_n = min_players_for_advantage(flip, n_max);
    if (as_json) {
      json j{{"q", q},
             {"effective_p", flip},
             {"beats_limit", q > 1.0 / std::sqrt(2.0)},
             {"min_players", min_n ? json(*min_n) : json(nullptr)},
             {"n_max", n_max}};
      *out << j.dump() << "\n";
    } else {
      *out << "detector efficiency q = " << q << " -> reliability p = " << flip << "\n";
      *out << "q > 1/sqrt(2) = 0.7071...: " << (q > 1.0 / std::sqrt(2.0) ? "yes" : "no")
           << "\n";
      if (min_n) {
        *out << "first advantage at n = " << *min_n << " (searched up to " << n_max
             << ")\n";
      } else {
        *out << "no advantage up to n = " << n_max << "\n";
      }
    }
    return kExitOk;
  }
  // single (n, p) analysis
  const double pn = noisy_success(n, p);
  const double e = threshold(n);
  const double bound = classical_bound(n).to_double();
  if (as_json) {
    json j{{"n", n},
           {"p", p},
           {"p_n", pn},
           {"e_n", e},
           {"bound", bound},
           {"advantage", pn > bound + 1e-12}};
    *out << j.dump() << "\n";
  } else {
    *out << "n = " << n << ", p = " << p << "\n";
    *out << "noisy success p_n = " << pn << ", threshold e_n = " << e
         << ", bound = " << bound << "\n";
    *out << "beats every classical strategy: " << (pn > bound + 1e-12 ? "yes" : "no")
         << "\n";
  }
  return kExitOk;
}

int cmd_match(int n, const std::string& kind_str, double p, double q,
              const std::string& codes, std::uint64_t trials, std::uint64_t seed,
              const std::string& input, bool exhaustive, int workers, bool per_input,
              bool oracle, bool as_json) {
  MatchConfig cfg;
  cfg.n = n;
  cfg.kind = strategy_kind_from_string(kind_str);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.oracle_backend = oracle;
  cfg.per_input_breakdown = per_input;
  if (cfg.kind == StrategyKind::QuantumNoisy) {
    if (p >= 0.0 && q >= 0.0) {
      throw std::invalid_argument("give either --p or --q, not both");
    }
    if (q >= 0.0) {
      cfg.noise = NoiseModel::detector(q);
    } else if (p >= 0.0) {
      cfg.noise = NoiseModel::bit_flip(p);
    } else {
      throw std::invalid_argument("quantum_noisy needs --p or --q");
    }
  }
  if (cfg.kind == StrategyKind::Deterministic) {
    if (codes.empty()) throw std::invalid_argument("deterministic needs --codes");
    cfg.strategy = DeterministicStrategy::parse(codes);
  }
  if (cfg.kind == StrategyKind::Mixture) {
    // uniform over every optimal strategy (materialized, so n <= 8)
    cfg.mixture = StrategyMixture::uniform(enumerate_optimal_strategies(n));
  }
  if (!input.empty() && exhaustive) {
    throw std::invalid_argument("give either --input or --exhaustive, not both");
  }
  if (!input.empty()) {
    cfg.input_mode = InputMode::Fixed;
    cfg.fixed_input = BitString::parse(input);
  } else if (exhaustive) {
    cfg.input_mode = InputMode::Exhaustive;
  }
  const MatchStats stats = run_match(cfg, workers);
  if (as_json) {
    std::cout << stats_to_json(cfg, stats) << "\n";
  } else {
    std::cout << to_string(cfg.kind) << ", n = " << n << ", trials = " << stats.trials
              << ", seed = " << seed << "\n";
    std::cout << "wins " << stats.wins << " (rate " << stats.win_rate << ", 95% CI ["
              << stats.ci_low << ", " << stats.ci_high << "])\n";
    if (cfg.noise && cfg.noise->kind == NoiseModel::Kind::Detector) {
      std::cout << "detector no-fires: " << stats.no_fire_count << "\n";
    }
    if (per_input) {
      for (const auto& [key, count] : stats.per_input) {
        std::cout << "  " << key << "  " << count.wins << "/" << count.trials << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_lemmas(int n_max, bool as_json) {
  int checked_sums = 0;
  int failed_sums = 0;
  for (int n = 0; n <= std::min(n_max, 64); ++n) {
    for (int a = 0; a <= 3; ++a) {
      BigInt direct = 0;
      for (int i = a; i <= n; i += 4) direct += binomial(n, i);
      ++checked_sums;
      if (binomial_sum_mod4(n, a) != direct) ++failed_sums;
    }
  }
  int checked_counts = 0;
  int failed_counts = 0;
  const int count_max = std::min(n_max, 19);
  for (int n = 3; n <= count_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      // expansion route and direct enumeration route
      const BigInt expansion = set_size(n, k, 0, 0) + set_size(n, k, 1, 1);
      BigInt enumerated = 0;
      const std::uint64_t prefix = k == 0 ? 0 : (1ull << k) - 1;
      for_each_question(n, [&](std::uint64_t x) {
        const int pa = std::popcount(x & prefix) % 2;
        const int w4 = std::popcount(x) % 4;
        if ((pa == 0 && w4 == 0) || (pa == 1 && w4 == 2)) ++enumerated;
      });
      ++checked_counts;
      if (winning_count(n, StrategyClass{k, 0}) != expansion || expansion != enumerated) {
        ++failed_counts;
      }
    }
  }
  const bool ok = failed_sums == 0 && failed_counts == 0;
  if (as_json) {
    json j{{"binomial_sum_cases", checked_sums},
           {"binomial_sum_failures", failed_sums},
           {"winning_count_cases", checked_counts},
           {"winning_count_failures", failed_counts},
           {"all_passed", ok}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "residue-class binomial sums: " << checked_sums << " cases, "
              << failed_sums << " failures\n";
    std::cout << "winning-count case tables:   " << checked_counts << " cases, "
              << failed_counts << " failures\n";
    std::cout << (ok ? "all sweeps passed\n" : "SWEEPS FAILED\n");
  }
  return ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "n-player parity game: perfect quantum strategy, exact classical analysis, "
      "noise thresholds, Monte Carlo referee"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // bound
  auto b_n = std::make_shared<int>(3);
  auto b_js = std::make_shared<bool>(false);
  {
    auto* sub = app.add_subcommand("bound", "exact optimum of deterministic strategies");
    sub->add_option("--n", *b_n, "player count")->required();
    sub->add_flag("--json", *b_js, "emit JSON");
    sub->callback([&exit_code, b_n, b_js] { exit_code = cmd_bound(*b_n, *b_js); });
  }

  // quantum
  auto q_n = std::make_shared<int>(3);
  auto q_input = std::make_shared<std::string>();
  auto q_trials = std::make_shared<std::uint64_t>(1000);
  auto q_seed = std::make_shared<std::uint64_t>(1);
  auto q_oracle = std::make_shared<bool>(false);
  auto q_js = std::make_shared<bool>(false);
  {
    auto* sub = app.add_subcommand("quantum", "run or cross-check the quantum strategy");
    sub->add_option("--n", *q_n, "player count")->required();
    sub->add_option("--input", *q_input, "fixed question (bits)");
    sub->add_option("--trials", *q_trials, "sampled rounds on uniform promise questions");
    sub->add_option("--seed", *q_seed, "random seed");
    sub->add_flag("--oracle", *q_oracle, "use/cross-check the state-vector backend");
    sub->add_flag("--json", *q_js, "emit JSON");
    sub->callback([&exit_code, q_n, q_input, q_trials, q_seed, q_oracle, q_js] {
      exit_code = cmd_quantum(*q_n, *q_input, *q_trials, *q_seed, *q_oracle, *q_js);
    });
  }

  // enumerate
  auto e_n = std::make_shared<int>(3);
  auto e_js = std::make_shared<bool>(false);
  auto e_csv = std::make_shared<bool>(false);
  {
    auto* sub = app.add_subcommand("enumerate", "per-class proportion table");
    sub->add_option("--n", *e_n, "player count")->required();
    sub->add_flag("--json", *e_js, "emit JSON");
    sub->add_flag("--csv", *e_csv, "emit CSV");
    sub->callback(
        [&exit_code, e_n, e_js, e_csv] { exit_code = cmd_enumerate(*e_n, *e_js, *e_csv); });
  }

  // table1
  auto t_n = std::make_shared<int>(3);
  auto t_verify = std::make_shared<bool>(false);
  auto t_js = std::make_shared<bool>(false);
  {
    auto* sub = app.add_subcommand("table1", "the hands-off optimal strategy");
    sub->add_option("--n", *t_n, "player count")->required();
    sub->add_flag("--verify", *t_verify, "re-check by full enumeration (n <= 24)");
    sub->add_flag("--json", *t_js, "emit JSON");
    sub->callback([&exit_code, t_n, t_verify, t_js] {
      exit_code = cmd_table1(*t_n, *t_verify, *t_js);
    });
  }

  // conjecture
  auto c_n = std::make_shared<int>(3);
  auto c_js = std::make_shared<bool>(false);
  {
    auto* sub = app.add_subcommand(
        "conjecture", "uniform-over-optimal mixture: per-input success report");
    sub->add_option("--n", *c_n,
                    "player count (3.." + std::to_string(kConjectureLimit) + ")")
        ->required();
    sub->add_flag("--json", *c_js, "emit JSON");
    sub->callback([&exit_code, c_n, c_js] { exit_code = cmd_conjecture(*c_n, *c_js); });
  }

  // noise
  auto no_n = std::make_shared<int>(3);
  auto no_p = std::make_shared<double>(-1.0);
  auto no_thr = std::make_shared<bool>(false);
  auto no_nmax = std::make_shared<int>(400);
  auto no_q = std::make_shared<double>(-1.0);
  auto no_det = std::make_shared<bool>(false);
  auto no_out = std::make_shared<std::string>();
  auto no_js = std::make_shared<bool>(false);
  {
    auto* sub = app.add_subcommand("noise", "imperfect-apparatus analyses");
    sub->add_option("--n", *no_n, "player count");
    sub->add_option("--p", *no_p, "per-player reliability");
    sub->add_flag("--threshold", *no_thr, "emit the threshold table up to --n-max");
    sub->add_option("--n-max", *no_nmax, "table/search limit");
    sub->add_flag("--detector", *no_det, "detector-efficiency mode (needs --q)");
    sub->add_option("--q", *no_q, "detector efficiency")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--out", *no_out, "write to a file instead of stdout");
    sub->add_flag("--json", *no_js, "emit JSON");
    sub->callback([&exit_code, no_n, no_p, no_thr, no_nmax, no_q, no_det, no_js, no_out] {
      if (*no_det && *no_q < 0.0) {
        throw std::invalid_argument("--detector needs --q");
      }
      if (!*no_thr && *no_q < 0.0 && *no_p < 0.0) {
        throw std::invalid_argument("need --p, --threshold, or --detector --q");
      }
      exit_code = cmd_noise(*no_n, *no_p, *no_thr, *no_nmax, *no_q, *no_out, *no_js);
    });
  }

  // match
  auto m_n = std::make_shared<int>(3);
  auto m_kind = std::make_shared<std::string>();
  auto m_p = std::make_shared<double>(-1.0);
  auto m_q = std::make_shared<double>(-1.0);
  auto m_codes = std::make_shared<std::string>();
  auto m_trials = std::make_shared<std::uint64_t>(10000);
  auto m_seed = std::make_shared<std::uint64_t>(0);
  auto m_input = std::make_shared<std::string>();
  auto m_exh = std::make_shared<bool>(false);
  auto m_workers = std::make_shared<int>(1);
  auto m_per = std::make_shared<bool>(false);
  auto m_oracle = std::make_shared<bool>(false);
  auto m_js = std::make_shared<bool>(false);
  {
    auto* sub = app.add_subcommand("match", "Monte Carlo referee");
    sub->add_option("--n", *m_n, "player count")->required();
    sub->add_option("--strategy", *m_kind,
                    "quantum_perfect | quantum_noisy | deterministic | mixture | table1")
        ->required();
    sub->add_option("--p", *m_p, "bit-flip reliability (quantum_noisy)");
    sub->add_option("--q", *m_q, "detector efficiency (quantum_noisy)");
    sub->add_option("--codes", *m_codes, "per-player codes, e.g. 11,00,01");
    sub->add_option("--trials", *m_trials, "number of refereed rounds");
    sub->add_option("--seed", *m_seed, "random seed");
    sub->add_option("--input", *m_input, "fixed question");
    sub->add_flag("--exhaustive", *m_exh, "cycle through all promise questions");
    sub->add_option("--workers", *m_workers, "worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("--per-input", *m_per, "per-question breakdown");
    sub->add_flag("--oracle", *m_oracle, "state-vector backend (quantum kinds)");
    sub->add_flag("--json", *m_js, "emit JSON");
    sub->callback([&exit_code, m_n, m_kind, m_p, m_q, m_codes, m_trials, m_seed, m_input,
                   m_exh, m_workers, m_per, m_oracle, m_js] {
      exit_code = cmd_match(*m_n, *m_kind, *m_p, *m_q, *m_codes, *m_trials, *m_seed,
                            *m_input, *m_exh, *m_workers, *m_per, *m_oracle, *m_js);
    });
  }

  // lemmas
  auto l_nmax = std::make_shared<int>(64);
  auto l_js = std::make_shared<bool>(false);
  {
    auto* sub = app.add_subcommand("lemmas", "closed-form equivalence sweeps");
    sub->add_option("--n-max", *l_nmax, "sweep limit")->check(CLI::Range(3, 64));
    sub->add_flag("--json", *l_js, "emit JSON");
    sub->callback([&exit_code, l_nmax, l_js] { exit_code = cmd_lemmas(*l_nmax, *l_js); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
