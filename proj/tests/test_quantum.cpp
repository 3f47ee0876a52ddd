#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ghz/game.hpp"
#include "ghz/quantum.hpp"
#include "ghz/rng.hpp"

using namespace ghz;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool states_equivalent(const QuantumState& a, const QuantumState& b) {
  // global phase is physically meaningless: compare |<a|b>|^2 to 1
  return std::abs(std::norm(overlap(a, b)) - 1.0) <= 1e-12;
}

}  // namespace

TEST_CASE("shared state construction") {
  const QuantumState ghz3 = build_ghz(3);
  CHECK(std::abs(ghz3.amplitude(0b000).real() - kInvSqrt2) < 1e-15);
  CHECK(std::abs(ghz3.amplitude(0b111).real() - kInvSqrt2) < 1e-15);
  for (std::uint64_t v = 1; v < 7; ++v) CHECK(std::abs(ghz3.amplitude(v)) == 0.0);

  const QuantumState one = build_ghz(1);
  CHECK(std::abs(one.amplitude(0).real() - kInvSqrt2) < 1e-15);
  CHECK(std::abs(one.amplitude(1).real() - kInvSqrt2) < 1e-15);

  CHECK(build_ghz(4).norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(build_ghz(0), std::invalid_argument);
  CHECK_THROWS_AS(build_ghz(kOracleLimit + 1), std::invalid_argument);
}

TEST_CASE("gate plumbing") {
  CHECK(hadamard_gate().is_unitary());
  CHECK(phase_s_gate().is_unitary());
  CHECK(identity_gate().is_unitary());

  const SingleQubitGate bad{{Complex(1.0), Complex(0.0), Complex(0.0), Complex(2.0)}};
  CHECK_FALSE(bad.is_unitary());
  CHECK_THROWS_AS(apply_single_qubit(build_ghz(2), 0, bad), std::invalid_argument);
  CHECK_THROWS_AS(apply_single_qubit(build_ghz(2), 2, identity_gate()),
                  std::out_of_range);
  CHECK_THROWS_AS(apply_single_qubit(build_ghz(2), -1, identity_gate()),
                  std::out_of_range);
}

TEST_CASE("phase gate on two qubits flips the shared state's sign") {
  QuantumState s = build_ghz(3);
  s = apply_single_qubit(s, 0, phase_s_gate());
  s = apply_single_qubit(s, 1, phase_s_gate());
  CHECK(std::abs(s.amplitude(0b000) - Complex(kInvSqrt2)) < 1e-12);
  CHECK(std::abs(s.amplitude(0b111) - Complex(-kInvSqrt2)) < 1e-12);
}

TEST_CASE("phase gate pairs toggle between the two shared states, any qubits") {
  for (int n = 2; n <= 8; ++n) {
    // the minus state: sign of |1^n> flipped
    std::vector<Complex> amps(1ull << n, Complex(0.0));
    amps.front() = Complex(kInvSqrt2);
    amps.back() = Complex(-kInvSqrt2);
    const QuantumState minus(n, std::move(amps));
    const QuantumState plus = build_ghz(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        QuantumState from_plus = apply_single_qubit(plus, a, phase_s_gate());
        from_plus = apply_single_qubit(from_plus, b, phase_s_gate());
        CHECK(states_equivalent(from_plus, minus));
        QuantumState from_minus = apply_single_qubit(minus, a, phase_s_gate());
        from_minus = apply_single_qubit(from_minus, b, phase_s_gate());
        CHECK(states_equivalent(from_minus, plus));
      }
    }
  }
}

TEST_CASE("identity leaves states alone; hadamard splits |0>") {
  const QuantumState s = build_ghz(3);
  CHECK(states_equivalent(apply_single_qubit(s, 1, identity_gate()), s));

  const QuantumState zero(1);
  const QuantumState split = apply_single_qubit(zero, 0, hadamard_gate());
  CHECK(std::abs(split.amplitude(0).real() - kInvSqrt2) < 1e-12);
  CHECK(std::abs(split.amplitude(1).real() - kInvSqrt2) < 1e-12);
}

TEST_CASE("gates preserve norm") {
  SplitMix64 rng(7);
  for (int n = 1; n <= 6; ++n) {
    // random normalized state
    std::vector<Complex> amps(1ull << n);
    double norm = 0.0;
    for (auto& a : amps) {
      a = Complex(rng.next_double() - 0.5, rng.next_double() - 0.5);
      norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    QuantumState s(n, std::move(amps));
    for (const auto& g : {hadamard_gate(), phase_s_gate(), identity_gate()}) {
      for (int q = 0; q < n; ++q) {
        s = apply_single_qubit(s, q, g);
        CHECK(std::abs(s.norm_sq() - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("measurement distribution of the shared and transformed states") {
  const auto bare = measurement_distribution(build_ghz(3));
  REQUIRE(bare.size() == 2);
  CHECK(bare.at(BitString::parse("000")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bare.at(BitString::parse("111")) == doctest::Approx(0.5).epsilon(1e-12));

  QuantumState h_all = build_ghz(3);
  for (int q = 0; q < 3; ++q) h_all = apply_single_qubit(h_all, q, hadamard_gate());
  const auto even = measurement_distribution(h_all);
  REQUIRE(even.size() == 4);
  double total = 0.0;
  for (const char* y : {"000", "011", "101", "110"}) {
    CHECK(even.at(BitString::parse(y)) == doctest::Approx(0.25).epsilon(1e-12));
    total += even.at(BitString::parse(y));
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  QuantumState minus = build_ghz(3);
  minus = apply_single_qubit(minus, 0, phase_s_gate());
  minus = apply_single_qubit(minus, 1, phase_s_gate());
  for (int q = 0; q < 3; ++q) minus = apply_single_qubit(minus, q, hadamard_gate());
  const auto odd = measurement_distribution(minus);
  REQUIRE(odd.size() == 4);
  for (const char* y : {"001", "010", "100", "111"}) {
    CHECK(odd.at(BitString::parse(y)) == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("protocol output distribution on the state vector") {
  const auto d0 = oracle_answer_distribution(BitString::parse("0000"));
  REQUIRE(d0.size() == 8);
  for (const auto& [y, p] : d0) {
    CHECK(p == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(is_winning(BitString::parse("0000"), y));
  }

  const auto d110 = oracle_answer_distribution(BitString::parse("110"));
  REQUIRE(d110.size() == 4);
  for (const char* y : {"001", "010", "100", "111"}) {
    CHECK(d110.at(BitString::parse(y)) == doctest::Approx(0.25).epsilon(1e-12));
  }

  const auto d1111 = oracle_answer_distribution(BitString::parse("1111"));
  REQUIRE(d1111.size() == 8);
  for (const auto& [y, p] : d1111) {
    CHECK(p == doctest::Approx(0.125).epsilon(1e-12));
    CHECK((hamming_weight(y) % 2) == 0);
  }

  CHECK_THROWS_AS(oracle_answer_distribution(BitString::parse("100")),
                  std::invalid_argument);
  // beyond the dense state-vector limit
  CHECK_THROWS_AS(oracle_answer_distribution(BitString::zeros(kOracleLimit + 2)),
                  std::invalid_argument);
}

TEST_CASE("state vector matches the closed-form law on every promise input") {
  for (int n = 3; n <= 6; ++n) {
    for (const BitString& x : enumerate_questions(n)) {
      const auto oracle = oracle_answer_distribution(x);
      const auto analytic = analytic_answer_distribution(x);
      REQUIRE(oracle.size() == analytic.size());
      for (const auto& [y, p] : analytic) {
        const auto it = oracle.find(y);
        REQUIRE(it != oracle.end());
        CHECK(std::abs(it->second - p) <= 1e-12);
      }
    }
  }
}

TEST_CASE("sampled answers always win") {
  SplitMix64 rng(99);
  // exhaustive questions with many samples for small n
  for (int n = 3; n <= 10; ++n) {
    const int samples = n <= 6 ? 1000 : 100;
    for (const BitString& x : enumerate_questions(n)) {
      for (int s = 0; s < samples; ++s) {
        CHECK(is_winning(x, analytic_sample(x, rng)));
      }
    }
  }
  // sampled questions for larger n
  for (int n = 11; n <= 16; ++n) {
    for (int rep = 0; rep < 100; ++rep) {
      std::uint64_t xv = rng.next_u64() & ((1ull << n) - 1);
      if (std::popcount(xv) % 2 != 0) xv ^= 1;
      const BitString x(n, xv);
      for (int s = 0; s < 50; ++s) CHECK(is_winning(x, analytic_sample(x, rng)));
    }
  }

  CHECK_THROWS_AS(analytic_sample(BitString::parse("100"), rng), std::invalid_argument);
}

TEST_CASE("sample support matches the parity class") {
  SplitMix64 rng(1);
  for (int s = 0; s < 200; ++s) {
    const BitString y = analytic_sample(BitString::parse("000"), rng);
    CHECK((hamming_weight(y) % 2) == 0);
    const BitString z = analytic_sample(BitString::parse("1100"), rng);
    CHECK((hamming_weight(z) % 2) == 1);
  }
}

TEST_CASE("empirical sample frequencies match the uniform law") {
  SplitMix64 rng(31337);
  const BitString x = BitString::parse("000");
  std::map<std::string, int> counts;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) counts[analytic_sample(x, rng).str()]++;
  REQUIRE(counts.size() == 4);
  // binomial noise: sigma = sqrt(p(1-p)/N) with p = 1/4
  const double sigma = std::sqrt(0.25 * 0.75 / trials);
  for (const char* y : {"000", "011", "101", "110"}) {
    const double freq = static_cast<double>(counts[y]) / trials;
    CHECK(std::abs(freq - 0.25) <= 3 * sigma);
  }
}

TEST_CASE("projective measurement collapses and renormalizes") {
  // measuring qubit 0 of the shared state pins every other qubit
  const QuantumState s = build_ghz(4);
  for (double u : {0.1, 0.9}) {
    const auto [bit, collapsed] = measure_qubit(s, 0, u);
    CHECK(collapsed.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    const std::uint64_t expect = bit ? 0b1111 : 0b0000;
    CHECK(std::abs(std::norm(collapsed.amplitude(expect)) - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(measure_qubit(s, 4, 0.5), std::out_of_range);
}
