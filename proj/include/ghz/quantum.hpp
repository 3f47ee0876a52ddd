#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ghz/bitstring.hpp"
#include "ghz/rng.hpp"

namespace ghz {

// Dense 2^n state vectors are kept at or below this size.
inline constexpr int kOracleLimit = 12;
inline constexpr double kAmplitudeTol = 1e-12;

using Complex = std::complex<double>;

// 2x2 unitary, row-major.
struct SingleQubitGate {
  std::array<Complex, 4> m;
  bool is_unitary(double tol = kAmplitudeTol) const;
};

SingleQubitGate hadamard_gate();
SingleQubitGate phase_s_gate();  // |0> -> |0>, |1> -> i|1>
SingleQubitGate identity_gate();

// n-qubit pure state. Basis index bit i is player i+1's qubit, matching
// BitString::packed().
class QuantumState {
 public:
  explicit QuantumState(int n_qubits);  // |0...0>
  QuantumState(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::uint64_t basis) const { return amps_[basis]; }
  double norm_sq() const;

 private:
  int n_ = 0;
  std::vector<Complex> amps_;
};

// (|0^n> + |1^n>)/sqrt(2)
QuantumState build_ghz(int n);

QuantumState apply_single_qubit(const QuantumState& state, int qubit,
                                const SingleQubitGate& gate);

// <a|b>; states must have the same qubit count. Compare states through
// |overlap|^2 so global phase never matters.
Complex overlap(const QuantumState& a, const QuantumState& b);

// Born probabilities of a full measurement; entries below kAmplitudeTol
// are dropped. Requires a normalized state.
std::map<BitString, double> measurement_distribution(const QuantumState& state);

// Projective measurement of one qubit, decided by a uniform draw u in [0,1).
// Returns the outcome and the collapsed, renormalized state.
std::pair<int, QuantumState> measure_qubit(const QuantumState& state, int qubit, double u);

// Literal protocol on the state vector: start from the shared GHZ state,
// apply the phase gate wherever x_i = 1, Hadamard everywhere, measure.
std::map<BitString, double> oracle_answer_distribution(const BitString& x);

// The same outcome law in closed form: uniform over the answers whose
// weight parity equals target_parity(x).
std::map<BitString, double> analytic_answer_distribution(const BitString& x);

// One answer drawn from that law: n-1 unbiased bits, last bit fixes parity.
// Never loses on a promise question.
BitString analytic_sample(const BitString& x, SplitMix64& rng);

}  // namespace ghz
