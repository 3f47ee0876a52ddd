#include "ghz/quantum.hpp"

#include <cmath>
#include <stdexcept>

#include "ghz/game.hpp"

namespace ghz {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

bool SingleQubitGate::is_unitary(double tol) const {
  // columns orthonormal
  const double c0 = std::norm(m[0]) + std::norm(m[2]);
  const double c1 = std::norm(m[1]) + std::norm(m[3]);
  const Complex dot = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
  return std::abs(c0 - 1.0) <= tol && std::abs(c1 - 1.0) <= tol && std::abs(dot) <= tol;
}

SingleQubitGate hadamard_gate() {
  return SingleQubitGate{{Complex(kInvSqrt2), Complex(kInvSqrt2), Complex(kInvSqrt2),
                          Complex(-kInvSqrt2)}};
}

SingleQubitGate phase_s_gate() {
  return SingleQubitGate{{Complex(1.0), Complex(0.0), Complex(0.0), Complex(0.0, 1.0)}};
}

SingleQubitGate identity_gate() {
  return SingleQubitGate{{Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)}};
}

static void check_qubit_count(int n) {
  if (n < 1 || n > kOracleLimit) {
    throw std::invalid_argument("state vector limited to 1.." +
                                std::to_string(kOracleLimit) + " qubits, got " +
                                std::to_string(n));
  }
}

QuantumState::QuantumState(int n_qubits) : n_(n_qubits) {
  check_qubit_count(n_qubits);
  amps_.assign(1ull << n_qubits, Complex(0.0));
  amps_[0] = Complex(1.0);
}

QuantumState::QuantumState(int n_qubits, std::vector<Complex> amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amps_.size() != (1ull << n_qubits)) {
    throw std::invalid_argument("amplitude vector size must be 2^n");
  }
}

double QuantumState::norm_sq() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

QuantumState build_ghz(int n) {
  check_qubit_count(n);
  std::vector<Complex> amps(1ull << n, Complex(0.0));
  amps.front() = Complex(kInvSqrt2);
  amps.back() = Complex(kInvSqrt2);
  return QuantumState(n, std::move(amps));
}

QuantumState apply_single_qubit(const QuantumState& state, int qubit,
                                const SingleQubitGate& gate) {
  if (qubit < 0 || qubit >= state.n_qubits()) {
    throw std::out_of_range("apply_single_qubit: qubit index out of range");
  }
  if (!gate.is_unitary()) {
    throw std::invalid_argument("apply_single_qubit: gate is not unitary");
  }
  std::vector<Complex> out = state.amplitudes();
  const std::uint64_t bit = 1ull << qubit;
  const std::uint64_t dim = out.size();
  for (std::uint64_t v = 0; v < dim; ++v) {
    if (v & bit) continue;
    const Complex a0 = out[v];
    const Complex a1 = out[v | bit];
    out[v] = gate.m[0] * a0 + gate.m[1] * a1;
    out[v | bit] = gate.m[2] * a0 + gate.m[3] * a1;
  }
  return QuantumState(state.n_qubits(), std::move(out));
}

Complex overlap(const QuantumState& a, const QuantumState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("overlap: qubit counts differ");
  }
  Complex s(0.0);
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return s;
}

std::map<BitString, double> measurement_distribution(const QuantumState& state) {
  if (std::abs(state.norm_sq() - 1.0) > 1e-9) {
    throw std::invalid_argument("measurement_distribution: state not normalized");
  }
  std::map<BitString, double> dist;
  const auto& amps = state.amplitudes();
  for (std::uint64_t v = 0; v < amps.size(); ++v) {
    const double p = std::norm(amps[v]);
    if (p > kAmplitudeTol) dist.emplace(BitString(state.n_qubits(), v), p);
  }
  return dist;
}

std::pair<int, QuantumState> measure_qubit(const QuantumState& state, int qubit,
                                           double u) {
  if (qubit < 0 || qubit >= state.n_qubits()) {
    throw std::out_of_range("measure_qubit: qubit index out of range");
  }
  const std::uint64_t bit = 1ull << qubit;
  const auto& amps = state.amplitudes();
  double p1 = 0.0;
  for (std::uint64_t v = 0; v < amps.size(); ++v) {
    if (v & bit) p1 += std::norm(amps[v]);
  }
  const int outcome = (u < p1) ? 1 : 0;
  const double keep = outcome ? p1 : 1.0 - p1;
  const double scale = 1.0 / std::sqrt(keep);
  std::vector<Complex> out(amps.size(), Complex(0.0));
  for (std::uint64_t v = 0; v < amps.size(); ++v) {
    if (static_cast<int>((v >> qubit) & 1u) == outcome) out[v] = amps[v] * scale;
  }
  return {outcome, QuantumState(state.n_qubits(), std::move(out))};
}

static void check_promise(const BitString& x, const char* who) {
  if (!satisfies_promise(x)) {
    throw std::invalid_argument(std::string(who) + ": question '" + x.str() +
                                "' violates the promise");
  }
}

std::map<BitString, double> oracle_answer_distribution(const BitString& x) {
  check_promise(x, "oracle_answer_distribution");
  const int n = x.size();
  QuantumState psi = build_ghz(n);
  const SingleQubitGate s = phase_s_gate();
  const SingleQubitGate h = hadamard_gate();
  for (int i = 0; i < n; ++i) {
    if (x.bit(i)) psi = apply_single_qubit(psi, i, s);
  }
  for (int i = 0; i < n; ++i) psi = apply_single_qubit(psi, i, h);
  return measurement_distribution(psi);
}

std::map<BitString, double> analytic_answer_distribution(const BitString& x) {
  check_promise(x, "analytic_answer_distribution");
  const int n = x.size();
  if (n > kEnumerationLimit) {
    throw std::invalid_argument("analytic_answer_distribution: n beyond enumeration limit");
  }
  const int parity = target_parity(x);
  const double p = std::ldexp(1.0, -(n - 1));
  std::map<BitString, double> dist;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t v = 0; v < limit; ++v) {
    if ((std::popcount(v) & 1) == parity) dist.emplace(BitString(n, v), p);
  }
  return dist;
}

BitString analytic_sample(const BitString& x, SplitMix64& rng) {
  check_promise(x, "analytic_sample");
  const int n = x.size();
  std::uint64_t bits = 0;
  int parity = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int b = rng.next_bit();
    bits |= static_cast<std::uint64_t>(b) << i;
    parity ^= b;
  }
  if (parity != target_parity(x)) bits |= 1ull << (n - 1);
  return BitString(n, bits);
}

}  // namespace ghz
