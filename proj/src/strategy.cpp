#include "ghz/strategy.hpp"

#include <bit>
#include <stdexcept>

namespace ghz {

PlayerCode code_from_string(const std::string& s) {
  if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1')) {
    throw std::invalid_argument("player code must be two bits, got '" + s + "'");
  }
  return static_cast<PlayerCode>(((s[0] - '0') << 1) | (s[1] - '0'));
}

std::string code_to_string(PlayerCode c) {
  const auto v = static_cast<unsigned>(c);
  return {static_cast<char>('0' + ((v >> 1) & 1)), static_cast<char>('0' + (v & 1))};
}

DeterministicStrategy::DeterministicStrategy(int n, std::uint64_t mask0,
                                             std::uint64_t mask1)
    : n_(n), mask0_(mask0), mask1_(mask1) {
  if (n < 1 || n > BitString::kMaxBits) {
    throw std::invalid_argument("strategy length must be in [1, 64]");
  }
  if (n < BitString::kMaxBits && ((mask0 >> n) != 0 || (mask1 >> n) != 0)) {
    throw std::invalid_argument("strategy mask has bits beyond the player count");
  }
}

DeterministicStrategy DeterministicStrategy::from_codes(
    const std::vector<PlayerCode>& codes) {
  std::uint64_t m0 = 0;
  std::uint64_t m1 = 0;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto v = static_cast<unsigned>(codes[i]);
    m0 |= static_cast<std::uint64_t>((v >> 1) & 1) << i;
    m1 |= static_cast<std::uint64_t>(v & 1) << i;
  }
  return DeterministicStrategy(static_cast<int>(codes.size()), m0, m1);
}

DeterministicStrategy DeterministicStrategy::parse(const std::string& text) {
  std::vector<PlayerCode> codes;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    codes.push_back(code_from_string(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return from_codes(codes);
}

DeterministicStrategy DeterministicStrategy::all_players(int n, PlayerCode code) {
  return from_codes(std::vector<PlayerCode>(static_cast<std::size_t>(n), code));
}

DeterministicStrategy DeterministicStrategy::from_encoding(int n,
                                                           std::uint64_t encoding) {
  if (n < 1 || n > 32) {
    throw std::invalid_argument("encoded strategy length must be in [1, 32]");
  }
  std::uint64_t m0 = 0;
  std::uint64_t m1 = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t code = (encoding >> (2 * i)) & 3u;
    m0 |= ((code >> 1) & 1u) << i;
    m1 |= (code & 1u) << i;
  }
  return DeterministicStrategy(n, m0, m1);
}

PlayerCode DeterministicStrategy::code(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("player index out of range");
  const unsigned out0 = static_cast<unsigned>((mask0_ >> i) & 1u);
  const unsigned out1 = static_cast<unsigned>((mask1_ >> i) & 1u);
  return static_cast<PlayerCode>((out0 << 1) | out1);
}

int DeterministicStrategy::output(int i, int input_bit) const {
  if (i < 0 || i >= n_) throw std::out_of_range("player index out of range");
  return static_cast<int>(((input_bit ? mask1_ : mask0_) >> i) & 1u);
}

std::uint64_t DeterministicStrategy::encoding() const {
  std::uint64_t enc = 0;
  for (int i = 0; i < n_; ++i) {
    enc |= static_cast<std::uint64_t>(static_cast<unsigned>(code(i))) << (2 * i);
  }
  return enc;
}

std::string DeterministicStrategy::str() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += code_to_string(code(i));
  }
  return out;
}

BitString apply_strategy(const DeterministicStrategy& s, const BitString& x) {
  if (s.players() != x.size()) {
    throw std::invalid_argument("apply_strategy: strategy and question lengths differ");
  }
  const std::uint64_t full =
      x.size() == 64 ? ~0ull : (1ull << x.size()) - 1;
  return BitString(x.size(),
                   apply_strategy_packed(s.mask0(), s.mask1(), x.packed()) & full);
}

StrategyClass classify(const DeterministicStrategy& s) {
  // k: players whose two outputs differ. Negators (10) and constant-ones
  // (11) are exactly the players answering 1 on input 0, so the flip
  // parity is the parity of mask0.
  return StrategyClass{std::popcount(s.mask0() ^ s.mask1()),
                       std::popcount(s.mask0()) & 1};
}

DeterministicStrategy permute_players(const DeterministicStrategy& s,
                                      const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != s.players()) {
    throw std::invalid_argument("permute_players: permutation size mismatch");
  }
  std::vector<PlayerCode> codes;
  codes.reserve(perm.size());
  for (int src : perm) codes.push_back(s.code(src));
  return DeterministicStrategy::from_codes(codes);
}

}  // namespace ghz
