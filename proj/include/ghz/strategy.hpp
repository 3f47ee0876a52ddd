#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghz/bitstring.hpp"

namespace ghz {

// Per-player reply rule as a two-bit code "ab": output a on input 0 and b on
// input 1. So 00/11 are the constant players, 01 copies its input, 10 negates.
enum class PlayerCode : std::uint8_t {
  Zero = 0b00,
  Copy = 0b01,
  Negate = 0b10,
  One = 0b11,
};

PlayerCode code_from_string(const std::string& s);
std::string code_to_string(PlayerCode c);

class DeterministicStrategy {
 public:
  // mask0/mask1: bit i holds player i+1's output on input 0 / input 1.
  DeterministicStrategy(int n, std::uint64_t mask0, std::uint64_t mask1);

  static DeterministicStrategy from_codes(const std::vector<PlayerCode>& codes);
  // "11,00,01" (one code per player, comma separated)
  static DeterministicStrategy parse(const std::string& text);
  static DeterministicStrategy all_players(int n, PlayerCode code);
  // Two bits per player, player i+1 at bits 2i+1..2i: for 4^n sweeps.
  static DeterministicStrategy from_encoding(int n, std::uint64_t encoding);

  int players() const { return n_; }
  std::uint64_t mask0() const { return mask0_; }
  std::uint64_t mask1() const { return mask1_; }
  PlayerCode code(int i) const;
  int output(int i, int input_bit) const;
  std::uint64_t encoding() const;
  std::string str() const;

  friend bool operator==(const DeterministicStrategy& a,
                         const DeterministicStrategy& b) = default;

 private:
  int n_ = 0;
  std::uint64_t mask0_ = 0;
  std::uint64_t mask1_ = 0;
};

// y = (mask0 & ~x) ^ (mask1 & x), per player.
BitString apply_strategy(const DeterministicStrategy& s, const BitString& x);

inline std::uint64_t apply_strategy_packed(std::uint64_t mask0, std::uint64_t mask1,
                                           std::uint64_t x) {
  return (mask0 & ~x) ^ (mask1 & x);
}

// Everything that decides a strategy's success proportion: how many players
// look at their input (k) and the parity of negators plus constant-ones.
struct StrategyClass {
  int k = 0;
  int flip_parity = 0;
  friend bool operator==(const StrategyClass&, const StrategyClass&) = default;
};

StrategyClass classify(const DeterministicStrategy& s);

// Strategy with player perm[i]'s code moved to seat i.
DeterministicStrategy permute_players(const DeterministicStrategy& s,
                                      const std::vector<int>& perm);

}  // namespace ghz
