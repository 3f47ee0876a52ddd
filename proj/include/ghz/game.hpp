#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ghz/bitstring.hpp"
#include "ghz/dyadic.hpp"

namespace ghz {

inline constexpr int kMinPlayers = 3;
// Largest n for which we sweep the full promise set with packed words.
inline constexpr int kEnumerationLimit = 24;

int hamming_weight(const BitString& x);

// The promise: the question has an even number of 1s.
bool satisfies_promise(const BitString& x);

// Parity the answer must hit on question x: (weight(x)/2) mod 2.
// Meaningful only for promise questions.
int target_parity(const BitString& x);

// Winning predicate: weight(y) = weight(x)/2 (mod 2). Rejects questions
// that violate the promise and length mismatches as caller errors.
bool is_winning(const BitString& x, const BitString& y);

// index-th question (lexicographic) of the promise set of size 2^(n-1):
// the first n-1 characters spell index in binary, the last fixes parity.
BitString question_by_index(int n, std::uint64_t index);

// All 2^(n-1) even-weight questions of length n, lexicographic.
std::vector<BitString> enumerate_questions(int n);

// Sweep of the promise set in packed form (player 1 = bit 0);
// iteration order unspecified.
void for_each_question(int n, const std::function<void(std::uint64_t)>& fn);

// 1/2 + 2^-ceil(n/2), the exact optimum over deterministic strategies.
DyadicRational classical_bound(int n);

}  // namespace ghz
