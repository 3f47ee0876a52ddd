#pragma once

#include <compare>
#include <string>

#include "ghz/bigint.hpp"

namespace ghz {

// Exact value numerator / 2^log2_den, kept reduced: the numerator is odd
// unless the denominator is 1 (or the value is zero). All counting-derived
// proportions in this project are of this shape, so exact equality tests
// never touch floating point.
class DyadicRational {
 public:
  DyadicRational() = default;  // zero
  DyadicRational(BigInt numerator, unsigned log2_den);

  static DyadicRational from_integer(BigInt v);

  const BigInt& numerator() const { return num_; }
  unsigned log2_den() const { return k_; }
  bool is_zero() const { return num_ == 0; }

  DyadicRational operator+(const DyadicRational& o) const;
  DyadicRational operator-(const DyadicRational& o) const;
  DyadicRational operator*(const DyadicRational& o) const;
  DyadicRational operator-() const;

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) = default;
  std::strong_ordering operator<=>(const DyadicRational& o) const;

  Rational to_rational() const;
  double to_double() const;

  // "3/2^2"; plain integer string when the denominator is 1.
  std::string fraction_str() const;
  // Exact decimal expansion, e.g. "0.75" (dyadic rationals always terminate).
  std::string decimal_str() const;

 private:
  BigInt num_;
  unsigned k_ = 0;

  void normalize();
};

}  // namespace ghz
