#include "ghz/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace ghz {

DyadicRational::DyadicRational(BigInt numerator, unsigned log2_den)
    : num_(std::move(numerator)), k_(log2_den) {
  normalize();
}

DyadicRational DyadicRational::from_integer(BigInt v) {
  return DyadicRational(std::move(v), 0);
}

void DyadicRational::normalize() {
  if (num_ == 0) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --k_;
  }
}

DyadicRational DyadicRational::operator+(const DyadicRational& o) const {
  const unsigned k = k_ > o.k_ ? k_ : o.k_;
  return DyadicRational((num_ << (k - k_)) + (o.num_ << (k - o.k_)), k);
}

DyadicRational DyadicRational::operator-(const DyadicRational& o) const {
  const unsigned k = k_ > o.k_ ? k_ : o.k_;
  return DyadicRational((num_ << (k - k_)) - (o.num_ << (k - o.k_)), k);
}

DyadicRational DyadicRational::operator*(const DyadicRational& o) const {
  return DyadicRational(num_ * o.num_, k_ + o.k_);
}

DyadicRational DyadicRational::operator-() const { return DyadicRational(-num_, k_); }

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& o) const {
  const unsigned k = k_ > o.k_ ? k_ : o.k_;
  const BigInt lhs = num_ << (k - k_);
  const BigInt rhs = o.num_ << (k - o.k_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational DyadicRational::to_rational() const { return Rational(num_, pow2(k_)); }

double DyadicRational::to_double() const {
  if (num_ == 0) return 0.0;
  // keep the top 63 bits so the numerator always fits a double, then put
  // the full exponent back with ldexp
  BigInt mag = num_ < 0 ? -num_ : num_;
  const long top = static_cast<long>(boost::multiprecision::msb(mag));
  const long shift = top > 62 ? top - 62 : 0;
  const double scaled = (mag >> shift).convert_to<double>();
  const double v = std::ldexp(scaled, static_cast<int>(shift - static_cast<long>(k_)));
  return num_ < 0 ? -v : v;
}

std::string DyadicRational::fraction_str() const {
  if (k_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(k_);
}

std::string DyadicRational::decimal_str() const {
  // num / 2^k = num * 5^k / 10^k: take the digits of num * 5^k and place the
  // point k digits from the right.
  const bool neg = num_ < 0;
  BigInt scaled = (neg ? -num_ : num_);
  for (unsigned i = 0; i < k_; ++i) scaled *= 5;
  std::string digits = scaled.str();
  std::string out;
  if (k_ == 0) {
    out = digits;
  } else {
    if (digits.size() <= k_) digits.insert(0, k_ + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - k_) + "." + digits.substr(digits.size() - k_);
  }
  return neg ? "-" + out : out;
}

}  // namespace ghz
