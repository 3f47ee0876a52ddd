#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ghz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

// C(n, r), exact.
BigInt binomial(int n, int r);

}  // namespace ghz
