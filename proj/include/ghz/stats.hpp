#pragma once

#include <cstdint>
#include <utility>

namespace ghz {

// Inverse standard normal CDF (Acklam's rational approximation, |eps| < 1.2e-9).
double inverse_normal_cdf(double p);

// Wilson score interval, clamped to [0, 1].
std::pair<double, double> wilson_interval(std::uint64_t wins, std::uint64_t trials,
                                          double confidence);

}  // namespace ghz
