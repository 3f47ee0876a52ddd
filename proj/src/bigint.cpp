#include "ghz/bigint.hpp"

#include <stdexcept>

namespace ghz {

BigInt binomial(int n, int r) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (int i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;  // exact: any C(m, i) prefix is an integer
  }
  return result;
}

}  // namespace ghz
