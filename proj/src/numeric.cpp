#include "knotslice/numeric.hpp"

namespace knotslice {

bool is_prime_power(const Int& n) {
  if (n <= 1) return false;
  Int p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) return true;  // n itself is prime
  Int m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

}  // namespace knotslice
