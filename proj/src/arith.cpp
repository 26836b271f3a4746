#include "chevh1/arith.hpp"

#include <limits>
#include <stdexcept>

namespace chevh1 {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  for (long n = std::max(lo, 2L); n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

std::optional<std::pair<long, int>> prime_power(long n) {
  if (n < 2) return std::nullopt;
  long p = 2;
  while (n % p != 0) ++p;
  int r = 0;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  if (n != 1) return std::nullopt;
  return std::pair{p, r};
}

long ipow(long p, int r) {
  long out = 1;
  for (int i = 0; i < r; ++i) {
    if (out > std::numeric_limits<long>::max() / p) throw std::overflow_error("prime power overflows");
    out *= p;
  }
  return out;
}

std::vector<long> digits(long n, long p) {
  std::vector<long> out;
  for (; n > 0; n /= p) out.push_back(n % p);
  return out;
}

}  // namespace chevh1
