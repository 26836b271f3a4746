#pragma once

// Small-integer number theory helpers for prime and prime-power sweeps.

#include <optional>
#include <utility>
#include <vector>

namespace chevh1 {

bool is_prime(long n);

/// Primes in [lo, hi], ascending.
std::vector<long> primes_in(long lo, long hi);

/// (p, r) with n = p^r and r >= 1, if n is a prime power.
std::optional<std::pair<long, int>> prime_power(long n);

/// p^r, throwing on overflow.
long ipow(long p, int r);

/// Base-p digits, least significant first; empty for n = 0.
std::vector<long> digits(long n, long p);

}  // namespace chevh1
