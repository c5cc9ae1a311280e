#pragma once

#include <cstdint>
#include <vector>

#include "erdosum/precision.hpp"
#include "erdosum/real.hpp"

namespace erdosum {

// All primes <= limit, ascending, by a deterministic Eratosthenes sieve.
// Throws std::domain_error when limit < 2.
std::vector<std::uint64_t> generate_primes(std::uint64_t limit);

// Moebius function; 0 iff n has a squared prime factor. Throws on n = 0.
int mobius(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime_above(std::uint64_t n);

// Primes up to a cutoff with their logs at working precision; backbone of
// the truncated Euler products and the prime sums.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
  std::vector<Real> log_primes;
  std::uint64_t next_prime = 0;  // smallest prime > limit

  // Spot-checks the sieve output by trial division on a fixed pseudo-random
  // sample before returning.
  static PrimeTable build(std::uint64_t limit, const PrecisionContext& ctx);
};

}  // namespace erdosum
