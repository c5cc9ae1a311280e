#include "erdosum/primes.hpp"

#include <random>
#include <stdexcept>

#include "erdosum/errors.hpp"

namespace erdosum {

std::vector<std::uint64_t> generate_primes(std::uint64_t limit) {
  if (limit < 2) throw std::domain_error("generate_primes: limit must be >= 2");
  // Odd-only bitmap: index i represents 2i+3.
  const std::uint64_t n_odd = limit >= 3 ? (limit - 1) / 2 : 0;
  std::vector<bool> composite(n_odd, false);
  for (std::uint64_t i = 0;; ++i) {
    const std::uint64_t p = 2 * i + 3;
    if (p * p > limit) break;
    if (composite[i]) continue;
    for (std::uint64_t m = (p * p - 3) / 2; m < n_odd; m += p) composite[m] = true;
  }
  std::vector<std::uint64_t> primes;
  primes.push_back(2);
  for (std::uint64_t i = 0; i < n_odd; ++i)
    if (!composite[i]) primes.push_back(2 * i + 3);
  return primes;
}

namespace {

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

int mobius(std::uint64_t n) {
  if (n == 0) throw std::domain_error("mobius: n must be >= 1");
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

std::uint64_t next_prime_above(std::uint64_t n) {
  std::uint64_t c = n + 1;
  if (c <= 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime_trial(c)) c += 2;
  return c;
}

PrimeTable PrimeTable::build(std::uint64_t limit, const PrecisionContext& ctx) {
  PrimeTable t;
  t.limit = limit;
  t.primes = generate_primes(limit);
  t.next_prime = next_prime_above(limit);

  // Fixed-seed sample verification by trial division.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<std::size_t> pick(0, t.primes.size() - 1);
  const std::size_t samples = t.primes.size() < 32 ? t.primes.size() : 32;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t p = t.primes[pick(rng)];
    if (!is_prime_trial(p))
      throw ConsistencyError("PrimeTable: sieve emitted a composite: " + std::to_string(p));
  }

  t.log_primes.reserve(t.primes.size());
  for (std::uint64_t p : t.primes) t.log_primes.push_back(log(ctx.make(p)));
  return t;
}

}  // namespace erdosum
