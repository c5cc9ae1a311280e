#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace erdosum {

struct SieveConfig {
  std::size_t segment_length = 1u << 21;        // integers per segment
  unsigned threads = 1;                         // segments fan out across threads
  std::size_t memory_budget_bytes = 1u << 30;   // refuse to exceed
};

// Exhaustive enumeration of Omega(n) and mu(n)^2 for 2 <= n <= limit.
// partial_f[k] = sum over n <= limit, Omega(n)=k of 1/(n log n); the starred
// variants carry the squarefree filter. Sums are Kahan-compensated doubles
// accumulated in deterministic segment order (identical for any thread count).
struct SieveSummary {
  std::uint64_t limit = 0;
  unsigned k_max = 0;
  std::vector<double> partial_f;
  std::vector<double> partial_f_star;
  std::vector<std::uint64_t> counts;       // N_k(limit), index k
  std::vector<std::uint64_t> counts_star;  // N*_k(limit)
};

SieveSummary sieve_summary(std::uint64_t limit, unsigned k_max, const SieveConfig& cfg = {});

// Exact #{n <= limit : Omega(n)=k, n = a mod q}.
std::uint64_t count_ap(std::uint64_t limit, unsigned k, std::uint64_t q, std::uint64_t a,
                       const SieveConfig& cfg = {});
// All residues at once: result[k][a], k <= k_max.
std::vector<std::vector<std::uint64_t>> count_ap_all(std::uint64_t limit, unsigned k_max,
                                                     std::uint64_t q, const SieveConfig& cfg = {});

// Strict lower bound on P_k(s): sum over n <= limit with Omega(n)=k of n^-s.
double partial_pk(double s, std::uint64_t limit, unsigned k, const SieveConfig& cfg = {});

struct PrimePowerFactor {
  std::uint64_t p;
  unsigned e;
};

// Partial sum of 1/(n log n) over n <= limit with Omega(n)=k and no
// forbidden prime power p^e dividing n.
double restricted_partial_f(std::uint64_t limit, unsigned k,
                            std::span<const PrimePowerFactor> forbidden,
                            const SieveConfig& cfg = {});

// Versioned textual snapshot; decimal strings round-trip exactly.
void save_sieve_summary(const SieveSummary& s, const std::string& path);
SieveSummary load_sieve_summary(const std::string& path);

namespace detail {

// Fills omega[i] and squarefree[i] for n = lo+i, i < len. Scratch buffers are
// caller-provided so segment scans can reuse them.
struct SegmentScratch {
  std::vector<std::uint64_t> rem;
  std::vector<std::uint8_t> omega;
  std::vector<std::uint8_t> squarefree;
};

struct SievePrimes {
  std::vector<std::uint64_t> p;
  std::vector<std::uint64_t> inv;  // odd-prime inverses mod 2^64
  static SievePrimes up_to(std::uint64_t limit);
};

void factor_segment(std::uint64_t lo, std::uint64_t len, const SievePrimes& primes,
                    SegmentScratch& scratch);

}  // namespace detail

// Streams (n, omega, squarefree) over 2..limit in segments; Visitor must be
// an accumulator type with members accumulate(n, omega, squarefree) and
// merge(const Visitor&). Per-segment accumulators are merged in segment order
// regardless of thread count.
template <class Acc>
Acc scan_factored(std::uint64_t limit, const SieveConfig& cfg, Acc init);

}  // namespace erdosum

#include "erdosum/sieve_impl.hpp"
