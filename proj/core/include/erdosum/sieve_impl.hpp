#pragma once

#include <thread>

#include "erdosum/errors.hpp"

namespace erdosum {

template <class Acc>
Acc scan_factored(std::uint64_t limit, const SieveConfig& cfg, Acc init) {
  if (limit < 2) throw std::domain_error("scan_factored: limit must be >= 2");
  if (limit > 10000000000ull) throw CapacityError("scan_factored: limit is capped at 1e10");
  const std::size_t seg_len = cfg.segment_length;
  // rem (8B) + omega (1B) + squarefree (1B) per slot, per thread.
  const unsigned threads = cfg.threads == 0 ? 1 : cfg.threads;
  if (seg_len * 10 * threads > cfg.memory_budget_bytes)
    throw MemoryBudgetError("scan_factored: segment buffers exceed the memory budget");

  const auto primes = detail::SievePrimes::up_to(limit);
  const std::uint64_t first = 2;
  const std::uint64_t n_segments = (limit - first) / seg_len + 1;

  std::vector<Acc> per_segment(n_segments, init);
  auto work = [&](unsigned tid) {
    detail::SegmentScratch scratch;
    for (std::uint64_t seg = tid; seg < n_segments; seg += threads) {
      const std::uint64_t lo = first + seg * seg_len;
      const std::uint64_t len = std::min<std::uint64_t>(seg_len, limit - lo + 1);
      detail::factor_segment(lo, len, primes, scratch);
      Acc& acc = per_segment[seg];
      for (std::uint64_t i = 0; i < len; ++i)
        acc.accumulate(lo + i, scratch.omega[i], scratch.squarefree[i] != 0);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  Acc total = init;
  for (const Acc& a : per_segment) total.merge(a);
  return total;
}

}  // namespace erdosum
