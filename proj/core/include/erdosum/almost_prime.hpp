#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "erdosum/real.hpp"
#include "erdosum/zeta.hpp"

namespace erdosum {

// Multiplicity vector (n_1, ..., n_k) of a partition: sum j*n_j = k.
struct PartitionVector {
  std::vector<unsigned> multiplicities;
};

// Streams every partition of k exactly once in reverse-lexicographic
// multiplicity order ((k,0,...,0) first, (0,...,0,1) last), constant memory.
class PartitionStream {
 public:
  explicit PartitionStream(unsigned k);
  std::optional<PartitionVector> next();

 private:
  unsigned k_;
  std::vector<unsigned> parts_;  // ascending
  bool first_, done_;
};

template <class F>
void for_each_partition(unsigned k, F&& f) {
  PartitionStream ps(k);
  while (auto pv = ps.next()) f(*pv);
}

// P_0(s)..P_kmax(s) and the squarefree P*_0(s)..P*_kmax(s) at one s-node via
// the recurrences
//   k P_k(s)  = sum_j P(js) P_{k-j}(s)
//   k P*_k(s) = sum_j (-1)^{j+1} P(js) P*_{k-j}(s),
// with P(js) evaluated once per j and cached. Error fields carry pessimistic
// interval-style bounds seeded by the engine's evaluation epsilon.
//
// Immutable after construction; shareable. Distinct s-nodes are independent.
class PkEvaluator {
 public:
  PkEvaluator(const ZetaEngine& engine, unsigned k_max, const Real& s);

  unsigned k_max() const { return k_max_; }
  const Real& p(unsigned j) const;  // P(j s), 1 <= j <= k_max
  const Real& pk(unsigned k) const;
  const Real& pk_star(unsigned k) const;
  const Real& pk_error(unsigned k) const;
  const Real& pk_star_error(unsigned k) const;

 private:
  unsigned k_max_;
  std::vector<Real> p_;        // index j
  std::vector<Real> pk_;       // index k
  std::vector<Real> pk_err_;
  std::vector<Real> pk_star_;
  std::vector<Real> pk_star_err_;
};

// Partition-formula evaluation P_k(s) = sum over partitions of
// prod_j (1/n_j!) (P(js)/j)^{n_j}; cross-check path, k <= 40.
Real pk_via_partitions(const ZetaEngine& engine, unsigned k, const Real& s);
// Signed variant: each part j contributes a factor (-1)^{j+1}.
Real pk_star_via_partitions(const ZetaEngine& engine, unsigned k, const Real& s);

}  // namespace erdosum
