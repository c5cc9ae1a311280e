#include "erdosum/almost_prime.hpp"

#include <stdexcept>

#include "erdosum/errors.hpp"

namespace erdosum {

PartitionStream::PartitionStream(unsigned k) : k_(k), first_(true), done_(false) {
  if (k < 1) throw std::domain_error("PartitionStream: k must be >= 1");
  parts_.assign(k, 1);  // 1+1+...+1
}

std::optional<PartitionVector> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!first_) {
    // Successor in ascending-parts order: merge the last two parts into the
    // smallest admissible refill.
    if (parts_.size() == 1) {
      done_ = true;
      return std::nullopt;
    }
    const unsigned y = parts_.back();
    parts_.pop_back();
    const unsigned a = parts_.back();
    parts_.pop_back();
    const unsigned x = a + 1;  // smallest admissible refill value
    unsigned t = a + y;
    while (2 * x <= t) {
      parts_.push_back(x);
      t -= x;
    }
    parts_.push_back(t);
  }
  first_ = false;
  PartitionVector pv;
  pv.multiplicities.assign(k_, 0);
  for (unsigned part : parts_) pv.multiplicities[part - 1]++;
  return pv;
}

PkEvaluator::PkEvaluator(const ZetaEngine& engine, unsigned k_max, const Real& s)
    : k_max_(k_max) {
  if (k_max < 1) throw std::domain_error("PkEvaluator: k_max must be >= 1");
  const mpfr_prec_t wb = engine.ctx().bits();
  const Real eps = engine.eval_epsilon();
  const Real one = Real::of(1ul, wb);

  p_.reserve(k_max + 1);
  p_.push_back(Real(wb));  // unused slot j=0
  for (unsigned j = 1; j <= k_max; ++j)
    p_.push_back(engine.prime_zeta(s * static_cast<unsigned long>(j)));

  pk_.reserve(k_max + 1);
  pk_err_.reserve(k_max + 1);
  pk_star_.reserve(k_max + 1);
  pk_star_err_.reserve(k_max + 1);
  pk_.push_back(one);
  pk_star_.push_back(one);
  pk_err_.push_back(Real(wb));
  pk_star_err_.push_back(Real(wb));

  for (unsigned k = 1; k <= k_max; ++k) {
    Real acc(wb), acc_err(wb);
    Real acc_star(wb), acc_star_err(wb);
    for (unsigned j = 1; j <= k; ++j) {
      acc += p_[j] * pk_[k - j];
      acc_err += eps * abs(pk_[k - j]) + abs(p_[j]) * pk_err_[k - j];
      const Real t = p_[j] * pk_star_[k - j];
      if (j % 2 == 1)
        acc_star += t;
      else
        acc_star -= t;
      acc_star_err += eps * abs(pk_star_[k - j]) + abs(p_[j]) * pk_star_err_[k - j];
    }
    pk_.push_back(acc / static_cast<unsigned long>(k));
    pk_star_.push_back(acc_star / static_cast<unsigned long>(k));
    // 1.01 absorbs the first-order cross terms and rounding of the loop.
    pk_err_.push_back(acc_err * 1.01 / static_cast<unsigned long>(k) +
                      unit_roundoff(pk_.back()) * (2ul * k));
    pk_star_err_.push_back(acc_star_err * 1.01 / static_cast<unsigned long>(k) +
                           unit_roundoff(pk_.back()) * (2ul * k));
    if (pk_star_.back() + pk_star_err_.back() < 0.0)
      throw CancellationError("pk_star: negative beyond error bar at k=" + std::to_string(k));
  }
}

const Real& PkEvaluator::p(unsigned j) const {
  if (j < 1 || j > k_max_) throw CapacityError("PkEvaluator: j out of range");
  return p_[j];
}
const Real& PkEvaluator::pk(unsigned k) const {
  if (k > k_max_) throw CapacityError("PkEvaluator: k exceeds k_max");
  return pk_[k];
}
const Real& PkEvaluator::pk_star(unsigned k) const {
  if (k > k_max_) throw CapacityError("PkEvaluator: k exceeds k_max");
  return pk_star_[k];
}
const Real& PkEvaluator::pk_error(unsigned k) const {
  if (k > k_max_) throw CapacityError("PkEvaluator: k exceeds k_max");
  return pk_err_[k];
}
const Real& PkEvaluator::pk_star_error(unsigned k) const {
  if (k > k_max_) throw CapacityError("PkEvaluator: k exceeds k_max");
  return pk_star_err_[k];
}

namespace {

Real pk_partitions_impl(const ZetaEngine& engine, unsigned k, const Real& s, bool signed_variant) {
  if (k > 40) throw CapacityError("pk_via_partitions: cross-check path is capped at k = 40");
  if (k == 0) return Real::of(1ul, engine.ctx().bits());
  const mpfr_prec_t wb = engine.ctx().bits();

  std::vector<Real> p_over_j;  // P(js)/j
  p_over_j.reserve(k + 1);
  p_over_j.push_back(Real(wb));
  for (unsigned j = 1; j <= k; ++j)
    p_over_j.push_back(engine.prime_zeta(s * static_cast<unsigned long>(j)) /
                       static_cast<unsigned long>(j));

  Real total(wb);
  for_each_partition(k, [&](const PartitionVector& pv) {
    Real term = Real::of(1ul, wb);
    bool negative = false;
    for (unsigned j = 1; j <= k; ++j) {
      const unsigned nj = pv.multiplicities[j - 1];
      if (nj == 0) continue;
      term *= pow(p_over_j[j], static_cast<unsigned long>(nj));
      term /= Real::factorial(nj, wb);
      if (signed_variant && j % 2 == 0 && nj % 2 == 1) negative = !negative;
    }
    if (negative)
      total -= term;
    else
      total += term;
  });
  return total;
}

}  // namespace

Real pk_via_partitions(const ZetaEngine& engine, unsigned k, const Real& s) {
  return pk_partitions_impl(engine, k, s, false);
}

Real pk_star_via_partitions(const ZetaEngine& engine, unsigned k, const Real& s) {
  return pk_partitions_impl(engine, k, s, true);
}

}  // namespace erdosum
