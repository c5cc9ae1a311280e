#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "erdosum/precision.hpp"
#include "erdosum/primes.hpp"
#include "erdosum/real.hpp"

namespace erdosum {

// B_{2j}/(2j)! at the given precision. Bernoulli numbers are computed once as
// exact rationals and cached; conversions are cached per precision level.
Real bernoulli_over_factorial(unsigned j, mpfr_prec_t bits);

// Evaluates zeta(s), zeta'(s), the prime-truncated zeta_A(s), and the prime
// zeta function P(s), P'(s) for real s > 1 with certified truncation error
// below ctx.series_cutoff_epsilon() (relative for values above 1).
//
// zeta/zeta' use Euler-Maclaurin with the explicit remainder bound
// |R_J| <= |B_2J|/(2J)! * \int_N^inf |f^(2J)|; P uses the Moebius-inverted
// series P(s) = sum_{p<=A} p^-s + sum_m (mu(m)/m) log zeta_A(ms) with an
// explicit geometric tail bound over primes > A.
//
// Immutable after construction except for guarded integer-argument caches;
// safe to share across threads.
class ZetaEngine {
 public:
  explicit ZetaEngine(PrecisionContext ctx, std::uint64_t prime_cutoff = 100);

  const PrecisionContext& ctx() const { return ctx_; }
  std::uint64_t prime_cutoff() const { return table_.limit; }
  const PrimeTable& prime_table() const { return table_; }

  // s must exceed 1 + ctx.singularity_floor(); throws SingularityError.
  Real zeta(const Real& s) const;
  Real zeta_deriv(const Real& s) const;
  Real zeta_truncated(const Real& s) const;  // zeta(s) * prod_{p<=A} (1 - p^-s)
  Real log_zeta(const Real& s) const { return log(zeta(s)); }
  Real prime_zeta(const Real& s) const;
  Real prime_zeta_deriv(const Real& s) const;

  // Cached P(m), P'(m) at integer m >= 2.
  Real prime_zeta_int(unsigned m) const;
  Real prime_zeta_deriv_int(unsigned m) const;

  // Worst-case absolute error of a prime_zeta / log zeta evaluation.
  Real eval_epsilon() const { return eps_; }

 private:
  Real zeta_em(const Real& s, bool derivative) const;
  void check_domain(const Real& s) const;
  unsigned tail_start_estimate(const Real& s) const;

  PrecisionContext ctx_;
  PrimeTable table_;
  mpfr_prec_t wb_;  // internal working bits
  Real eps_;        // series cutoff (absolute)
  long n_direct_;   // Euler-Maclaurin direct-sum length

  mutable std::mutex mu_;
  mutable std::vector<Real> p_int_;   // index m: P(m), m >= 2
  mutable std::vector<Real> pd_int_;  // index m: P'(m), m >= 2
};

}  // namespace erdosum
