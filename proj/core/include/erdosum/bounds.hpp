#pragma once

#include <vector>

#include "erdosum/real.hpp"
#include "erdosum/zeta.hpp"

namespace erdosum {

// alpha = e^-c, c = sum_{m>=2} P(m)/m, h'(1) = -sum_p log p/(p(p-1)), gamma,
// 6/pi^2, all at working precision.
struct ConstantsBundle {
  Real alpha;
  Real c;
  Real h_prime_1;
  Real euler_gamma;
  Real six_over_pi2;
  int precision_digits;

  ConstantsBundle()
      : alpha(MPFR_PREC_MIN),
        c(MPFR_PREC_MIN),
        h_prime_1(MPFR_PREC_MIN),
        euler_gamma(MPFR_PREC_MIN),
        six_over_pi2(MPFR_PREC_MIN),
        precision_digits(0) {}
};

// alpha is computed twice (exp(-sum P(m)/m) and prod zeta(m)^{mu(m)/m}) and
// the routes must agree to 32x the series cutoff; throws ConsistencyError.
ConstantsBundle constants(const ZetaEngine& engine);

// Q(0..m_max) by the exponential-formula recurrence
//   m Q(m) = sum_{j=2}^m P(j) Q(m-j),  Q(0)=1.
// m_max <= 200 (CapacityError beyond).
std::vector<Real> q_weights(unsigned m_max, const ZetaEngine& engine);

// Closed-form majorant 2^-k sum_{n<=k} (k-n+1) 2^n/n!; Q(k) < q_tilde(k).
double q_tilde(unsigned k);

// The explicit partition-truncated lower bound for f(N_k), k >= 9; increasing
// in k and used to certify the global minimum at k = 6.
Real beta_lower_bound(unsigned k, const ZetaEngine& engine);
// Same with alpha supplied (avoids re-deriving the constants per call).
Real beta_lower_bound(unsigned k, const ZetaEngine& engine, const Real& alpha);

}  // namespace erdosum
