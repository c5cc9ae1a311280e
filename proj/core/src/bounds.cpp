#include "erdosum/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "erdosum/errors.hpp"
#include "erdosum/primes.hpp"

namespace erdosum {

namespace {

// Terms m > M of sum_{m} P(m)/m or sum_m |log zeta(m)|/m are below
// 2 * 2^-M / M * 2 (P(m), log zeta(m) <= 2^{1-m}); pick M for the cutoff.
unsigned series_cut(const ZetaEngine& engine) {
  return static_cast<unsigned>(engine.ctx().working_digits() * 3.33) + 16;
}

}  // namespace

ConstantsBundle constants(const ZetaEngine& engine) {
  const mpfr_prec_t wb = engine.ctx().bits();
  const unsigned m_max = series_cut(engine);

  ConstantsBundle b;
  b.precision_digits = engine.ctx().target_digits();

  // c = h(1) = sum_{m>=2} P(m)/m.
  Real c(wb);
  for (unsigned m = 2; m <= m_max; ++m) c += engine.prime_zeta_int(m) / static_cast<unsigned long>(m);
  b.c = c;
  b.alpha = exp(-c);

  // Independent route: prod_{m>=2} zeta(m)^{mu(m)/m}.
  Real alpha2 = Real::of(1ul, wb);
  for (unsigned m = 2; m <= m_max; ++m) {
    const int mu = mobius(m);
    if (mu == 0) continue;
    const Real e = Real::of(static_cast<long>(mu), wb) / static_cast<unsigned long>(m);
    alpha2 *= pow(engine.zeta(engine.ctx().make(static_cast<unsigned long>(m))), e);
  }
  const Real tol = engine.eval_epsilon() * 32ul;
  if (abs(b.alpha - alpha2) > tol)
    throw ConsistencyError("constants: the two alpha routes disagree beyond tolerance");

  // h'(1) = sum_{m>=2} P'(m) = -sum_p log p / (p (p-1)).
  Real hp(wb);
  for (unsigned m = 2; m <= m_max; ++m) hp += engine.prime_zeta_deriv_int(m);
  b.h_prime_1 = hp;

  b.euler_gamma = Real::euler_gamma(wb);
  const Real pi = Real::pi(wb);
  b.six_over_pi2 = Real::of(6ul, wb) / (pi * pi);
  return b;
}

std::vector<Real> q_weights(unsigned m_max, const ZetaEngine& engine) {
  if (m_max > 200) throw CapacityError("q_weights: m_max is capped at 200");
  const mpfr_prec_t wb = engine.ctx().bits();
  std::vector<Real> q;
  q.reserve(m_max + 1);
  q.push_back(Real::of(1ul, wb));
  for (unsigned m = 1; m <= m_max; ++m) {
    Real acc(wb);
    for (unsigned j = 2; j <= m; ++j)
      acc += engine.prime_zeta_int(j) * q[m - j];
    q.push_back(acc / static_cast<unsigned long>(m));
  }
  return q;
}

double q_tilde(unsigned k) {
  // 2^-k sum_{n=0}^k (k-n+1) 2^n / n!
  double sum = 0.0, pow_term = 1.0;  // 2^n / n!
  for (unsigned n = 0; n <= k; ++n) {
    sum += (k - n + 1.0) * pow_term;
    pow_term *= 2.0 / (n + 1.0);
  }
  return std::ldexp(sum, -static_cast<int>(k));
}

Real beta_lower_bound(unsigned k, const ZetaEngine& engine) {
  return beta_lower_bound(k, engine, constants(engine).alpha);
}

Real beta_lower_bound(unsigned k, const ZetaEngine& engine, const Real& alpha) {
  if (k < 9) throw std::domain_error("beta_lower_bound: k must be >= 9");
  const mpfr_prec_t wb = engine.ctx().bits();
  const Real two = Real::of(2ul, wb);
  const Real three = Real::of(3ul, wb);

  auto P = [&](unsigned j) { return engine.prime_zeta_int(j); };
  auto Pd = [&](unsigned j) { return engine.prime_zeta_deriv_int(j); };
  auto pow2m = [&](long e) { return pow(two, -e); };   // 2^-e
  auto pow3m = [&](long e) { return pow(three, -e); }; // 3^-e

  Real sum = Real::of(1ul, wb);
  for (unsigned j = 2; j <= 6; ++j)
    sum += (P(j) + alpha * Pd(j) * pow2m(static_cast<long>(k - j))) / static_cast<unsigned long>(j);
  sum += (P(2) * P(2) + alpha * P(2) * Pd(2) * pow2m(static_cast<long>(k - 4)) +
          alpha * alpha * Pd(2) * Pd(2) * pow3m(static_cast<long>(k - 3))) /
         8ul;
  for (unsigned j = 3; j <= 6; ++j) {
    Real inner = P(2) * P(j) +
                 alpha * pow2m(static_cast<long>(k - j - 1)) * (Pd(2) * P(j) + P(2) * Pd(j)) +
                 alpha * alpha * Pd(2) * Pd(j) * pow3m(static_cast<long>(k - j - 1));
    sum += inner / (2ul * j);
  }
  return alpha * sum;
}

}  // namespace erdosum
