#include "erdosum/asymptotics.hpp"

#include <stdexcept>

#include "erdosum/errors.hpp"

namespace erdosum {

Real gamma_function(const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0.0)) throw std::domain_error("gamma_function: x must be > 0");
  return tgamma(x.rounded_to(ctx.bits()));
}

// The raw series sum_{m>=2} (z^m -+ z) P(m)/m converges like (z/2)^m, which
// crawls as z -> 2. Peeling the p=2 part off P(m) leaves P3(m) = P(m) - 2^-m
// with P3(m) <= 1.9 * 3^-m, so the split
//   standard:   [-log(1-z/2) - z/2] + sum (z^m P3(m) - z P(m))/m
//   squarefree: [ log(1+z/2) - z/2] + sum (-(-z)^m P3(m) - z P(m))/m
// converges like (z/3)^m on the whole closed range (and stays finite for the
// squarefree variant at z = 2).
Real Densities::log_series(const Real& z, bool squarefree) const {
  const mpfr_prec_t wb = engine_.ctx().bits();
  const Real eps = engine_.eval_epsilon();
  const Real zz = z.rounded_to(wb);
  const Real half_z = zz / 2ul;

  Real sum(wb);
  if (!squarefree)
    sum = -log(1ul - half_z) - half_z;
  else
    sum = log(1ul + half_z) - half_z;
  if (zz.is_zero()) return sum;

  Real zpow = zz;  // z^m
  for (unsigned m = 2;; ++m) {
    if (m > 100000) throw CapacityError("densities: log series did not converge");
    zpow *= zz;
    const Real pm = engine_.prime_zeta_int(m);
    const Real p3 = pm - Real::pow2(-static_cast<long>(m));
    Real head = zpow * p3;
    if (squarefree && m % 2 == 0) head = -head;
    sum += (head - zz * pm) / static_cast<unsigned long>(m);

    // P3(t) <= 1.9 * 3^-t and P(t) <= 2^{1-t}; both tails geometric.
    Real t1 = Real::of(1.9, wb) * pow(zz / 3ul, static_cast<unsigned long>(m + 1));
    Real t2 = zz * Real::pow2(-static_cast<long>(m));
    Real tail = (t1 * 3ul + t2 * 2ul) / static_cast<unsigned long>(m + 1);
    if (tail < eps && m >= 8) break;
  }
  return sum;
}

Real Densities::G(const Real& z) const {
  if (z < 0.0 || z >= 2.0) throw std::domain_error("G: z must lie in [0, 2)");
  const mpfr_prec_t wb = engine_.ctx().bits();
  const Real one = Real::of(1ul, wb);
  return exp(log_series(z, false)) / tgamma(one + z.rounded_to(wb));
}

Real Densities::G_star(const Real& z) const {
  if (z < 0.0 || z > 2.0) throw std::domain_error("G_star: z must lie in [0, 2]");
  const mpfr_prec_t wb = engine_.ctx().bits();
  const Real one = Real::of(1ul, wb);
  return exp(log_series(z, true)) / tgamma(one + z.rounded_to(wb));
}

Real Densities::G_q(const Real& z, std::uint64_t q) const {
  if (q < 1) throw std::domain_error("G_q: q must be >= 1");
  const mpfr_prec_t wb = engine_.ctx().bits();
  Real g = G(z);
  std::uint64_t rest = q;
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    g *= (1ul - z.rounded_to(wb) / Real::of(p, wb));
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) g *= (1ul - z.rounded_to(wb) / Real::of(rest, wb));
  return g;
}

Real Densities::main_term(unsigned k, const Real& x, DensityKind kind, std::uint64_t q) const {
  const mpfr_prec_t wb = engine_.ctx().bits();
  if (!(x > 3.0)) throw std::domain_error("main_term: x must exceed e^e");
  const Real lx = log(x.rounded_to(wb));
  const Real llx = log(lx);
  if (Real::of(static_cast<unsigned long>(k), wb) > llx * validity_ratio)
    throw std::domain_error("main_term: k exceeds the validity range 1.99 loglog x");

  const Real z = Real::of(static_cast<unsigned long>(k), wb) / llx;
  Real density(wb);
  Real scale = Real::of(1ul, wb);
  switch (kind) {
    case DensityKind::standard:
      density = G(z);
      break;
    case DensityKind::squarefree:
      density = G_star(z);
      break;
    case DensityKind::progression: {
      density = G_q(z, q);
      std::uint64_t phi = 1, rest = q;
      for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        std::uint64_t pe = 1;
        while (rest % p == 0) {
          rest /= p;
          pe *= p;
        }
        phi *= pe - pe / p;
      }
      if (rest > 1) phi *= rest - 1;
      scale = 1ul / Real::of(phi, wb);
      break;
    }
  }
  return scale * density * (x.rounded_to(wb) / lx) *
         pow(llx, static_cast<unsigned long>(k)) / Real::factorial(k, wb);
}

}  // namespace erdosum
