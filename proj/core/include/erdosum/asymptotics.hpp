#pragma once

#include <cstdint>

#include "erdosum/real.hpp"
#include "erdosum/zeta.hpp"

namespace erdosum {

enum class DensityKind { standard, squarefree, progression };

// Gamma(x) for x > 0 at working precision (MPFR, correctly rounded).
Real gamma_function(const Real& x, const PrecisionContext& ctx);

// The densities of the almost-prime counting asymptotics:
//   G(z)   = (1/Gamma(1+z)) prod_p (1-z/p)^-1 (1-1/p)^z,   z in [0,2)
//   G*(z)  = (1/Gamma(1+z)) prod_p (1+z/p)   (1-1/p)^z,    z in [0,2]
//   G_q(z) = G(z) prod_{p|q} (1-z/p)
// computed via the geometrically-convergent log series
//   log prod = sum_{m>=2} (z^m - z)   P(m)/m        (standard)
//   log prod = sum_{m>=2} (-(-z)^m-z) P(m)/m        (squarefree),
// the Euler products surviving only as test oracles.
class Densities {
 public:
  explicit Densities(const ZetaEngine& engine) : engine_(engine) {}

  Real G(const Real& z) const;
  Real G_star(const Real& z) const;
  Real G_q(const Real& z, std::uint64_t q) const;

  // Main-term prediction for the count of n <= x with Omega(n) = k+1 (and the
  // squarefree / progression variants):
  //   G(k/loglog x) (x/log x) (loglog x)^k / k!
  // Valid for k <= validity_ratio * loglog x; throws std::domain_error beyond.
  Real main_term(unsigned k, const Real& x, DensityKind kind, std::uint64_t q = 1) const;

  double validity_ratio = 1.99;

 private:
  Real log_series(const Real& z, bool squarefree) const;
  const ZetaEngine& engine_;
};

}  // namespace erdosum
