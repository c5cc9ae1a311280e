#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "erdosum/precision.hpp"
#include "erdosum/real.hpp"

namespace erdosum {

// Value with a rigorous two-sided bracket, decomposed into the uncomputed
// singularity piece, the quadrature main term, and the uncomputed far tail.
// value = main_value + (midpoint of the singularity bracket) + (midpoint of
// the tail bracket); bracket width = 2*main_error + singularity_bound +
// tail_bound.
struct IntegralResult {
  Real value;
  Real bracket_low;
  Real bracket_high;
  Real singularity_bound;  // [0, b] bracket for s in (1, 1+eps_k]
  Real tail_bound;         // [0, b] bracket for s >= S_max
  Real main_value;
  Real main_error;
  long nodes_used = 0;

  IntegralResult()
      : value(MPFR_PREC_MIN),
        bracket_low(MPFR_PREC_MIN),
        bracket_high(MPFR_PREC_MIN),
        singularity_bound(MPFR_PREC_MIN),
        tail_bound(MPFR_PREC_MIN),
        main_value(MPFR_PREC_MIN),
        main_error(MPFR_PREC_MIN) {}

  Real width() const { return bracket_high - bracket_low; }
  // floor(-log10(width)) - 1, the certified decimal places.
  int digits_certified() const;
};

struct QuadratureConfig {
  double tail_point = 10.0;  // S: u-substitution below, plain s-panels above
  // Floor for the singularity cut: eps_k = e^-U with U >= this * k. The cut
  // always extends far enough past 2k that the Lemma bracket certifies the
  // requested digits; 0 leaves the cut purely certification-driven.
  double singularity_exponent = 0.0;
  int base_order = 16;  // Gauss-Legendre order (doubled for the error estimate)
  double panel_width_u = 3.0;
  int max_bisect = 14;
  std::uint64_t prime_cutoff = 100;
};

// Gauss-Legendre nodes/weights on [-1,1], cached per (n, bits).
void gauss_legendre_rule(unsigned n, mpfr_prec_t bits, std::vector<Real>& nodes,
                         std::vector<Real>& weights);

// Gamma(k+1, x) = k! e^-x sum_{i<=k} x^i/i!, exact up to rounding.
Real upper_incomplete_gamma_int(unsigned k, const Real& x);

// Integrals over (1, inf) with certified brackets:
//   f_nk:              int P_k(s) ds            = f(N_k)
//   f_nk_star:         int P*_k(s) ds           = f(N*_k)
//   int_log_zeta_pow:  (1/k!) int (log zeta)^k ds
//   int_prime_zeta_pow:(1/k!) int P(s)^k ds
// The u = -log(s-1) substitution handles the logarithmic singularity; the
// unreached singularity mass is bracketed via P_k(s) <= log(1/(s-1))^k / k!
// (resp. the log zeta / P expansions at s=1), the far tail via geometric
// majorants certified at runtime from P(2) < 1/2.
class Quadrature {
 public:
  explicit Quadrature(PrecisionContext ctx, QuadratureConfig cfg = {});

  IntegralResult f_nk(unsigned k) const;
  IntegralResult f_nk_star(unsigned k) const;
  std::pair<IntegralResult, IntegralResult> f_nk_pair(unsigned k) const;
  // One shared-node pass for every k in 1..k_max; [k-1] holds (f_nk, f_nk_star).
  std::vector<std::pair<IntegralResult, IntegralResult>> f_nk_table(unsigned k_max) const;

  IntegralResult int_log_zeta_pow(unsigned k) const;
  IntegralResult int_prime_zeta_pow(unsigned k) const;
  std::vector<IntegralResult> int_log_zeta_pow_batch(const std::vector<unsigned>& ks) const;
  std::vector<IntegralResult> int_prime_zeta_pow_batch(const std::vector<unsigned>& ks) const;

  // Normalized tail (1/k!) int_{s0}^inf g^k ds for g = log zeta or P.
  IntegralResult power_tail_from(double s0, unsigned k, bool prime_variant) const;

  const PrecisionContext& ctx() const { return ctx_; }
  const QuadratureConfig& config() const { return cfg_; }

 private:
  PrecisionContext ctx_;
  QuadratureConfig cfg_;
};

}  // namespace erdosum
