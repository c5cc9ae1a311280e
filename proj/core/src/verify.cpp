#include "erdosum/verify.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "erdosum/almost_prime.hpp"
#include "erdosum/asymptotics.hpp"
#include "erdosum/bounds.hpp"
#include "erdosum/quadrature.hpp"
#include "erdosum/sieve.hpp"
#include "erdosum/zeta.hpp"

namespace erdosum {

namespace {

void push(VerifyReport& rep, const std::string& name, bool pass, double margin,
          const std::string& detail = "") {
  rep.checks.push_back({name, pass, margin, detail});
}

// pass iff |x| <= tol; margin is the decimal-digit slack.
void push_abs(VerifyReport& rep, const std::string& name, const Real& x, const Real& tol) {
  const double ax = abs(x).to_double();
  const double t = tol.to_double();
  const bool pass = abs(x) <= tol;
  const double margin = (ax > 0 && t > 0) ? std::log10(t / ax) : 99.0;
  push(rep, name, pass, margin, "|err|=" + abs(x).to_string_sci(3) + " tol=" + tol.to_string_sci(3));
}

std::uint64_t partition_count(unsigned n) {
  // Euler's pentagonal recurrence.
  static std::map<unsigned, std::uint64_t> memo;
  if (n == 0) return 1;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (unsigned k = 1;; ++k) {
    const unsigned g1 = k * (3 * k - 1) / 2;
    const unsigned g2 = k * (3 * k + 1) / 2;
    if (g1 > n && g2 > n) break;
    const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
    std::uint64_t add = 0;
    if (g1 <= n) add += partition_count(n - g1);
    if (g2 <= n) add += partition_count(n - g2);
    total = sign > 0 ? total + add : total - add;
  }
  memo[n] = total;
  return total;
}

struct Factored {
  unsigned omega;
  bool squarefree;
};

Factored trial_factor(std::uint64_t n) {
  Factored f{0, true};
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.omega += e;
    if (e >= 2) f.squarefree = false;
  }
  if (n > 1) f.omega += 1;
  return f;
}

}  // namespace

VerifyReport verify_identities(const VerifyOptions& opt) {
  VerifyReport rep{"identities", {}};
  const PrecisionContext ctx(std::max(opt.digits, 18));
  const ZetaEngine engine(ctx, opt.prime_cutoff);
  const mpfr_prec_t wb = ctx.bits();
  const Real eps10 = engine.eval_epsilon() * 10ul;

  // Recursion vs partition formula, both families.
  for (double sd : {1.1, 1.5, 2.0, 3.0}) {
    const Real s = ctx.make(sd);
    Real worst(wb), worst_star(wb);
    for (unsigned k = 1; k <= 15; ++k) {
      PkEvaluator ev(engine, k, s);
      worst = max(worst, abs(ev.pk(k) - pk_via_partitions(engine, k, s)));
      worst_star = max(worst_star, abs(ev.pk_star(k) - pk_star_via_partitions(engine, k, s)));
    }
    push_abs(rep, "recursion_vs_partitions_s=" + std::to_string(sd), worst, eps10);
    push_abs(rep, "recursion_vs_partitions_star_s=" + std::to_string(sd), worst_star, eps10);
  }

  // sum_k P_k(2) = zeta(2), sum_k P*_k(2) = zeta(2)/zeta(4), K = 60.
  {
    const Real two = ctx.make(2.0);
    PkEvaluator ev(engine, 60, two);
    Real sum(wb), sum_star(wb);
    sum += 1ul;
    sum_star += 1ul;
    for (unsigned k = 1; k <= 60; ++k) {
      sum += ev.pk(k);
      sum_star += ev.pk_star(k);
    }
    const Real tol = ctx.make(1e-15);
    push_abs(rep, "sum_pk_equals_zeta2", sum - engine.zeta(two), tol);
    push_abs(rep, "sum_pk_star_equals_zeta2_over_zeta4",
             sum_star - engine.zeta(two) / engine.zeta(ctx.make(4.0)), tol);
  }

  // P*_k <= P_k on a (k, s) grid.
  {
    bool ok = true;
    for (double sd : {1.01, 1.5, 2.0, 5.0}) {
      PkEvaluator ev(engine, 20, ctx.make(sd));
      for (unsigned k = 1; k <= 20; ++k)
        ok = ok && ev.pk_star(k) <= ev.pk(k) + ev.pk_error(k);
    }
    push(rep, "pk_star_dominated_by_pk", ok, ok ? 1 : -1);
  }

  // P_k(s) <= log(1/(s-1))^k / k! for s in (1, 1+e^-2k).
  {
    bool ok = true;
    double worst = 1e9;
    for (unsigned k = 2; k <= 8; ++k) {
      for (double frac : {0.9, 0.5, 0.1}) {
        const Real delta = ctx.make(frac) * exp(ctx.make(-2.0 * k));
        const Real s = ctx.make(1.0) + delta;
        PkEvaluator ev(engine, k, s);
        const Real bound = pow(log(1ul / delta), static_cast<unsigned long>(k)) /
                           Real::factorial(k, wb);
        ok = ok && ev.pk(k) <= bound;
        worst = std::min(worst, (bound / ev.pk(k)).to_double());
      }
    }
    push(rep, "pk_log_majorant_near_singularity", ok, worst - 1.0);
  }

  // Q recurrence vs direct enumeration over partitions with parts >= 2.
  {
    auto q = q_weights(12, engine);
    Real worst(wb);
    for (unsigned m = 2; m <= 12; ++m) {
      Real direct(wb);
      for_each_partition(m, [&](const PartitionVector& pv) {
        if (pv.multiplicities[0] != 0) return;  // parts >= 2 only
        Real term = Real::of(1ul, wb);
        for (unsigned j = 2; j <= m; ++j) {
          const unsigned nj = pv.multiplicities[j - 1];
          if (nj == 0) continue;
          term *= pow(engine.prime_zeta_int(j) / static_cast<unsigned long>(j),
                      static_cast<unsigned long>(nj));
          term /= Real::factorial(nj, wb);
        }
        direct += term;
      });
      worst = max(worst, abs(q[m] - direct));
    }
    push_abs(rep, "q_weights_vs_partition_enumeration", worst, eps10);
  }

  // Q(k) < q_tilde(k) <= e^2 k 2^-k.
  {
    auto q = q_weights(100, engine);
    bool ok = true;
    for (unsigned k = 1; k <= 100; ++k) {
      ok = ok && q[k] < q_tilde(k);
      ok = ok && q_tilde(k) <= std::exp(2.0) * k * std::ldexp(1.0, -static_cast<int>(k)) + 1e-300;
    }
    push(rep, "q_tilde_majorant", ok, ok ? 1 : -1);
  }

  // sum_m Q(m) = 1/alpha.
  {
    auto q = q_weights(200, engine);
    Real sum(wb);
    for (const auto& v : q) sum += v;
    const Real alpha = constants(engine).alpha;
    push_abs(rep, "sum_q_equals_inv_alpha", sum - 1ul / alpha, ctx.make(1e-15));
  }

  // Incomplete gamma closed forms.
  {
    const Real x0 = ctx.make(0.0);
    push_abs(rep, "gamma_k1_at_zero", upper_incomplete_gamma_int(5, x0) - Real::factorial(5, wb),
             engine.eval_epsilon());
    const Real one = ctx.make(1.0);
    push_abs(rep, "gamma_1_x", upper_incomplete_gamma_int(0, one) - exp(-one),
             engine.eval_epsilon());
    push_abs(rep, "gamma_3_1", upper_incomplete_gamma_int(2, one) - 5ul / exp(one),
             engine.eval_epsilon());
  }

  // Partition stream counts vs the pentagonal recurrence.
  {
    bool ok = true;
    for (unsigned k : {3u, 5u, 12u, 20u}) {
      std::uint64_t n = 0;
      for_each_partition(k, [&](const PartitionVector&) { ++n; });
      ok = ok && n == partition_count(k);
    }
    push(rep, "partition_stream_counts", ok, ok ? 1 : -1,
         "p(20)=" + std::to_string(partition_count(20)));
  }

  return rep;
}

VerifyReport verify_inequalities(const VerifyOptions& opt) {
  VerifyReport rep{"inequalities", {}};
  const PrecisionContext ctx(std::max(opt.digits, 20));
  const ZetaEngine engine(ctx, opt.prime_cutoff);
  const mpfr_prec_t wb = ctx.bits();
  const Real alpha = constants(engine).alpha;

  // 0 < P(s) < log zeta(s) on (1.001, 20].
  {
    bool ok = true;
    for (int i = 0; i <= 40; ++i) {
      const Real s = ctx.make(1.001) * pow(ctx.make(20.0 / 1.001), ctx.make(i / 40.0));
      const Real p = engine.prime_zeta(s);
      ok = ok && p > 0.0 && p < engine.log_zeta(s);
    }
    push(rep, "prime_zeta_below_log_zeta", ok, ok ? 1 : -1);
  }

  // 0 < log zeta(s) + log(s-1) < .6 (s-1) on (1, 2].
  {
    bool ok = true;
    double worst = 1e9;
    for (int i = 0; i <= 32; ++i) {
      const Real sm1 = pow(ctx.make(10.0), ctx.make(-8.0 + 8.0 * i / 32.0));
      const Real s = ctx.make(1.0) + sm1;
      const Real g = engine.log_zeta(s) + log(sm1);
      ok = ok && g > 0.0 && g < sm1 * 0.6;
      worst = std::min(worst, (sm1 * 0.6 - g).to_double() / (0.6 * sm1.to_double()));
    }
    push(rep, "log_zeta_expansion_band", ok, worst);
  }

  // 0 < P(s) - log(alpha/(s-1)) < 1.4 (s-1) on (1, 2].
  {
    bool ok = true;
    double worst = 1e9;
    for (int i = 0; i <= 32; ++i) {
      const Real sm1 = pow(ctx.make(10.0), ctx.make(-8.0 + 8.0 * i / 32.0));
      const Real s = ctx.make(1.0) + sm1;
      const Real g = engine.prime_zeta(s) - log(alpha / sm1);
      ok = ok && g > 0.0 && g < sm1 * 1.4;
      worst = std::min(worst, (sm1 * 1.4 - g).to_double() / (1.4 * sm1.to_double()));
    }
    push(rep, "prime_zeta_expansion_band", ok, worst);
  }

  // 0 < log zeta(s) < 2^{1-s} for s >= 2.
  {
    bool ok = true;
    for (int i = 0; i <= 40; ++i) {
      const Real s = ctx.make(2.0 + 58.0 * i / 40.0);
      const Real lz = engine.log_zeta(s);
      ok = ok && lz > 0.0 && lz < pow(ctx.make(2.0), 1ul) * pow(ctx.make(2.0), -s);
    }
    push(rep, "log_zeta_geometric_bound", ok, ok ? 1 : -1);
  }

  // Prime-cutoff independence: A = 50 vs A = 500.
  {
    const ZetaEngine e50(ctx, 50), e500(ctx, 500);
    Real worst(wb);
    for (double sd : {1.0001, 1.5, 2.0, 10.0})
      worst = max(worst, abs(e50.prime_zeta(ctx.make(sd)) - e500.prime_zeta(ctx.make(sd))));
    push_abs(rep, "prime_zeta_cutoff_independence", worst, engine.eval_epsilon() * 2ul);
  }

  // zeta_truncated(s) * prod_{p<=A}(1-p^-s)^-1 = zeta(s).
  {
    Real worst(wb);
    for (double sd : {1.01, 2.0, 5.0}) {
      const Real s = ctx.make(sd);
      Real prod = Real::of(1ul, wb);
      for (std::uint64_t p : engine.prime_table().primes)
        prod *= (1ul - pow(ctx.make(p), -s));
      worst = max(worst, abs(engine.zeta_truncated(s) / prod - engine.zeta(s)) /
                             abs(engine.zeta(s)));
    }
    push_abs(rep, "zeta_truncated_euler_product", worst, engine.eval_epsilon() * 4ul);
  }

  // P(2) < 1/2 (and the sharper numeric window used by the tail majorants).
  {
    const Real p2 = engine.prime_zeta_int(2);
    push(rep, "prime_zeta_2_below_half", p2 < 0.5 && p2 > 0.45, (0.5 - p2.to_double()));
  }

  // zeta closed forms.
  {
    const Real pi = Real::pi(wb);
    push_abs(rep, "zeta_2_closed_form", engine.zeta(ctx.make(2.0)) - pi * pi / 6ul,
             engine.eval_epsilon());
    push_abs(rep, "zeta_4_closed_form",
             engine.zeta(ctx.make(4.0)) - pow(pi, 4ul) / 90ul, engine.eval_epsilon());
  }

  // h'(1) against the direct prime sum with an integral tail bracket.
  {
    const auto bundle = constants(engine);
    auto primes = generate_primes(1000000);
    double direct = 0.0;
    for (std::uint64_t p : primes) {
      const double pd = static_cast<double>(p);
      direct += std::log(pd) / (pd * (pd - 1.0));
    }
    // tail over p > 1e6: below sum_{n>1e6} log n / (n (n-1)) ~ (log B + 1)/B
    const double tail_hi = (std::log(1e6) + 1.0) / 1e6;
    const double got = -bundle.h_prime_1.to_double();
    const bool ok = got >= direct && got <= direct + tail_hi;
    push(rep, "h_prime_1_vs_direct_sum", ok, tail_hi - std::abs(got - direct - tail_hi / 2),
         "h'(1)=" + bundle.h_prime_1.to_string_sci(8));
  }

  // Finite-difference cross-checks at s = 3 (h = 1e-15).
  {
    const Real h = ctx.make(1e-15);
    const Real s = ctx.make(3.0);
    const Real fd_zeta = (engine.zeta(s + h) - engine.zeta(s - h)) / (h * 2ul);
    push_abs(rep, "zeta_deriv_finite_difference", fd_zeta - engine.zeta_deriv(s),
             ctx.make(1e-14));
    const Real fd_p = (engine.prime_zeta(s + h) - engine.prime_zeta(s - h)) / (h * 2ul);
    push_abs(rep, "prime_zeta_deriv_finite_difference", fd_p - engine.prime_zeta_deriv(s),
             ctx.make(1e-14));
  }

  // zeta'(s) ~ -log2 2^-s for large s.
  {
    bool ok = true;
    for (double sd : {30.0, 50.0}) {
      const Real s = ctx.make(sd);
      const Real lhs = abs(engine.zeta_deriv(s) + Real::ln2(wb) * pow(ctx.make(2.0), -s));
      const Real rhs = log(ctx.make(3.0)) * 2ul * pow(ctx.make(3.0), -s);
      ok = ok && lhs <= rhs;
    }
    push(rep, "zeta_deriv_leading_term", ok, ok ? 1 : -1);
  }

  return rep;
}

VerifyReport verify_oracle(const VerifyOptions& opt) {
  VerifyReport rep{"oracle", {}};
  SieveConfig scfg;
  scfg.threads = opt.threads;
  const std::uint64_t limit = opt.limit;

  // Exactness against trial division for n <= 1e5.
  {
    struct ExactAcc {
      std::uint64_t mismatches = 0;
      void accumulate(std::uint64_t n, unsigned omega, bool squarefree) {
        const Factored f = trial_factor(n);
        if (f.omega != omega || f.squarefree != squarefree) ++mismatches;
      }
      void merge(const ExactAcc& o) { mismatches += o.mismatches; }
    };
    auto acc = scan_factored<ExactAcc>(100000, scfg, ExactAcc{});
    push(rep, "omega_mu2_exact_to_1e5", acc.mismatches == 0,
         acc.mismatches == 0 ? 1 : -static_cast<double>(acc.mismatches));
  }

  const SieveSummary s = sieve_summary(limit, 8, scfg);

  // Every n in [2, X] lands in exactly one Omega class.
  {
    std::uint64_t total = 0;
    for (auto c : s.counts) total += c;
    const bool ok = total == limit - 1;
    push(rep, "counts_partition_range", ok, ok ? 1 : -1,
         "sum=" + std::to_string(total) + " X-1=" + std::to_string(limit - 1));
  }

  // Squarefree counts dominated, partial sums grow with X.
  {
    bool ok = true;
    for (std::size_t k = 0; k < s.counts.size(); ++k) ok = ok && s.counts_star[k] <= s.counts[k];
    push(rep, "squarefree_counts_dominated", ok, ok ? 1 : -1);

    const SieveSummary s10 = sieve_summary(limit / 10, 8, scfg);
    bool grow = true;
    for (unsigned k = 1; k <= 8; ++k) grow = grow && s10.partial_f[k] < s.partial_f[k];
    push(rep, "partial_sums_increase_with_limit", grow, grow ? 1 : -1);
  }

  // Hand-enumerated small cases.
  {
    const SieveSummary s30 = sieve_summary(30, 4, scfg);
    push(rep, "n2_of_30", s30.counts[2] == 10, s30.counts[2] == 10 ? 1 : -1,
         "N_2(30)=" + std::to_string(s30.counts[2]));
    const SieveSummary s100 = sieve_summary(100, 4, scfg);
    push(rep, "n2_of_100", s100.counts[2] == 34, s100.counts[2] == 34 ? 1 : -1);
    push(rep, "count_ap_30_even", count_ap(30, 2, 2, 0, scfg) == 6, 1);
    // forbidden={2}: odd 2-almost primes <= 30 are {9,15,21,25}
    const PrimePowerFactor no2[] = {{2, 1}};
    double expect = 0;
    for (std::uint64_t n : {9, 15, 21, 25}) expect += 1.0 / (n * std::log(double(n)));
    const double got = restricted_partial_f(30, 2, no2, scfg);
    push(rep, "restricted_odd_2almost_30", std::abs(got - expect) < 1e-15,
         1e-15 - std::abs(got - expect));
  }

  // Partial sums sit strictly below the certified brackets.
  {
    QuadratureConfig qc;
    qc.tail_point = opt.tail_point;
    qc.prime_cutoff = opt.prime_cutoff;
    Quadrature quad(PrecisionContext(12), qc);
    auto table = quad.f_nk_table(8);
    bool ok = true;
    double min_gap = 1e300;
    for (unsigned k = 1; k <= 8; ++k) {
      const double hi = table[k - 1].first.bracket_high.to_double();
      const double hi_star = table[k - 1].second.bracket_high.to_double();
      ok = ok && s.partial_f[k] < hi && s.partial_f_star[k] < hi_star;
      min_gap = std::min(min_gap, hi - s.partial_f[k]);
    }
    push(rep, "partial_sums_below_brackets", ok, min_gap);
  }

  // AP counts add up across residues for q <= 5.
  {
    bool ok = true;
    for (std::uint64_t q = 2; q <= 5; ++q) {
      auto t = count_ap_all(limit, 8, q, scfg);
      for (unsigned k = 0; k <= 8; ++k) {
        std::uint64_t sum = 0;
        for (std::uint64_t a = 0; a < q; ++a) sum += t[k][a];
        ok = ok && sum == s.counts[k];
      }
    }
    push(rep, "ap_counts_sum_to_totals", ok, ok ? 1 : -1);
  }

  // partial_pk approaches (P(2)^2 + P(4))/2 from below at k=2, s=2.
  {
    const PrecisionContext ctx(20);
    const ZetaEngine engine(ctx, opt.prime_cutoff);
    PkEvaluator ev(engine, 2, ctx.make(2.0));
    const double pk2 = ev.pk(2).to_double();
    const double got = partial_pk(2.0, limit, 2, scfg);
    const bool ok = got < pk2 && pk2 - got < 1e-4;
    push(rep, "partial_pk_low_bound", ok, 1e-4 - (pk2 - got),
         "partial=" + std::to_string(got) + " P_2(2)=" + std::to_string(pk2));
  }

  return rep;
}

VerifyReport verify_asymptotics(const VerifyOptions& opt) {
  VerifyReport rep{"asymptotics", {}};
  const PrecisionContext ctx(std::max(opt.digits, 25));
  const ZetaEngine engine(ctx, opt.prime_cutoff);
  const mpfr_prec_t wb = ctx.bits();
  const Densities dens(engine);
  const Real tol20 = ctx.make(1e-20);

  push_abs(rep, "G_at_0", dens.G(ctx.make(0.0)) - 1ul, tol20);
  push_abs(rep, "G_at_1", dens.G(ctx.make(1.0)) - 1ul, tol20);
  {
    const Real pi = Real::pi(wb);
    push_abs(rep, "G_star_at_1", dens.G_star(ctx.make(1.0)) - Real::of(6ul, wb) / (pi * pi),
             tol20);
  }
  {
    bool ok = true;
    for (std::uint64_t q = 1; q <= 12; ++q) {
      std::uint64_t phi = 0;
      for (std::uint64_t a = 1; a <= q; ++a) {
        std::uint64_t g = std::gcd(a, q);
        if (g == 1) ++phi;
      }
      const Real expect = Real::of(phi, wb) / Real::of(q, wb);
      ok = ok && abs(dens.G_q(ctx.make(1.0), q) - expect) <= tol20;
    }
    push(rep, "G_q_at_1_totient_ratio", ok, ok ? 1 : -1);
  }

  // Log-series vs direct Euler product over p <= 1e6 with a tail bracket.
  {
    const auto primes = generate_primes(1000000);
    const Real b = ctx.make(1000000.0);
    bool ok = true;
    double worst_margin = 1e9;
    for (double zd : {0.25, 0.5, 0.75, 1.5}) {
      const Real z = ctx.make(zd);
      Real lp(wb);
      for (std::uint64_t p : primes) {
        const Real pr = ctx.make(p);
        lp += -log(1ul - z / pr) + z * log(1ul - 1ul / pr);
      }
      const Real series = log(dens.G(z) * tgamma(ctx.make(1.0) + z));
      // tail: sum_{m>=2} |z^m - z| S_B(m), S_B(m) <= B^{1-m}(1/(m-1) + 1/B)
      Real bracket(wb);
      for (unsigned m = 2; m <= 80; ++m) {
        const Real sb = pow(b, 1l - static_cast<long>(m)) *
                        (1ul / Real::of(static_cast<unsigned long>(m - 1), wb) + 1ul / b);
        bracket += (pow(z, static_cast<unsigned long>(m)) + z) / static_cast<unsigned long>(m) * sb;
      }
      const double diff = abs(series - lp).to_double();
      const double br = bracket.to_double();
      ok = ok && diff <= br;
      worst_margin = std::min(worst_margin, std::log10(br / (diff + 1e-300)));
    }
    push(rep, "log_series_vs_euler_product", ok, worst_margin);
  }

  // G_q(z) <= G(z) on [0, 1].
  {
    bool ok = true;
    for (std::uint64_t q = 2; q <= 30; ++q)
      for (double zd : {0.0, 0.25, 0.5, 0.75, 1.0})
        ok = ok && dens.G_q(ctx.make(zd), q) <= dens.G(ctx.make(zd)) + tol20;
    push(rep, "G_q_dominated_by_G", ok, ok ? 1 : -1);
  }

  // Gamma function spot values.
  {
    const Real pi = Real::pi(wb);
    push_abs(rep, "gamma_half", gamma_function(ctx.make(0.5), ctx) - sqrt(pi),
             engine.eval_epsilon());
    push_abs(rep, "gamma_5_halves",
             gamma_function(ctx.make(2.5), ctx) - Real::of(3ul, wb) / 4ul * sqrt(pi),
             engine.eval_epsilon());
    push_abs(rep, "gamma_one", gamma_function(ctx.make(1.0), ctx) - 1ul, engine.eval_epsilon());
  }

  // Main terms vs sieve counts at x = 1e8 (Omega = 2 standard; the q = 3
  // progression at Omega = 3).
  {
    SieveConfig scfg;
    scfg.threads = opt.threads;
    const std::uint64_t x = 100000000ull;
    const SieveSummary s = sieve_summary(x, 8, scfg);
    const Real mt = dens.main_term(1, ctx.make(static_cast<double>(x)), DensityKind::standard);
    const double ratio = mt.to_double() / static_cast<double>(s.counts[2]);
    push(rep, "main_term_ratio_n2", ratio > 0.85 && ratio < 1.15, 0.15 - std::abs(ratio - 1.0),
         "ratio=" + std::to_string(ratio));

    auto t = count_ap_all(x, 3, 3, scfg);
    const Real mtq =
        dens.main_term(2, ctx.make(static_cast<double>(x)), DensityKind::progression, 3);
    const double ratio_q = mtq.to_double() / static_cast<double>(t[3][1]);
    push(rep, "main_term_ratio_n3_mod3", ratio_q > 0.8 && ratio_q < 1.2,
         0.2 - std::abs(ratio_q - 1.0), "ratio=" + std::to_string(ratio_q));
  }

  return rep;
}

VerifyReport verify_minimum(const VerifyOptions& opt) {
  VerifyReport rep{"minimum", {}};
  const int digits = std::max(opt.digits, 12);
  QuadratureConfig qc;
  qc.tail_point = opt.tail_point;
  qc.prime_cutoff = opt.prime_cutoff;
  Quadrature quad(PrecisionContext(digits), qc);

  auto table = quad.f_nk_table(20);
  const IntegralResult& f6 = table[5].first;

  // f(N_6) bracket sits below every other k <= 20 bracket.
  {
    bool ok = true;
    double min_gap = 1e300;
    for (unsigned k = 1; k <= 20; ++k) {
      if (k == 6) continue;
      const double gap = (table[k - 1].first.bracket_low - f6.bracket_high).to_double();
      ok = ok && gap > 0;
      min_gap = std::min(min_gap, gap);
    }
    push(rep, "f6_below_k_le_20", ok, min_gap);
  }

  // Banks-Martin counterexample with the certified gap.
  {
    const Real gap = table[6].first.bracket_low - f6.bracket_high;
    push(rep, "f6_below_f7_gap", gap > 2.2e-3, gap.to_double() - 2.2e-3,
         "gap=" + gap.to_string_sci(6));
  }

  const PrecisionContext bctx(std::max(digits, 15));
  const ZetaEngine engine(bctx, opt.prime_cutoff);
  const Real alpha = constants(engine).alpha;

  // beta_20 = 0.991049..., monotone on [9, 60], above f(N_6) for k > 20.
  {
    const Real b20 = beta_lower_bound(20, engine, alpha);
    const double b20d = b20.to_double();
    push(rep, "beta_20_value", b20d >= 0.991049 && b20d < 0.991050,
         1e-6 - std::abs(b20d - 0.9910495), "beta_20=" + b20.to_string_fixed(10));

    bool mono = true;
    Real prev = beta_lower_bound(9, engine, alpha);
    for (unsigned k = 10; k <= 60; ++k) {
      Real cur = beta_lower_bound(k, engine, alpha);
      mono = mono && cur > prev;
      prev = cur;
    }
    push(rep, "beta_monotone_9_60", mono, mono ? 1 : -1);

    bool above = b20 > 0.99;
    double min_gap = 1e300;
    for (unsigned k = 21; k <= 60; ++k) {
      const Real bk = beta_lower_bound(k, engine, alpha);
      const double gap = (bk - f6.bracket_high).to_double();
      above = above && gap > 0;
      min_gap = std::min(min_gap, gap);
    }
    push(rep, "beta_k_above_f6_for_k_gt_20", above, min_gap);
  }

  // beta is a genuine lower bound where both sides are computed.
  {
    bool ok = true;
    for (unsigned k : {20u, 25u, 30u}) {
      const IntegralResult fk = k <= 20 ? table[k - 1].first : quad.f_nk(k);
      ok = ok && beta_lower_bound(k, engine, alpha) < fk.bracket_low;
    }
    push(rep, "beta_below_f_nk", ok, ok ? 1 : -1);
  }

  // Exponential upper-bound audit: (upper(k) - 1) / (k 2^-k/2) <= 10 for
  // 20 <= k <= 40, with upper(k) = sum_m Q(m) J_hi(k-m) + Q(k) Cp/(2 log 2).
  {
    auto q = q_weights(40, engine);
    std::vector<unsigned> ks;
    for (unsigned n = 1; n <= 40; ++n) ks.push_back(n);
    auto ints = quad.int_prime_zeta_pow_batch(ks);
    const Real cp = engine.prime_zeta_int(2) * 4ul;
    const Real t0 = cp / (Real::ln2(bctx.bits()) * 2ul);
    bool ok = true;
    double worst_c = 0;
    for (unsigned k = 20; k <= 40; ++k) {
      Real upper(bctx.bits());
      for (unsigned m = 0; m < k; ++m) upper += q[m] * ints[k - m - 1].bracket_high;
      upper += q[k] * t0;
      const double c = (upper.to_double() - 1.0) /
                       (k * std::ldexp(1.0, -static_cast<int>(k) / 2) *
                        (k % 2 ? std::sqrt(0.5) : 1.0));
      worst_c = std::max(worst_c, c);
      ok = ok && c <= 10.0;
    }
    push(rep, "upper_bound_audit_constant", ok, 10.0 - worst_c,
         "max C=" + std::to_string(worst_c));
  }

  return rep;
}

VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "identities") return verify_identities(opt);
  if (name == "inequalities") return verify_inequalities(opt);
  if (name == "oracle") return verify_oracle(opt);
  if (name == "asymptotics") return verify_asymptotics(opt);
  if (name == "minimum") return verify_minimum(opt);
  throw std::domain_error("unknown verify suite: " + name);
}

}  // namespace erdosum
