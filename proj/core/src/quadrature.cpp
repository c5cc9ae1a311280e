#include "erdosum/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "erdosum/almost_prime.hpp"
#include "erdosum/errors.hpp"
#include "erdosum/zeta.hpp"

namespace erdosum {

int IntegralResult::digits_certified() const {
  Real w = width();
  if (!(w > 0.0)) return 0;
  return static_cast<int>(std::floor(-log10(w).to_double())) - 1;
}

namespace {

struct RuleKey {
  unsigned n;
  mpfr_prec_t bits;
  bool operator<(const RuleKey& o) const { return n < o.n || (n == o.n && bits < o.bits); }
};

struct RuleCache {
  std::mutex mu;
  std::map<RuleKey, std::pair<std::vector<Real>, std::vector<Real>>> rules;
};

RuleCache& rule_cache() {
  static RuleCache c;
  return c;
}

}  // namespace

void gauss_legendre_rule(unsigned n, mpfr_prec_t bits, std::vector<Real>& nodes,
                         std::vector<Real>& weights) {
  auto& c = rule_cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.rules.find({n, bits});
    if (it != c.rules.end()) {
      nodes = it->second.first;
      weights = it->second.second;
      return;
    }
  }

  const mpfr_prec_t wb = bits + 32;
  std::vector<Real> xs(n, Real(wb)), ws(n, Real(wb));
  const Real tol = Real::pow2(-(bits + 8));
  for (unsigned i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-angle seed, then Newton on P_n.
    Real x = Real::of(std::cos(M_PI * (i + 0.75) / (n + 0.5)), wb);
    Real deriv(wb);
    for (int it = 0; it < 200; ++it) {
      Real p0 = Real::of(1ul, wb), p1 = x;
      for (unsigned l = 2; l <= n; ++l) {
        Real p2 = ((2ul * l - 1ul) * x * p1 - (l - 1ul) * p0) / static_cast<unsigned long>(l);
        p0 = p1;
        p1 = p2;
      }
      deriv = static_cast<unsigned long>(n) * (x * p1 - p0) / (x * x - 1ul);
      Real dx = p1 / deriv;
      x -= dx;
      if (abs(dx) < tol) break;
    }
    Real w = 2ul / ((1ul - x * x) * deriv * deriv);
    xs[i] = -x;
    ws[i] = w;
    xs[n - 1 - i] = x;
    ws[n - 1 - i] = w;
  }
  for (auto& v : xs) v = v.rounded_to(bits);
  for (auto& v : ws) v = v.rounded_to(bits);

  std::lock_guard<std::mutex> lock(c.mu);
  c.rules.emplace(RuleKey{n, bits}, std::make_pair(xs, ws));
  nodes = xs;
  weights = ws;
}

Real upper_incomplete_gamma_int(unsigned k, const Real& x) {
  if (x < 0.0) throw std::domain_error("upper_incomplete_gamma_int: x must be >= 0");
  const mpfr_prec_t bits = x.prec();
  Real term = Real::of(1ul, bits), sum = Real::of(1ul, bits);
  for (unsigned i = 1; i <= k; ++i) {
    term *= x / static_cast<unsigned long>(i);
    sum += term;
  }
  return Real::factorial(k, bits) * exp(-x) * sum;
}

namespace {

enum class FamilyKind { pk, log_pow, p_pow };

struct BatchSpec {
  FamilyKind kind;
  std::vector<unsigned> k_of;   // per component
  std::vector<char> star_of;    // pk family only
  unsigned k_max = 0;
};

struct Workspace {
  const ZetaEngine& engine;
  const BatchSpec& spec;
  mpfr_prec_t wb;
  std::vector<Real> inv_fact;  // 1/k! up to k_max (pow kinds)
};

// g(s) per component, with pessimistic absolute error bounds.
void eval_components(Workspace& w, const Real& s, unsigned k_cap, std::vector<Real>& val,
                     std::vector<Real>& err) {
  const std::size_t nc = w.spec.k_of.size();
  if (w.spec.kind == FamilyKind::pk) {
    PkEvaluator ev(w.engine, k_cap, s);
    for (std::size_t i = 0; i < nc; ++i) {
      const unsigned k = w.spec.k_of[i];
      if (k > k_cap) {
        val[i] = Real(MPFR_PREC_MIN);
        err[i] = Real(MPFR_PREC_MIN);
        continue;
      }
      val[i] = w.spec.star_of[i] ? ev.pk_star(k) : ev.pk(k);
      err[i] = w.spec.star_of[i] ? ev.pk_star_error(k) : ev.pk_error(k);
    }
    return;
  }
  const Real base = w.spec.kind == FamilyKind::p_pow ? w.engine.prime_zeta(s)
                                                     : log(w.engine.zeta(s));
  const Real rel = w.engine.eval_epsilon() / base;  // base > 0 on s > 1
  for (std::size_t i = 0; i < nc; ++i) {
    const unsigned k = w.spec.k_of[i];
    if (k > k_cap) {
      val[i] = Real(MPFR_PREC_MIN);
      err[i] = Real(MPFR_PREC_MIN);
      continue;
    }
    val[i] = pow(base, static_cast<unsigned long>(k)) * w.inv_fact[k];
    err[i] = abs(val[i]) * rel * (1.1 * k) + unit_roundoff(val[i]) * (k + 4ul);
  }
}

struct PanelAccum {
  std::vector<Real> main;
  std::vector<Real> err;
  long nodes = 0;
};

struct PanelParams {
  bool u_side;
  unsigned k_cap;
  int base_order;
  int max_bisect;
};

// One Gauss-Legendre pass of order n over [a,b]; returns per-component
// integral and propagated evaluation error.
void rule_pass(Workspace& w, const PanelParams& pp, unsigned n, const Real& a, const Real& b,
               std::vector<Real>& integral, std::vector<Real>& prop, long& nodes) {
  const std::size_t nc = w.spec.k_of.size();
  const mpfr_prec_t wb = w.wb;
  std::vector<Real> xs, ws;
  gauss_legendre_rule(n, wb, xs, ws);
  const Real mid = (a + b) / 2ul;
  const Real half = (b - a) / 2ul;

  mpfr_prec_t node_bits = wb;
  if (pp.u_side) {
    double bmax = b.to_double();
    if (bmax > 0) node_bits += static_cast<mpfr_prec_t>(bmax * 1.4427) + 16;
  }

  for (std::size_t i = 0; i < nc; ++i) {
    integral[i] = Real(wb);
    prop[i] = Real(wb);
  }
  std::vector<Real> val(nc, Real(MPFR_PREC_MIN)), err(nc, Real(MPFR_PREC_MIN));
  for (unsigned q = 0; q < n; ++q) {
    Real s(node_bits), jac(wb);
    if (pp.u_side) {
      Real u = (mid + half * xs[q]).rounded_to(node_bits);
      Real e = exp(-u);
      s = Real::of(1ul, node_bits) + e;
      jac = e.rounded_to(wb);
    } else {
      s = (mid + half * xs[q]).rounded_to(wb);
      jac = Real::of(1ul, wb);
    }
    eval_components(w, s, pp.k_cap, val, err);
    for (std::size_t i = 0; i < nc; ++i) {
      if (w.spec.k_of[i] > pp.k_cap) continue;
      integral[i] += ws[q] * val[i] * jac;
      prop[i] += ws[q] * err[i] * jac;
    }
    ++nodes;
  }
  for (std::size_t i = 0; i < nc; ++i) {
    integral[i] *= half;
    prop[i] = prop[i] * half + unit_roundoff(integral[i]) * (2ul * n);
  }
}

// Adaptive panel: order doubling for the error estimate, bisection on failure.
void process_panel(Workspace& w, const PanelParams& pp, const Real& a, const Real& b,
                   const std::vector<Real>& alloc_per_unit, int depth, PanelAccum& acc) {
  const std::size_t nc = w.spec.k_of.size();
  std::vector<Real> i_lo(nc, Real(MPFR_PREC_MIN)), p_lo(nc, Real(MPFR_PREC_MIN));
  std::vector<Real> i_hi(nc, Real(MPFR_PREC_MIN)), p_hi(nc, Real(MPFR_PREC_MIN));
  rule_pass(w, pp, pp.base_order, a, b, i_lo, p_lo, acc.nodes);
  rule_pass(w, pp, 2 * pp.base_order, a, b, i_hi, p_hi, acc.nodes);

  const Real width = b - a;
  bool ok = true;
  for (std::size_t i = 0; i < nc && ok; ++i) {
    if (w.spec.k_of[i] > pp.k_cap) continue;
    Real est = abs(i_hi[i] - i_lo[i]) * 4ul + p_hi[i];
    if (est > alloc_per_unit[i] * width) ok = false;
  }
  if (ok || depth >= pp.max_bisect) {
    for (std::size_t i = 0; i < nc; ++i) {
      if (w.spec.k_of[i] > pp.k_cap) continue;
      acc.main[i] += i_hi[i];
      acc.err[i] += abs(i_hi[i] - i_lo[i]) * 4ul + p_hi[i];
    }
    return;
  }
  const Real mid = (a + b) / 2ul;
  process_panel(w, pp, a, mid, alloc_per_unit, depth + 1, acc);
  process_panel(w, pp, mid, b, alloc_per_unit, depth + 1, acc);
}

std::vector<IntegralResult> run_batch(const PrecisionContext& user_ctx,
                                      const QuadratureConfig& cfg, const BatchSpec& spec) {
  const std::size_t nc = spec.k_of.size();
  const unsigned k_max = spec.k_max;
  if (k_max < 1) throw std::domain_error("quadrature: k must be >= 1");
  if (k_max > 60) throw CapacityError("quadrature: k is capped at 60");
  if (cfg.tail_point < 2.0 || cfg.tail_point > 64.0)
    throw std::domain_error("quadrature: tail point must lie in [2, 64]");

  const int target = user_ctx.target_digits();
  const double eps4_log10 = -(target + 1) - 0.602;  // log10(eps_total/4)

  // Singularity cut: start from the Lemma validity floor (u > 2k, plus any
  // configured e^{-c k} floor) and extend until Gamma(k+1,U)/k! certifies the
  // budget for every component (searched in doubles, certified in Reals
  // below).
  double u_cut = std::max({cfg.singularity_exponent * k_max, 2.0 * k_max + 2.0, 8.0});
  auto sing_log10 = [](unsigned k, double u) {
    // log10 of U^k e^-U / (1 - k/U) / k!, valid for u > k
    return (k * std::log(u) - u - std::log1p(-static_cast<double>(k) / u)) / M_LN10 -
           std::lgamma(k + 1.0) / M_LN10;
  };
  for (bool again = true; again;) {
    again = false;
    for (unsigned k : spec.k_of)
      if (sing_log10(k, u_cut) > eps4_log10 - 0.5) {
        u_cut += 2.0;
        again = true;
        break;
      }
  }

  // Working precision: guard for k-fold products plus enough target digits
  // that the singularity floor 10^-target sits below e^-U.
  const int t_int = std::max(target + (302 * static_cast<int>(k_max) + 999) / 1000 + 12,
                             static_cast<int>(u_cut / M_LN10) + 10);
  const PrecisionContext ictx(t_int, 15);
  const ZetaEngine engine(ictx, cfg.prime_cutoff);
  const mpfr_prec_t wb = ictx.bits();

  // Certify P(2) < 1/2; the geometric tail majorants hinge on it.
  if (!(engine.prime_zeta_int(2) < 0.4523))
    throw ConsistencyError("quadrature: P(2) < 0.4523 certification failed");

  const Real eps4 = pow(Real::of(10ul, wb), Real::of(eps4_log10, wb));
  const Real ln2 = Real::ln2(wb);

  // Rigorous per-component singularity bounds at the shared cut.
  const Real u_cut_r = Real::of(u_cut, wb);
  std::vector<Real> b_sing(nc, Real(wb));
  {
    // (u + .6 e^-u)^k majorant inflation for the log zeta / P expansions.
    const Real inflate = exp(Real::of(0.6, wb) * exp(-u_cut_r));
    for (std::size_t i = 0; i < nc; ++i) {
      const unsigned k = spec.k_of[i];
      Real g = upper_incomplete_gamma_int(k, u_cut_r) / Real::factorial(k, wb);
      b_sing[i] = spec.kind == FamilyKind::pk ? g : g * pow(inflate, static_cast<unsigned long>(k));
      if (b_sing[i] > eps4)
        throw PrecisionError("quadrature: singularity bracket failed certification");
    }
  }

  // Per-component far-tail cut S_k and rigorous bound there. Majorants:
  //   P_k(s)          <= (k+1) 2^-ks          (from P(x) <= 4 P(2) 2^-x)
  //   (log zeta)^k/k! <= 2^k 2^-ks / k!       (s >= 3)
  //   P^k/k!          <= same
  std::vector<double> s_cut(nc);
  std::vector<Real> b_tail(nc, Real(wb));
  auto tail_bound = [&](unsigned k, const Real& s0) {
    Real two_pow = pow(Real::of(2ul, wb), -(Real::of(static_cast<double>(k), wb) * s0));
    Real c = spec.kind == FamilyKind::pk
                 ? Real::of(static_cast<unsigned long>(k + 1), wb)
                 : pow(Real::of(2ul, wb), static_cast<unsigned long>(k)) / Real::factorial(k, wb);
    return c * two_pow / (static_cast<unsigned long>(k) * ln2);
  };
  for (std::size_t i = 0; i < nc; ++i) {
    const unsigned k = spec.k_of[i];
    double s0 = cfg.tail_point;
    while (tail_bound(k, Real::of(s0, wb)) > eps4) s0 += std::max(0.5, 2.0 / k);
    s_cut[i] = s0;
    b_tail[i] = tail_bound(k, Real::of(s0, wb));
  }

  Workspace w{engine, spec, wb, {}};
  if (spec.kind != FamilyKind::pk) {
    w.inv_fact.reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k)
      w.inv_fact.push_back(1ul / Real::factorial(k, wb));
  }

  // Budget per unit of integration variable.
  const double u_lo = -std::log(cfg.tail_point - 1.0);
  std::vector<Real> alloc_per_unit(nc, Real(wb));
  for (std::size_t i = 0; i < nc; ++i) {
    const double total = (u_cut - u_lo) + (s_cut[i] - cfg.tail_point) + 1.0;
    alloc_per_unit[i] = eps4 / Real::of(total, wb);
  }

  PanelAccum acc;
  acc.main.assign(nc, Real(wb));
  acc.err.assign(nc, Real(wb));

  // u-side panels cover s in (1 + e^-U, S]. The lower edge must map to
  // exactly the s-side start, so it is -log(S-1) carried in full precision
  // rather than the double seed.
  {
    PanelParams pp{true, k_max, cfg.base_order, cfg.max_bisect};
    const Real u_lo_exact = -log(Real::of(cfg.tail_point, wb) - 1ul);
    double a = u_lo;
    bool first = true;
    while (a < u_cut) {
      double b = std::min(a + cfg.panel_width_u, u_cut);
      process_panel(w, pp, first ? u_lo_exact : Real::of(a, wb), Real::of(b, wb), alloc_per_unit,
                    0, acc);
      a = b;
      first = false;
    }
  }

  // s-side panels cover [S, max_k S_k]; components drop out beyond their own
  // cut, and panel widths track the steepest active decay scale.
  {
    double pos = cfg.tail_point;
    for (;;) {
      unsigned k_act = 0;
      double next_cut = 0;
      for (std::size_t i = 0; i < nc; ++i)
        if (s_cut[i] > pos + 1e-9) {
          k_act = std::max(k_act, spec.k_of[i]);
          next_cut = std::max(next_cut, s_cut[i]);
        }
      if (k_act == 0) break;
      double cut_here = next_cut;
      for (std::size_t i = 0; i < nc; ++i)
        if (s_cut[i] > pos + 1e-9) cut_here = std::min(cut_here, s_cut[i]);
      const double width = std::min(std::max(4.6 / (M_LN2 * k_act), 0.4), 4.0);
      double b = std::min(pos + width, cut_here);
      PanelParams pp{false, k_act, cfg.base_order, cfg.max_bisect};
      process_panel(w, pp, Real::of(pos, wb), Real::of(b, wb), alloc_per_unit, 0, acc);
      pos = b;
    }
  }

  // Assemble certified results.
  std::vector<IntegralResult> out(nc);
  const Real target_width = pow(Real::of(10ul, wb), -static_cast<long>(target));
  for (std::size_t i = 0; i < nc; ++i) {
    IntegralResult r;
    r.main_value = acc.main[i];
    r.main_error = acc.err[i] + Real::pow2(-static_cast<long>(wb) + 8) * Real::of(s_cut[i], wb);
    r.singularity_bound = b_sing[i];
    r.tail_bound = b_tail[i];
    r.value = r.main_value + (r.singularity_bound + r.tail_bound) / 2ul;
    r.bracket_low = r.main_value - r.main_error;
    r.bracket_high = r.main_value + r.main_error + r.singularity_bound + r.tail_bound;
    r.nodes_used = acc.nodes;
    if (r.width() > target_width)
      throw PrecisionError("quadrature: bracket does not certify the requested digits for k=" +
                           std::to_string(spec.k_of[i]));
    out[i] = r;
  }
  return out;
}

BatchSpec pk_spec(unsigned k_max) {
  BatchSpec s;
  s.kind = FamilyKind::pk;
  s.k_max = k_max;
  for (unsigned k = 1; k <= k_max; ++k) {
    s.k_of.push_back(k);
    s.star_of.push_back(0);
    s.k_of.push_back(k);
    s.star_of.push_back(1);
  }
  return s;
}

}  // namespace

Quadrature::Quadrature(PrecisionContext ctx, QuadratureConfig cfg)
    : ctx_(ctx), cfg_(cfg) {}

IntegralResult Quadrature::f_nk(unsigned k) const { return f_nk_pair(k).first; }

IntegralResult Quadrature::f_nk_star(unsigned k) const { return f_nk_pair(k).second; }

std::pair<IntegralResult, IntegralResult> Quadrature::f_nk_pair(unsigned k) const {
  BatchSpec s;
  s.kind = FamilyKind::pk;
  s.k_max = k;
  s.k_of = {k, k};
  s.star_of = {0, 1};
  auto r = run_batch(ctx_, cfg_, s);
  return {r[0], r[1]};
}

std::vector<std::pair<IntegralResult, IntegralResult>> Quadrature::f_nk_table(
    unsigned k_max) const {
  auto r = run_batch(ctx_, cfg_, pk_spec(k_max));
  std::vector<std::pair<IntegralResult, IntegralResult>> out;
  out.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k) out.emplace_back(r[2 * (k - 1)], r[2 * (k - 1) + 1]);
  return out;
}

IntegralResult Quadrature::int_log_zeta_pow(unsigned k) const {
  return int_log_zeta_pow_batch({k})[0];
}

IntegralResult Quadrature::int_prime_zeta_pow(unsigned k) const {
  return int_prime_zeta_pow_batch({k})[0];
}

std::vector<IntegralResult> Quadrature::int_log_zeta_pow_batch(
    const std::vector<unsigned>& ks) const {
  BatchSpec s;
  s.kind = FamilyKind::log_pow;
  s.k_of = ks;
  s.star_of.assign(ks.size(), 0);
  for (unsigned k : ks) s.k_max = std::max(s.k_max, k);
  return run_batch(ctx_, cfg_, s);
}

std::vector<IntegralResult> Quadrature::int_prime_zeta_pow_batch(
    const std::vector<unsigned>& ks) const {
  BatchSpec s;
  s.kind = FamilyKind::p_pow;
  s.k_of = ks;
  s.star_of.assign(ks.size(), 0);
  for (unsigned k : ks) s.k_max = std::max(s.k_max, k);
  return run_batch(ctx_, cfg_, s);
}

IntegralResult Quadrature::power_tail_from(double s0, unsigned k, bool prime_variant) const {
  if (s0 <= 1.0) throw std::domain_error("power_tail_from: s0 must be > 1");
  QuadratureConfig cfg = cfg_;
  cfg.tail_point = s0;
  BatchSpec spec;
  spec.kind = prime_variant ? FamilyKind::p_pow : FamilyKind::log_pow;
  spec.k_of = {k};
  spec.star_of = {0};
  spec.k_max = k;
  // Reuse the batch machinery but drop the u-side by bracketing nothing below
  // s0: integrate only the s-panels. Implemented as a dedicated pass here.
  const int target = ctx_.target_digits();
  const PrecisionContext ictx(target + 10, 15);
  const ZetaEngine engine(ictx, cfg.prime_cutoff);
  const mpfr_prec_t wb = ictx.bits();
  if (!(engine.prime_zeta_int(2) < 0.4523))
    throw ConsistencyError("power_tail_from: P(2) < 0.4523 certification failed");

  const Real eps4 =
      pow(Real::of(10ul, wb), Real::of(-(target + 1) - 0.602, wb));
  const Real ln2 = Real::ln2(wb);
  Workspace w{engine, spec, wb, {}};
  w.inv_fact.reserve(k + 1);
  for (unsigned j = 0; j <= k; ++j) w.inv_fact.push_back(1ul / Real::factorial(j, wb));

  auto tail_bound = [&](const Real& s) {
    Real two_pow = pow(Real::of(2ul, wb), -(Real::of(static_cast<double>(k), wb) * s));
    return pow(Real::of(2ul, wb), static_cast<unsigned long>(k)) / Real::factorial(k, wb) *
           two_pow / (static_cast<unsigned long>(k) * ln2);
  };
  double s_end = std::max(s0, 3.0);
  while (tail_bound(Real::of(s_end, wb)) > eps4) s_end += std::max(0.5, 2.0 / k);

  std::vector<Real> alloc(1, eps4 / Real::of(s_end - s0 + 1.0, wb));
  PanelAccum acc;
  acc.main.assign(1, Real(wb));
  acc.err.assign(1, Real(wb));
  PanelParams pp{false, k, cfg.base_order, cfg.max_bisect};
  double pos = s0;
  const double width = std::min(std::max(4.6 / (M_LN2 * k), 0.4), 4.0);
  while (pos < s_end) {
    double b = std::min(pos + width, s_end);
    process_panel(w, pp, Real::of(pos, wb), Real::of(b, wb), alloc, 0, acc);
    pos = b;
  }

  IntegralResult r;
  r.main_value = acc.main[0];
  r.main_error = acc.err[0];
  r.singularity_bound = Real(wb);
  r.tail_bound = tail_bound(Real::of(s_end, wb));
  r.value = r.main_value + r.tail_bound / 2ul;
  r.bracket_low = r.main_value - r.main_error;
  r.bracket_high = r.main_value + r.main_error + r.tail_bound;
  r.nodes_used = acc.nodes;
  return r;
}

}  // namespace erdosum
