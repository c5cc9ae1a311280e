#include "erdosum/zeta.hpp"

#include <gmpxx.h>

#include <cmath>

#include <map>
#include <stdexcept>
#include <utility>

#include "erdosum/errors.hpp"

namespace erdosum {

namespace {

// Exact Bernoulli numbers B_0, B_1, B_2, ... via the defining recurrence
// sum_{j<=m} C(m+1,j) B_j = 0, kept as rationals.
class BernoulliTable {
 public:
  mpq_class even(unsigned j) {  // B_{2j}
    std::lock_guard<std::mutex> lock(mu_);
    while (all_.size() <= 2 * j) grow();
    return all_[2 * j];
  }

 private:
  void grow() {
    const unsigned m = static_cast<unsigned>(all_.size());
    if (m == 0) {
      all_.emplace_back(1);
      return;
    }
    mpq_class acc(0);
    mpz_class binom;
    for (unsigned j = 0; j < m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      acc += mpq_class(binom) * all_[j];
    }
    acc /= mpq_class(static_cast<unsigned long>(m) + 1);
    acc.canonicalize();
    all_.push_back(-acc);
  }

  std::mutex mu_;
  std::vector<mpq_class> all_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable t;
  return t;
}

struct B2jCache {
  std::mutex mu;
  std::map<std::pair<mpfr_prec_t, unsigned>, Real> vals;
};

B2jCache& b2j_cache() {
  static B2jCache c;
  return c;
}

}  // namespace

Real bernoulli_over_factorial(unsigned j, mpfr_prec_t bits) {
  auto& c = b2j_cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.vals.find({bits, j});
    if (it != c.vals.end()) return it->second;
  }
  mpq_class b = bernoulli_table().even(j);
  Real r(bits);
  mpfr_set_q(r.raw(), b.get_mpq_t(), MPFR_RNDN);
  r /= Real::factorial(2ul * j, bits);
  std::lock_guard<std::mutex> lock(c.mu);
  c.vals.emplace(std::make_pair(bits, j), r);
  return r;
}

ZetaEngine::ZetaEngine(PrecisionContext ctx, std::uint64_t prime_cutoff)
    : ctx_(ctx),
      table_(PrimeTable::build(prime_cutoff, ctx)),
      wb_(ctx.bits() + 24),
      eps_(ctx.series_cutoff_epsilon()),
      n_direct_(std::max(12, ctx.working_digits() / 2 + 8)) {
  if (prime_cutoff < 2) throw std::domain_error("ZetaEngine: prime cutoff must be >= 2");
}

void ZetaEngine::check_domain(const Real& s) const {
  if (!(s > 1.0)) throw SingularityError("zeta: s must be > 1");
  Real sm1 = s - 1ul;
  if (sm1 < ctx_.singularity_floor())
    throw SingularityError("zeta: s is below the singularity floor 1 + 10^-target");
}

// Euler-Maclaurin for f(x) = x^-s (derivative=false) or f(x) = log(x) x^-s
// (derivative=true; the latter accumulates -zeta'). Corrections follow
//   sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - sum_j B_2j/(2j)! f^(2j-1)(N) + R_J
// with |R_J| <= |B_2J|/(2J)! int_N^inf |f^(2J)|, closed-form for these f.
// Terms are added until the remainder bound drops below the cutoff; if the
// asymptotic series bottoms out first, N is doubled.
//
// s may carry extended precision (nodes of the form 1 + e^-u); s-1 is then
// exact and the result is correct to working precision in the relative sense.
Real ZetaEngine::zeta_em(const Real& s, bool derivative) const {
  check_domain(s);
  const mpfr_prec_t sb = std::max(wb_, s.prec());
  const Real minus_s = -(s.rounded_to(sb));
  const Real sm1 = s.rounded_to(sb) - 1ul;

  long n_len = n_direct_;
  for (int attempt = 0; attempt < 8; ++attempt, n_len *= 2) {
    const Real nn = Real::of(static_cast<unsigned long>(n_len), wb_);
    const Real ln_n = log(nn);
    const Real npow = Real::pow_at(wb_, nn, minus_s);  // N^-s

    Real val(wb_);
    if (!derivative) {
      Real direct = Real::of(1ul, wb_);
      for (long n = 2; n < n_len; ++n)
        direct += Real::pow_at(wb_, Real::of(static_cast<unsigned long>(n), wb_), minus_s);
      val = direct + (npow * nn / sm1).rounded_to(wb_) + npow / 2ul;
    } else {
      Real direct(wb_);
      for (long n = 2; n < n_len; ++n) {
        Real t = Real::pow_at(wb_, Real::of(static_cast<unsigned long>(n), wb_), minus_s);
        direct += t * log(Real::of(static_cast<unsigned long>(n), wb_));
      }
      val = direct + (npow * nn * (ln_n / sm1 + 1ul / (sm1 * sm1))).rounded_to(wb_) +
            ln_n * npow / 2ul;
    }

    const Real goal = eps_ * max(Real::of(1ul, wb_), abs(val)) / 16ul;
    const Real inv_n2 = 1ul / (nn * nn);

    // rising[t] = (s)_t, grown on demand (derivative path only).
    std::vector<Real> rising;
    rising.push_back(Real::of(1ul, wb_));
    auto rise_to = [&](unsigned t) {
      while (rising.size() <= t) {
        unsigned long i = rising.size() - 1;
        rising.push_back(rising.back() * (s + i).rounded_to(wb_));
      }
    };
    auto e_coeff = [&](unsigned m) {  // E_m = sum_i m!/(i (m-i)!) (s)_{m-i}
      rise_to(m);
      Real e(wb_);
      Real c = Real::of(static_cast<unsigned long>(m), wb_);  // c_1 = m
      for (unsigned i = 1; i <= m; ++i) {
        e += c * rising[m - i];
        if (i < m)
          c = c * static_cast<unsigned long>(i) * static_cast<unsigned long>(m - i) /
              static_cast<unsigned long>(i + 1);
      }
      return e;
    };

    Real rise_odd = s.rounded_to(wb_);  // (s)_{2j-1}, starts at (s)_1
    Real power = npow / nn;             // N^{-s-2j+1}, starts at j=1
    Real prev_bound(wb_);
    bool have_prev = false;
    bool diverged = false;
    for (unsigned j = 1; j <= static_cast<unsigned>(4 * n_len); ++j) {
      const Real b2jf = bernoulli_over_factorial(j, wb_);
      Real term(wb_), bound(wb_);
      if (!derivative) {
        term = b2jf * rise_odd * power;
        bound = abs(term);
      } else {
        term = b2jf * power * (rise_odd * ln_n - e_coeff(2 * j - 1));
        rise_to(2 * j);
        const Real denom = (s + static_cast<unsigned long>(2 * j - 1)).rounded_to(wb_);
        bound = abs(b2jf) * power *
                (rising[2 * j] * (ln_n / denom + 1ul / (denom * denom)) + e_coeff(2 * j) / denom);
      }
      val += term;
      if (bound <= goal) return derivative ? -val : val;
      if (have_prev && bound >= prev_bound) {
        diverged = true;
        break;
      }
      prev_bound = bound;
      have_prev = true;
      rise_odd *= (s + static_cast<unsigned long>(2 * j - 1)).rounded_to(wb_) *
                  (s + static_cast<unsigned long>(2 * j)).rounded_to(wb_);
      power *= inv_n2;
    }
    if (!diverged) break;
  }
  throw PrecisionError("zeta: Euler-Maclaurin did not certify the requested accuracy");
}

Real ZetaEngine::zeta(const Real& s) const { return zeta_em(s, false); }

Real ZetaEngine::zeta_deriv(const Real& s) const { return zeta_em(s, true); }

Real ZetaEngine::zeta_truncated(const Real& s) const {
  const Real minus_s = -s;
  Real z = zeta(s);
  for (std::uint64_t p : table_.primes)
    z *= (1ul - Real::pow_at(wb_, Real::of(p, wb_), minus_s));
  return z;
}

namespace {

// Upper bound for sum_{p > A} p^-y, valid for y > 1: one term at A' plus the
// integral tail from A'.
Real prime_tail_sum(const Real& ap, const Real& y) {
  Real t = pow(ap, -y);
  return t * (1ul + ap / (y - 1ul));
}

}  // namespace

// Cheap (double-space) underestimate of the Moebius-series stop index; the
// rigorous Real-space tail check still gates termination.
unsigned ZetaEngine::tail_start_estimate(const Real& s) const {
  const double sd = std::min(std::max(s.to_double(), 1.0), 1e6);
  const double ln_eps = static_cast<double>(eps_.exponent2()) * M_LN2;
  const double ln_ap = std::log(static_cast<double>(table_.next_prime));
  const double y = (-ln_eps + std::log(8.0 * (static_cast<double>(table_.next_prime) + 2.0))) / ln_ap;
  const double m = y / sd;
  if (m < 1) return 1;
  if (m > 90000) return 90000;
  return static_cast<unsigned>(m) + 1;
}

Real ZetaEngine::prime_zeta(const Real& s) const {
  check_domain(s);
  const mpfr_prec_t sb = std::max(wb_, s.prec());
  const Real s_full = s.rounded_to(sb);
  const Real minus_s = -s_full;

  Real sum(wb_);
  for (std::uint64_t p : table_.primes) sum += Real::pow_at(wb_, Real::of(p, wb_), minus_s);

  const Real ap = Real::of(table_.next_prime, wb_);
  const Real stop = eps_ / 8ul;
  const Real geom = 1ul / (1ul - Real::pow_at(wb_, ap, minus_s));
  const unsigned m_min = tail_start_estimate(s_full);
  for (unsigned m = 1;; ++m) {
    if (m > 100000) throw CapacityError("prime_zeta: Moebius series did not terminate");
    const int mu = mobius(m);
    if (mu != 0) {
      const Real x = s_full * static_cast<unsigned long>(m);
      Real lz = log(zeta_truncated(x));
      if (mu > 0)
        sum += lz / static_cast<unsigned long>(m);
      else
        sum -= lz / static_cast<unsigned long>(m);
    }
    if (m + 1 < m_min) continue;
    // log zeta_A(y) <= S(y) + S(2y), S = prime tail sum; the m-tail is
    // geometric with ratio A'^-s.
    const Real y = (s_full * static_cast<unsigned long>(m + 1)).rounded_to(wb_);
    Real tail = (prime_tail_sum(ap, y) + prime_tail_sum(ap, y * 2ul)) * geom /
                static_cast<unsigned long>(m + 1);
    if (tail <= stop) break;
  }
  return sum;
}

Real ZetaEngine::prime_zeta_deriv(const Real& s) const {
  check_domain(s);
  const mpfr_prec_t sb = std::max(wb_, s.prec());
  const Real s_full = s.rounded_to(sb);
  const Real minus_s = -s_full;

  Real sum(wb_);
  for (std::size_t i = 0; i < table_.primes.size(); ++i)
    sum -= table_.log_primes[i] * Real::pow_at(wb_, Real::of(table_.primes[i], wb_), minus_s);

  const Real ap = Real::of(table_.next_prime, wb_);
  const Real ln_ap = log(ap);
  const Real stop = eps_ / 8ul;
  const Real geom = 1ul / (1ul - Real::pow_at(wb_, ap, minus_s));
  const unsigned m_min = tail_start_estimate(s_full);
  for (unsigned m = 1;; ++m) {
    if (m > 100000) throw CapacityError("prime_zeta_deriv: Moebius series did not terminate");
    const int mu = mobius(m);
    if (mu != 0) {
      const Real x = s_full * static_cast<unsigned long>(m);
      // (zeta_A'/zeta_A)(x) = zeta'(x)/zeta(x) + sum_{p<=A} log p / (p^x - 1)
      Real ratio = zeta_deriv(x) / zeta(x);
      for (std::size_t i = 0; i < table_.primes.size(); ++i) {
        Real px = Real::pow_at(wb_, Real::of(table_.primes[i], wb_), x);
        ratio += table_.log_primes[i] / (px - 1ul);
      }
      if (mu > 0)
        sum += ratio;
      else
        sum -= ratio;
    }
    if (m + 1 < m_min) continue;
    // |zeta_A'/zeta_A(y)| <= 2 (log A' A'^-y + int_A'^inf log t t^-y dt)
    const Real y = (s_full * static_cast<unsigned long>(m + 1)).rounded_to(wb_);
    const Real ym1 = y - 1ul;
    Real ld = (ln_ap * pow(ap, -y) + ap * pow(ap, -y) * (ln_ap / ym1 + 1ul / (ym1 * ym1))) * 2ul;
    if (ld * geom <= stop) break;
  }
  return sum;
}

Real ZetaEngine::prime_zeta_int(unsigned m) const {
  if (m < 2) throw std::domain_error("prime_zeta_int: m must be >= 2");
  std::lock_guard<std::mutex> lock(mu_);
  while (p_int_.size() <= m) p_int_.emplace_back(MPFR_PREC_MIN);
  if (p_int_[m].is_zero()) p_int_[m] = prime_zeta(ctx_.make(static_cast<unsigned long>(m)));
  return p_int_[m];
}

Real ZetaEngine::prime_zeta_deriv_int(unsigned m) const {
  if (m < 2) throw std::domain_error("prime_zeta_deriv_int: m must be >= 2");
  std::lock_guard<std::mutex> lock(mu_);
  while (pd_int_.size() <= m) pd_int_.emplace_back(MPFR_PREC_MIN);
  if (pd_int_[m].is_zero()) pd_int_[m] = prime_zeta_deriv(ctx_.make(static_cast<unsigned long>(m)));
  return pd_int_[m];
}

}  // namespace erdosum
