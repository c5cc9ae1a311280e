#include "erdosum/sieve.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "erdosum/errors.hpp"
#include "erdosum/primes.hpp"

namespace erdosum {

namespace detail {

namespace {

std::uint64_t inverse_pow2_64(std::uint64_t p) {
  // Newton iteration; p odd.
  std::uint64_t x = p;
  for (int i = 0; i < 5; ++i) x *= 2 - p * x;
  return x;
}

}  // namespace

SievePrimes SievePrimes::up_to(std::uint64_t limit) {
  SievePrimes sp;
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while ((root + 1) * (root + 1) <= limit) ++root;
  while (root > 1 && root * root > limit) --root;
  if (root < 2) return sp;
  sp.p = generate_primes(root);
  sp.inv.resize(sp.p.size());
  for (std::size_t i = 0; i < sp.p.size(); ++i)
    sp.inv[i] = sp.p[i] == 2 ? 0 : inverse_pow2_64(sp.p[i]);
  return sp;
}

void factor_segment(std::uint64_t lo, std::uint64_t len, const SievePrimes& primes,
                    SegmentScratch& scratch) {
  scratch.rem.assign(len, 0);
  scratch.omega.assign(len, 0);
  scratch.squarefree.assign(len, 1);
  auto* rem = scratch.rem.data();
  auto* omega = scratch.omega.data();
  auto* sq = scratch.squarefree.data();
  const std::uint64_t hi = lo + len;  // exclusive

  for (std::uint64_t i = 0; i < len; ++i) rem[i] = lo + i;

  // p = 2 via trailing zeros.
  {
    std::uint64_t start = lo % 2 == 0 ? lo : lo + 1;
    for (std::uint64_t n = start; n < hi; n += 2) {
      const unsigned e = static_cast<unsigned>(std::countr_zero(n));
      const std::uint64_t i = n - lo;
      omega[i] = static_cast<std::uint8_t>(e);
      if (e >= 2) sq[i] = 0;
      rem[i] = n >> e;
    }
  }

  for (std::size_t pi = 1; pi < primes.p.size(); ++pi) {
    const std::uint64_t p = primes.p[pi];
    const std::uint64_t inv = primes.inv[pi];
    std::uint64_t q = p;
    // Pass e: multiples of p^e get one exact division by p; p | rem is
    // guaranteed because passes run in increasing e.
    for (unsigned e = 1;; ++e) {
      std::uint64_t start = (lo + q - 1) / q * q;
      if (start >= hi) break;
      for (std::uint64_t n = start; n < hi; n += q) {
        const std::uint64_t i = n - lo;
        rem[i] *= inv;
        ++omega[i];
        if (e == 2) sq[i] = 0;
      }
      if (q > (hi - 1) / p) break;
      q *= p;
    }
  }

  // Leftover cofactor > sqrt(limit) is a single prime.
  for (std::uint64_t i = 0; i < len; ++i)
    if (rem[i] > 1) ++omega[i];
}

}  // namespace detail

namespace {

constexpr unsigned kOmegaSlots = 64;

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  void merge(const KahanSum& o) {
    add(o.s);
    add(-o.c);
  }
};

struct SummaryAcc {
  std::array<KahanSum, kOmegaSlots> f{};
  std::array<KahanSum, kOmegaSlots> f_star{};
  std::array<std::uint64_t, kOmegaSlots> counts{};
  std::array<std::uint64_t, kOmegaSlots> counts_star{};

  void accumulate(std::uint64_t n, unsigned omega, bool squarefree) {
    const unsigned k = omega < kOmegaSlots ? omega : kOmegaSlots - 1;
    const double term = 1.0 / (static_cast<double>(n) * std::log(static_cast<double>(n)));
    counts[k]++;
    f[k].add(term);
    if (squarefree) {
      counts_star[k]++;
      f_star[k].add(term);
    }
  }
  void merge(const SummaryAcc& o) {
    for (unsigned k = 0; k < kOmegaSlots; ++k) {
      f[k].merge(o.f[k]);
      f_star[k].merge(o.f_star[k]);
      counts[k] += o.counts[k];
      counts_star[k] += o.counts_star[k];
    }
  }
};

}  // namespace

SieveSummary sieve_summary(std::uint64_t limit, unsigned k_max, const SieveConfig& cfg) {
  auto acc = scan_factored<SummaryAcc>(limit, cfg, SummaryAcc{});
  SieveSummary s;
  s.limit = limit;
  s.k_max = k_max;
  const unsigned slots = std::min(kOmegaSlots, std::max(k_max + 1, 34u));
  s.partial_f.resize(slots);
  s.partial_f_star.resize(slots);
  s.counts.resize(slots);
  s.counts_star.resize(slots);
  for (unsigned k = 0; k < slots; ++k) {
    s.partial_f[k] = acc.f[k].s;
    s.partial_f_star[k] = acc.f_star[k].s;
    s.counts[k] = acc.counts[k];
    s.counts_star[k] = acc.counts_star[k];
  }
  return s;
}

namespace {

struct ApAcc {
  std::uint64_t q = 1;
  unsigned k_max = 0;
  std::vector<std::vector<std::uint64_t>> table;  // [k][a]

  void accumulate(std::uint64_t n, unsigned omega, bool) {
    if (omega > k_max) return;
    table[omega][n % q]++;
  }
  void merge(const ApAcc& o) {
    for (unsigned k = 0; k <= k_max; ++k)
      for (std::uint64_t a = 0; a < q; ++a) table[k][a] += o.table[k][a];
  }
};

}  // namespace

std::vector<std::vector<std::uint64_t>> count_ap_all(std::uint64_t limit, unsigned k_max,
                                                     std::uint64_t q, const SieveConfig& cfg) {
  if (q < 1) throw std::domain_error("count_ap: q must be >= 1");
  ApAcc init;
  init.q = q;
  init.k_max = k_max;
  init.table.assign(k_max + 1, std::vector<std::uint64_t>(q, 0));
  auto acc = scan_factored<ApAcc>(limit, cfg, init);
  return acc.table;
}

std::uint64_t count_ap(std::uint64_t limit, unsigned k, std::uint64_t q, std::uint64_t a,
                       const SieveConfig& cfg) {
  if (q < 1) throw std::domain_error("count_ap: q must be >= 1");
  if (a >= q) throw std::out_of_range("count_ap: residue a must satisfy 0 <= a < q");
  return count_ap_all(limit, k, q, cfg)[k][a];
}

namespace {

struct PkAcc {
  double s_exp = 2.0;
  unsigned k = 0;
  KahanSum sum{};
  void accumulate(std::uint64_t n, unsigned omega, bool) {
    if (omega != k) return;
    sum.add(std::pow(static_cast<double>(n), -s_exp));
  }
  void merge(const PkAcc& o) { sum.merge(o.sum); }
};

struct RestrictedAcc {
  unsigned k = 0;
  std::vector<std::uint64_t> moduli;  // p^e values
  KahanSum sum{};
  void accumulate(std::uint64_t n, unsigned omega, bool) {
    if (omega != k) return;
    for (std::uint64_t m : moduli)
      if (n % m == 0) return;
    sum.add(1.0 / (static_cast<double>(n) * std::log(static_cast<double>(n))));
  }
  void merge(const RestrictedAcc& o) { sum.merge(o.sum); }
};

}  // namespace

double partial_pk(double s, std::uint64_t limit, unsigned k, const SieveConfig& cfg) {
  if (!(s > 1.0)) throw std::domain_error("partial_pk: s must be > 1");
  if (k == 0) return limit >= 1 ? 1.0 : 0.0;
  PkAcc init;
  init.s_exp = s;
  init.k = k;
  return scan_factored<PkAcc>(limit, cfg, init).sum.s;
}

double restricted_partial_f(std::uint64_t limit, unsigned k,
                            std::span<const PrimePowerFactor> forbidden,
                            const SieveConfig& cfg) {
  RestrictedAcc init;
  init.k = k;
  for (const auto& f : forbidden) {
    std::uint64_t m = 1;
    for (unsigned e = 0; e < f.e; ++e) m *= f.p;
    init.moduli.push_back(m);
  }
  return scan_factored<RestrictedAcc>(limit, cfg, init).sum.s;
}

void save_sieve_summary(const SieveSummary& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_sieve_summary: cannot open " + path);
  out << "erdosum-sieve v1\n";
  out << s.limit << ' ' << s.k_max << ' ' << 17 << '\n';
  char buf[64];
  for (std::size_t k = 0; k < s.partial_f.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", s.partial_f[k]);
    out << k << ' ' << s.counts[k] << ' ' << s.counts_star[k] << ' ' << buf;
    std::snprintf(buf, sizeof buf, "%.17g", s.partial_f_star[k]);
    out << ' ' << buf << '\n';
  }
  if (!out) throw Error("save_sieve_summary: write failed for " + path);
}

SieveSummary load_sieve_summary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_sieve_summary: cannot open " + path);
  std::string header;
  std::getline(in, header);
  if (header != "erdosum-sieve v1") throw Error("load_sieve_summary: unknown snapshot version");
  SieveSummary s;
  int precision = 0;
  in >> s.limit >> s.k_max >> precision;
  std::size_t k;
  while (in >> k) {
    s.counts.resize(k + 1);
    s.counts_star.resize(k + 1);
    s.partial_f.resize(k + 1);
    s.partial_f_star.resize(k + 1);
    in >> s.counts[k] >> s.counts_star[k] >> s.partial_f[k] >> s.partial_f_star[k];
  }
  return s;
}

}  // namespace erdosum
