#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "erdosum/almost_prime.hpp"
#include "erdosum/errors.hpp"
#include "erdosum/sieve.hpp"

using namespace erdosum;

namespace {

std::uint64_t pentagonal_partition_count(unsigned n) {
  static std::map<unsigned, std::uint64_t> memo;
  if (n == 0) return 1;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (unsigned k = 1;; ++k) {
    const unsigned g1 = k * (3 * k - 1) / 2;
    const unsigned g2 = k * (3 * k + 1) / 2;
    if (g1 > n && g2 > n) break;
    std::uint64_t add = 0;
    if (g1 <= n) add += pentagonal_partition_count(n - g1);
    if (g2 <= n) add += pentagonal_partition_count(n - g2);
    total = (k % 2 == 1) ? total + add : total - add;
  }
  memo[n] = total;
  return total;
}

}  // namespace

TEST_CASE("partition stream: order and small counts") {
  PartitionStream ps(3);
  auto a = ps.next();
  auto b = ps.next();
  auto c = ps.next();
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(c);
  CHECK(a->multiplicities == std::vector<unsigned>{3, 0, 0});
  CHECK(b->multiplicities == std::vector<unsigned>{1, 1, 0});
  CHECK(c->multiplicities == std::vector<unsigned>{0, 0, 1});
  CHECK(!ps.next());

  unsigned n5 = 0;
  for_each_partition(5, [&](const PartitionVector&) { ++n5; });
  CHECK(n5 == 7);
}

TEST_CASE("partition stream: counts vs pentagonal recurrence") {
  for (unsigned k : {8u, 12u, 20u, 28u}) {
    std::uint64_t n = 0;
    std::uint64_t weight_check = 0;
    for_each_partition(k, [&](const PartitionVector& pv) {
      ++n;
      std::uint64_t w = 0;
      for (unsigned j = 1; j <= k; ++j) w += static_cast<std::uint64_t>(j) * pv.multiplicities[j - 1];
      weight_check += (w == k);
    });
    CHECK(n == pentagonal_partition_count(k));
    CHECK(weight_check == n);  // every vector satisfies sum j n_j = k
  }
  CHECK(pentagonal_partition_count(20) == 627);
  CHECK(pentagonal_partition_count(60) == 966467);
}

TEST_CASE("pk displayed expansions in terms of P(js)") {
  PrecisionContext ctx(30);
  ZetaEngine engine(ctx);
  const Real eps = engine.eval_epsilon() * 16ul;
  for (double sd : {1.1, 2.0}) {
    const Real s = ctx.make(sd);
    PkEvaluator ev(engine, 5, s);
    const Real p1 = ev.p(1), p2 = ev.p(2), p3 = ev.p(3), p4 = ev.p(4), p5 = ev.p(5);

    CHECK(ev.pk(0) == ctx.make(1.0));
    CHECK(abs(ev.pk(1) - p1) < eps);
    CHECK(abs(ev.pk(2) * 2ul - (p1 * p1 + p2)) < eps);
    CHECK(abs(ev.pk(3) * 6ul - (p1 * p1 * p1 + p1 * p2 * 3ul + p3 * 2ul)) < eps);
    CHECK(abs(ev.pk(4) * 24ul -
              (pow(p1, 4ul) + p2 * p1 * p1 * 6ul + p2 * p2 * 3ul + p3 * p1 * 8ul + p4 * 6ul)) <
          eps);
    CHECK(abs(ev.pk(5) * 120ul -
              (pow(p1, 5ul) + pow(p1, 3ul) * p2 * 10ul + p1 * p2 * p2 * 15ul +
               p1 * p1 * p3 * 20ul + p2 * p3 * 20ul + p1 * p4 * 30ul + p5 * 24ul)) < eps);

    // Squarefree: P*_1 = P, 2 P*_2 = P^2 - P(2s).
    CHECK(abs(ev.pk_star(1) - p1) < eps);
    CHECK(abs(ev.pk_star(2) * 2ul - (p1 * p1 - p2)) < eps);
  }
}

TEST_CASE("recursion matches the partition formula") {
  PrecisionContext ctx(25);
  ZetaEngine engine(ctx);
  const Real tol = engine.eval_epsilon() * 10ul;
  for (double sd : {1.1, 1.5, 2.0, 3.0}) {
    const Real s = ctx.make(sd);
    PkEvaluator ev(engine, 15, s);
    for (unsigned k = 1; k <= 15; ++k) {
      CHECK(abs(ev.pk(k) - pk_via_partitions(engine, k, s)) < tol);
      CHECK(abs(ev.pk_star(k) - pk_star_via_partitions(engine, k, s)) < tol);
    }
  }
  // k = 10 at s = 1.5: partition path equals the recursion path well below
  // 10^-(target-2).
  const Real s = ctx.make(1.5);
  PkEvaluator ev(engine, 10, s);
  CHECK(abs(ev.pk(10) - pk_via_partitions(engine, 10, s)) < ctx.make(1e-23));
}

TEST_CASE("zeta identities: sum of pk and pk_star") {
  PrecisionContext ctx(30);
  ZetaEngine engine(ctx);
  const Real two = ctx.make(2.0);
  PkEvaluator ev(engine, 60, two);
  Real sum = ctx.make(1.0), sum_star = ctx.make(1.0);
  for (unsigned k = 1; k <= 60; ++k) {
    sum += ev.pk(k);
    sum_star += ev.pk_star(k);
  }
  CHECK(abs(sum - engine.zeta(two)) < ctx.make(1e-15));
  CHECK(abs(sum_star - engine.zeta(two) / engine.zeta(ctx.make(4.0))) < ctx.make(1e-15));
}

TEST_CASE("pk against the sieve partial sums at s=2") {
  PrecisionContext ctx(25);
  ZetaEngine engine(ctx);
  const Real s = ctx.make(2.0);
  PkEvaluator ev(engine, 3, s);
  SieveConfig scfg;

  // Sieve sums are strict lower bounds; the missing tail at 1e7 is tiny.
  const double partial2 = partial_pk(2.0, 10000000, 2, scfg);
  const double pk2 = ev.pk(2).to_double();
  CHECK(partial2 < pk2);
  CHECK(pk2 - partial2 < 1e-4 * pk2);

  const double partial3 = partial_pk(2.0, 10000000, 3, scfg);
  const double pk3 = ev.pk(3).to_double();
  CHECK(partial3 < pk3);
  CHECK(pk3 - partial3 < 1e-4 * pk3);

  // Squarefree: filter in the sieve, compare against pk_star.
  struct StarAcc {
    unsigned k = 3;
    double sum = 0;
    void accumulate(std::uint64_t n, unsigned omega, bool squarefree) {
      if (omega == k && squarefree) sum += std::pow(static_cast<double>(n), -2.0);
    }
    void merge(const StarAcc& o) { sum += o.sum; }
  };
  const double star3 = scan_factored<StarAcc>(10000000, scfg, StarAcc{}).sum;
  const double pk3s = ev.pk_star(3).to_double();
  CHECK(star3 < pk3s);
  CHECK(pk3s - star3 < 1e-4 * pk3s);
}

TEST_CASE("pk domination and positivity near the singularity") {
  PrecisionContext ctx(25);
  ZetaEngine engine(ctx);
  for (unsigned k = 2; k <= 8; ++k) {
    for (double frac : {0.9, 0.5, 0.1, 1e-3}) {
      const Real delta = ctx.make(frac) * exp(ctx.make(-2.0 * k));
      const Real s = ctx.make(1.0) + delta;
      PkEvaluator ev(engine, k, s);
      const Real bound =
          pow(log(1ul / delta), static_cast<unsigned long>(k)) / Real::factorial(k, ctx.bits());
      CHECK(ev.pk(k) > 0.0);
      CHECK(ev.pk(k) <= bound);
      CHECK(ev.pk_star(k) <= ev.pk(k));
      CHECK(ev.pk_star(k) > 0.0);
    }
  }
}

TEST_CASE("capacity errors") {
  PrecisionContext ctx(20);
  ZetaEngine engine(ctx);
  PkEvaluator ev(engine, 4, ctx.make(2.0));
  CHECK_THROWS_AS(ev.pk(5), CapacityError);
  CHECK_THROWS_AS(ev.pk_star(9), CapacityError);
  CHECK_THROWS_AS(pk_via_partitions(engine, 41, ctx.make(2.0)), CapacityError);
  CHECK_THROWS_AS(PartitionStream(0), std::domain_error);
}
