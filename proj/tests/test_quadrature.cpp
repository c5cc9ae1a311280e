#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "erdosum/bounds.hpp"
#include "erdosum/errors.hpp"
#include "erdosum/primes.hpp"
#include "erdosum/quadrature.hpp"

using namespace erdosum;

namespace {

void check_result_shape(const IntegralResult& r) {
  CHECK(r.bracket_low <= r.value);
  CHECK(r.value <= r.bracket_high);
  CHECK(r.singularity_bound >= 0.0);
  CHECK(r.tail_bound >= 0.0);
  CHECK(r.width() <= r.singularity_bound + r.tail_bound + r.main_error * 2ul + Real::pow2(-60));
  CHECK(r.nodes_used > 0);
}

}  // namespace

TEST_CASE("upper incomplete gamma closed forms") {
  const mpfr_prec_t bits = 160;
  const Real zero = Real::of(0ul, bits);
  const Real one = Real::of(1ul, bits);
  CHECK(abs(upper_incomplete_gamma_int(5, zero) - Real::factorial(5, bits)) < Real::pow2(-140));
  CHECK(abs(upper_incomplete_gamma_int(0, one) - exp(-one)) < Real::pow2(-140));
  // Gamma(3,1) = 2 e^-1 (1 + 1 + 1/2) = 5/e
  CHECK(abs(upper_incomplete_gamma_int(2, one) - 5ul / exp(one)) < Real::pow2(-140));
  CHECK_THROWS_AS(upper_incomplete_gamma_int(2, -one), std::domain_error);
}

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  std::vector<Real> xs, ws;
  gauss_legendre_rule(16, 160, xs, ws);
  REQUIRE(xs.size() == 16);
  // degree 31 is integrated exactly: int_-1^1 x^30 dx = 2/31
  Real acc(160), acc0(160);
  for (unsigned i = 0; i < 16; ++i) {
    acc += ws[i] * pow(xs[i], 30ul);
    acc0 += ws[i] * pow(xs[i], 17ul);
  }
  CHECK(abs(acc - Real::of(2ul, 160) / 31ul) < Real::pow2(-140));
  CHECK(abs(acc0) < Real::pow2(-140));
}

TEST_CASE("f(N_1) reproduces the 50-digit reference prefix") {
  Quadrature quad(PrecisionContext(25));
  auto r = quad.f_nk(1);
  check_result_shape(r);
  const Real ref = Real::parse("1.63661632335126086856965800392186367118159707613129", 256);
  CHECK(abs(r.value - ref) < Real::parse("1e-25", 64));
  CHECK(r.digits_certified() >= 24);
  CHECK(abs(r.value - ref) <= r.width());
}

TEST_CASE("figure values at reduced precision") {
  Quadrature quad(PrecisionContext(15));
  auto t = quad.f_nk_table(6);
  // Pinned 20-digit reference values, compared at the 1e-14 level here; the
  // acceptance suite re-checks all digits.
  CHECK(abs(t[1].first.value - Real::parse("1.1448165734059179915", 128)) < Real::parse("1e-14", 64));
  CHECK(abs(t[5].first.value - Real::parse("0.9887534530145096063", 128)) < Real::parse("1e-14", 64));
  CHECK(abs(t[1].second.value - Real::parse("0.8909254794763183321", 128)) < Real::parse("1e-14", 64));
  for (auto& pr : t) {
    check_result_shape(pr.first);
    check_result_shape(pr.second);
    CHECK(pr.second.value < pr.first.value);  // squarefree below full
  }
  // BKK interval for k = 2.
  CHECK(t[1].first.value > 1.1416);
  CHECK(t[1].first.value < 1.1484);
  CHECK(t[1].second.value > 0.8877);
  CHECK(t[1].second.value < 0.8945);
}

TEST_CASE("pair and single paths agree") {
  Quadrature quad(PrecisionContext(12));
  auto pair = quad.f_nk_pair(3);
  auto single = quad.f_nk(3);
  CHECK(pair.first.value == single.value);
  CHECK(abs(pair.second.value - quad.f_nk_star(3).value) == Real::of(0ul, 32));
}

TEST_CASE("node-count robustness: doubling the order stays within main_error") {
  QuadratureConfig lo, hi;
  hi.base_order = 32;
  Quadrature qlo(PrecisionContext(14), lo), qhi(PrecisionContext(14), hi);
  auto a = qlo.f_nk(4);
  auto b = qhi.f_nk(4);
  CHECK(abs(a.value - b.value) <= a.main_error + a.singularity_bound + a.tail_bound +
                                      b.main_error + b.singularity_bound + b.tail_bound);
  CHECK(abs(a.value - b.value) <= a.width());
}

TEST_CASE("split-point robustness: S and eps_k shifts stay within brackets") {
  QuadratureConfig base;
  base.singularity_exponent = 4.0;
  QuadratureConfig moved;
  moved.tail_point = 12.0;
  moved.singularity_exponent = 5.0;
  Quadrature qa(PrecisionContext(13), base), qb(PrecisionContext(13), moved);
  for (unsigned k : {2u, 6u}) {
    auto a = qa.f_nk(k);
    auto b = qb.f_nk(k);
    CHECK(abs(a.value - b.value) <= a.width() + b.width());
  }
}

TEST_CASE("power integrals: k=1 identities and oracles") {
  Quadrature quad(PrecisionContext(20));
  // (1/1!) int P ds = f(N_1).
  auto p1 = quad.int_prime_zeta_pow(1);
  const Real ref = Real::parse("1.63661632335126086856965800392186367118", 192);
  CHECK(abs(p1.value - ref) < Real::parse("1e-20", 64));

  // int log zeta ds = sum Lambda(n)/(n log^2 n): prime-power sum to 1e7 plus
  // the integral tail below 1/log(N) (Lambda(n) <= log n on prime powers,
  // and sum_{p>N} 1/(p log p) < int_N dt/(t log^2 t) = 1/log N).
  auto l1 = quad.int_log_zeta_pow(1);
  double sum = 0, comp = 0;
  for (std::uint64_t p : generate_primes(10000000)) {
    double lp = std::log(static_cast<double>(p));
    for (double q = static_cast<double>(p); q <= 1e7; q *= static_cast<double>(p)) {
      const double x = lp / (q * std::log(q) * std::log(q));
      const double y = x - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  const double got = l1.value.to_double();
  CHECK(got > sum);
  CHECK(got < sum + 1.0 / std::log(1e7) + 1e-9);
}

TEST_CASE("power integrals: decay toward 1 and alpha") {
  Quadrature quad(PrecisionContext(14));
  auto lz = quad.int_log_zeta_pow_batch({10, 16});
  auto pz = quad.int_prime_zeta_pow_batch({10, 16});
  const PrecisionContext ctx(20);
  const ZetaEngine engine(ctx);
  const Real alpha = constants(engine).alpha;
  for (std::size_t i = 0; i < 2; ++i) {
    const double k = i == 0 ? 10 : 16;
    CHECK(abs(lz[i].value - 1ul).to_double() * std::ldexp(1.0, static_cast<int>(k)) < 10.0);
    CHECK(abs(pz[i].value - alpha).to_double() * std::ldexp(1.0, static_cast<int>(k)) < 10.0);
    CHECK(pz[i].bracket_low > alpha);  // strict lower bound alpha k! <= int P^k
    check_result_shape(lz[i]);
    check_result_shape(pz[i]);
  }
}

TEST_CASE("upper tail of the log zeta power integral") {
  Quadrature quad(PrecisionContext(14));
  for (unsigned k : {3u, 8u}) {
    auto tail = quad.power_tail_from(2.0, k, false);
    // int_2^inf (log zeta)^k ds < 2^-k, normalized here by 1/k!.
    const Real bound = Real::pow2(-static_cast<long>(k)) /
                       Real::factorial(k, 96);
    CHECK(tail.bracket_high < bound);
    CHECK(tail.bracket_low > 0.0);
  }
}

TEST_CASE("monotone pattern around the k=6 minimum at modest precision") {
  Quadrature quad(PrecisionContext(12));
  auto t = quad.f_nk_table(8);
  for (unsigned k = 1; k <= 5; ++k)
    CHECK(t[k - 1].first.bracket_low > t[k].first.bracket_high);  // decreasing to k=6
  CHECK(t[6].first.bracket_low > t[5].first.bracket_high);        // f(N_7) > f(N_6)
  CHECK(t[7].first.bracket_low > t[6].first.bracket_high);        // f(N_8) > f(N_7)
  for (unsigned k = 1; k <= 7; ++k)
    CHECK(t[k - 1].second.bracket_low > t[k].second.bracket_high);  // f* decreasing
}

TEST_CASE("domain and capacity errors") {
  Quadrature quad(PrecisionContext(12));
  CHECK_THROWS_AS(quad.f_nk(0), std::domain_error);
  CHECK_THROWS_AS(quad.f_nk(61), CapacityError);
  QuadratureConfig bad;
  bad.tail_point = 1.2;
  CHECK_THROWS_AS(Quadrature(PrecisionContext(12), bad).f_nk(2), std::domain_error);
}

TEST_CASE("precision failure surfaces as PrecisionError") {
  QuadratureConfig starved;
  starved.base_order = 4;
  starved.max_bisect = 0;
  Quadrature quad(PrecisionContext(20), starved);
  CHECK_THROWS_AS(quad.f_nk(2), PrecisionError);
}
