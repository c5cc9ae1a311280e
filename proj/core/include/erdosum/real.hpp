#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace erdosum {

// Mantissa bits needed to carry `digits` decimal digits with headroom.
constexpr mpfr_prec_t bits_for_digits(long digits) {
  return static_cast<mpfr_prec_t>((digits * 3322 + 999) / 1000 + 8);
}

// Arbitrary-precision real backed by MPFR. Each value carries its own
// precision; binary operations round to nearest at the wider of the two
// operand precisions. All rounding is MPFR_RNDN.
class Real {
 public:
  explicit Real(mpfr_prec_t bits) {
    mpfr_init2(v_, bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(double x, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(unsigned long x, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(long x, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  // Parses a base-10 literal; throws on trailing garbage.
  static Real parse(const std::string& text, mpfr_prec_t bits) {
    Real r(bits);
    const char* s = text.c_str();
    char* end = nullptr;
    mpfr_strtofr(r.v_, s, &end, 10, MPFR_RNDN);
    if (end == s || *end != '\0')
      throw std::invalid_argument("Real::parse: bad numeric literal: " + text);
    return r;
  }

  // 2^e at minimal precision (exact).
  static Real pow2(long e, mpfr_prec_t bits = MPFR_PREC_MIN) {
    Real r(bits);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }
  static Real pi(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real euler_gamma(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
  }
  static Real ln2(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
  }
  static Real factorial(unsigned long n, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_fac_ui(r.v_, n, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  Real rounded_to(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.raw(), v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDZ); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent2() const { return mpfr_get_exp(v_); }  // value in [2^(e-1), 2^e)

  // Fixed-point decimal rendering with `places` digits after the point.
  std::string to_string_fixed(int places) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rf", places, v_) < 0)
      throw std::runtime_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }
  // Scientific rendering with `digits` significant digits.
  std::string to_string_sci(int digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Re", digits - 1, v_) < 0)
      throw std::runtime_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator+=(unsigned long u) {
    mpfr_add_ui(v_, v_, u, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(unsigned long u) {
    mpfr_sub_ui(v_, v_, u, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(unsigned long u) {
    mpfr_mul_ui(v_, v_, u, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(unsigned long u) {
    mpfr_div_ui(v_, v_, u, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, unsigned long u) {
    Real r(a.prec());
    mpfr_add_ui(r.v_, a.v_, u, MPFR_RNDN);
    return r;
  }
  friend Real operator+(unsigned long u, const Real& a) { return a + u; }
  friend Real operator-(const Real& a, unsigned long u) {
    Real r(a.prec());
    mpfr_sub_ui(r.v_, a.v_, u, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, unsigned long u) {
    Real r(a.prec());
    mpfr_mul_ui(r.v_, a.v_, u, MPFR_RNDN);
    return r;
  }
  friend Real operator*(unsigned long u, const Real& a) { return a * u; }
  friend Real operator/(const Real& a, unsigned long u) {
    Real r(a.prec());
    mpfr_div_ui(r.v_, a.v_, u, MPFR_RNDN);
    return r;
  }
  friend Real operator/(unsigned long u, const Real& a) {
    Real r(a.prec());
    mpfr_ui_div(r.v_, u, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(unsigned long u, const Real& a) {
    Real r(a.prec());
    mpfr_ui_sub(r.v_, u, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, double d) {
    Real r(a.prec());
    mpfr_add_d(r.v_, a.v_, d, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, double d) {
    Real r(a.prec());
    mpfr_sub_d(r.v_, a.v_, d, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, double d) {
    Real r(a.prec());
    mpfr_mul_d(r.v_, a.v_, d, MPFR_RNDN);
    return r;
  }
  friend Real operator*(double d, const Real& a) { return a * d; }
  friend Real operator/(const Real& a, double d) {
    Real r(a.prec());
    mpfr_div_d(r.v_, a.v_, d, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, double d) { return mpfr_cmp_d(a.v_, d) < 0; }
  friend bool operator<=(const Real& a, double d) { return mpfr_cmp_d(a.v_, d) <= 0; }
  friend bool operator>(const Real& a, double d) { return mpfr_cmp_d(a.v_, d) > 0; }
  friend bool operator>=(const Real& a, double d) { return mpfr_cmp_d(a.v_, d) >= 0; }

  friend Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real log10(const Real& a) {
    Real r(a.prec());
    mpfr_log10(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.v_, a.v_);
    return r;
  }
  friend Real pow(const Real& b, const Real& e) {
    Real r(wider(b, e));
    mpfr_pow(r.v_, b.v_, e.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& b, unsigned long e) {
    Real r(b.prec());
    mpfr_pow_ui(r.v_, b.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& b, long e) {
    Real r(b.prec());
    mpfr_pow_si(r.v_, b.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
  friend Real min(const Real& a, const Real& b) { return a < b ? a : b; }

  // pow at an explicit result precision (hot paths where operands carry
  // extended precision but the result only needs working precision).
  static Real pow_at(mpfr_prec_t bits, const Real& b, const Real& e) {
    Real r(bits);
    mpfr_pow(r.v_, b.v_, e.v_, MPFR_RNDN);
    return r;
  }

  // Gamma function (MPFR, correctly rounded).
  friend Real tgamma(const Real& a) {
    Real r(a.prec());
    mpfr_gamma(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

 private:
  static mpfr_prec_t wider(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }
  mpfr_t v_;
};

// One unit in the last place of x (0 -> smallest useful magnitude).
inline Real unit_roundoff(const Real& x) {
  if (x.is_zero()) return Real::pow2(-x.prec());
  return Real::pow2(x.exponent2() - static_cast<long>(x.prec()) + 1);
}

}  // namespace erdosum
