#pragma once

#include <stdexcept>
#include <string>

#include "erdosum/real.hpp"

namespace erdosum {

// Requested accuracy plus guard headroom, threaded through all numeric
// operations. Working precision is target_digits + guard_digits decimal
// digits; series are truncated at series_cutoff_epsilon().
class PrecisionContext {
 public:
  explicit PrecisionContext(int target_digits, int guard_digits = 15)
      : target_digits_(target_digits), guard_digits_(guard_digits) {
    if (target_digits < 1) throw std::domain_error("PrecisionContext: target_digits must be >= 1");
    if (guard_digits < 10) throw std::domain_error("PrecisionContext: guard_digits must be >= 10");
  }

  int target_digits() const { return target_digits_; }
  int guard_digits() const { return guard_digits_; }
  int working_digits() const { return target_digits_ + guard_digits_; }
  mpfr_prec_t bits() const { return bits_for_digits(working_digits()); }

  // 10^-(target + guard/2); absolute truncation threshold for series.
  Real series_cutoff_epsilon() const {
    Real e = Real::of(-(target_digits_ + 0.5 * guard_digits_), bits());
    return pow(Real::of(10ul, bits()), e);
  }
  // Evaluations must stay above 1 + this gap.
  Real singularity_floor() const {
    return pow(Real::of(10ul, bits()), -static_cast<long>(target_digits_));
  }

  PrecisionContext with_target(int target) const { return PrecisionContext(target, guard_digits_); }
  // Extra guard digits for k-fold products near the singularity (~0.302 decimal
  // digits, i.e. one bit, per factor).
  PrecisionContext widened_for_power(int k) const {
    return PrecisionContext(target_digits_, guard_digits_ + (302 * k + 999) / 1000);
  }

  Real make(double x) const { return Real::of(x, bits()); }
  Real make(unsigned long x) const { return Real::of(x, bits()); }
  Real make(long x) const { return Real::of(x, bits()); }
  Real parse(const std::string& s) const { return Real::parse(s, bits()); }

 private:
  int target_digits_;
  int guard_digits_;
};

}  // namespace erdosum
