#pragma once

#include <optional>
#include <string>
#include <vector>

#include "erdosum/quadrature.hpp"

namespace erdosum {

// One rendered table row. Decimal strings carry digits_certified + 2 digits
// after the point, the final two being uncertain; a certified digit count
// travels alongside so consumers never trust more than the bracket supports.
struct ReportRow {
  unsigned k = 0;
  std::string value;
  std::string bracket_width;
  int digits_certified = 0;
  std::string singularity;  // component midpoints: value = sing + main + tail
  std::string main;
  std::string tail;
  std::optional<std::string> delta;  // 1 - f or f* - 6/pi^2, when requested
};

ReportRow make_report_row(unsigned k, const IntegralResult& r);
// delta_ref: the constant the value is differenced against (1 or 6/pi^2);
// sign: +1 renders ref - value, -1 renders value - ref.
ReportRow make_report_row(unsigned k, const IntegralResult& r, const Real& delta_ref, int sign);

struct Provenance {
  std::string tool;
  std::string version;
  int precision_digits = 0;
  std::uint64_t prime_cutoff = 0;
  double tail_point = 0;
  unsigned threads = 1;
};

std::string render_csv(const std::vector<ReportRow>& rows);
std::string render_json(const std::vector<ReportRow>& rows, const Provenance& prov);
std::string render_plain(const std::vector<ReportRow>& rows);

}  // namespace erdosum
