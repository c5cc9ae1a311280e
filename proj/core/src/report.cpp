#include "erdosum/report.hpp"

#include <sstream>

namespace erdosum {

namespace {

std::string fixed_digits(const Real& x, int places) {
  if (places < 1) places = 1;
  if (places > 4000) places = 4000;
  return x.to_string_fixed(places);
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

ReportRow make_report_row(unsigned k, const IntegralResult& r) {
  ReportRow row;
  row.k = k;
  row.digits_certified = r.digits_certified();
  const int places = row.digits_certified + 2;
  row.value = fixed_digits(r.value, places);
  row.bracket_width = r.width().to_string_sci(3);
  row.singularity = (r.singularity_bound / 2ul).to_string_sci(3);
  row.main = fixed_digits(r.main_value, places);
  row.tail = (r.tail_bound / 2ul).to_string_sci(3);
  return row;
}

ReportRow make_report_row(unsigned k, const IntegralResult& r, const Real& delta_ref, int sign) {
  ReportRow row = make_report_row(k, r);
  Real d = sign > 0 ? delta_ref - r.value : r.value - delta_ref;
  row.delta = d.to_string_sci(3);
  return row;
}

std::string render_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  bool with_delta = false;
  for (const auto& r : rows) with_delta = with_delta || r.delta.has_value();
  out << "k,value,bracket_width,digits";
  if (with_delta) out << ",delta";
  out << '\n';
  for (const auto& r : rows) {
    out << r.k << ',' << r.value << ',' << r.bracket_width << ',' << r.digits_certified;
    if (with_delta) out << ',' << (r.delta ? *r.delta : "");
    out << '\n';
  }
  return out.str();
}

std::string render_json(const std::vector<ReportRow>& rows, const Provenance& prov) {
  std::ostringstream out;
  out << "{\n  \"provenance\": {\"tool\": \"" << json_escape(prov.tool) << "\", \"version\": \""
      << json_escape(prov.version) << "\", \"precision_digits\": " << prov.precision_digits
      << ", \"prime_cutoff\": " << prov.prime_cutoff << ", \"tail_point\": " << prov.tail_point
      << ", \"threads\": " << prov.threads << "},\n  \"rows\": [\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << "    {\"k\": " << r.k << ", \"value\": \"" << r.value << "\", \"bracket_width\": \""
        << r.bracket_width << "\", \"digits\": " << r.digits_certified
        << ", \"components\": {\"singularity\": \"" << r.singularity << "\", \"main\": \""
        << r.main << "\", \"tail\": \"" << r.tail << "\"}";
    if (r.delta) out << ", \"delta\": \"" << *r.delta << "\"";
    out << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string render_plain(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << r.k << "  " << r.value << "  (width " << r.bracket_width << ", " << r.digits_certified
        << " digits certified)";
    if (r.delta) out << "  delta " << *r.delta;
    out << '\n';
  }
  return out.str();
}

}  // namespace erdosum
