// erdosum: tables, brackets, and verification suites for the Erdos sums
// f(N_k) = sum over Omega(n)=k of 1/(n log n), computed through prime zeta
// functions. Exit codes: 0 ok, 1 verification failure, 2 precision failure,
// 3 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "erdosum/asymptotics.hpp"
#include "erdosum/bounds.hpp"
#include "erdosum/errors.hpp"
#include "erdosum/quadrature.hpp"
#include "erdosum/report.hpp"
#include "erdosum/sieve.hpp"
#include "erdosum/verify.hpp"
#include "erdosum/version.hpp"
#include "erdosum/zeta.hpp"

namespace {

using namespace erdosum;

struct GlobalOpts {
  int digits = 20;
  std::string format = "plain";
  unsigned threads = 1;
  std::uint64_t prime_cutoff = 100;
  double tail_point = 10.0;
  std::string cache_dir;
};

Provenance provenance_of(const GlobalOpts& g) {
  return Provenance{"erdosum", version_string, g.digits, g.prime_cutoff, g.tail_point, g.threads};
}

// One versioned text file mapping (name, precision) -> decimal string.
// Entries are replaced when a higher precision is requested; outputs always
// round-trip through the stored string so cached and fresh runs render
// identically.
class ConstantCache {
 public:
  explicit ConstantCache(const std::string& dir) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    path_ = dir + "/constants-v1.txt";
    std::ifstream in(path_);
    std::string header;
    if (in && std::getline(in, header) && header == "erdosum-constants v1") {
      std::string name;
      int digits;
      std::string value;
      while (in >> name >> digits >> value) entries_[name] = {digits, value};
    }
  }

  template <class Fn>
  std::string get_or_compute(const std::string& name, int digits, Fn&& fn) {
    auto it = entries_.find(name);
    if (it != entries_.end() && it->second.first >= digits) return it->second.second;
    const Real v = fn();
    const std::string s = v.to_string_fixed(digits + 5);
    if (!path_.empty()) {
      entries_[name] = {digits, s};
      save();
    }
    return s;
  }

 private:
  void save() const {
    std::ofstream out(path_);
    out << "erdosum-constants v1\n";
    for (const auto& [name, e] : entries_) out << name << ' ' << e.first << ' ' << e.second << '\n';
  }
  std::string path_;
  std::map<std::string, std::pair<int, std::string>> entries_;
};

void emit_rows(const GlobalOpts& g, const std::vector<ReportRow>& rows) {
  if (g.format == "csv")
    std::cout << render_csv(rows);
  else if (g.format == "json")
    std::cout << render_json(rows, provenance_of(g));
  else
    std::cout << render_plain(rows);
}

int cmd_table(const GlobalOpts& g, unsigned kmax, bool squarefree, bool deltas) {
  QuadratureConfig qc;
  qc.prime_cutoff = g.prime_cutoff;
  qc.tail_point = g.tail_point;
  Quadrature quad(PrecisionContext(g.digits), qc);
  auto table = quad.f_nk_table(kmax);

  const mpfr_prec_t bits = bits_for_digits(g.digits + 15);
  const Real pi = Real::pi(bits);
  const Real six_over_pi2 = Real::of(6ul, bits) / (pi * pi);
  const Real one = Real::of(1ul, bits);

  std::vector<ReportRow> rows;
  rows.reserve(kmax);
  for (unsigned k = 1; k <= kmax; ++k) {
    const IntegralResult& r = squarefree ? table[k - 1].second : table[k - 1].first;
    if (deltas)
      rows.push_back(squarefree ? make_report_row(k, r, six_over_pi2, -1)
                                : make_report_row(k, r, one, +1));
    else
      rows.push_back(make_report_row(k, r));
  }
  emit_rows(g, rows);
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, double limit) {
  VerifyOptions opt;
  opt.digits = g.digits;
  opt.limit = static_cast<std::uint64_t>(limit);
  opt.threads = g.threads;
  opt.prime_cutoff = g.prime_cutoff;
  opt.tail_point = g.tail_point;
  const VerifyReport rep = run_verify_suite(suite, opt);

  std::cout << "{\n  \"suite\": \"" << rep.suite << "\",\n  \"pass\": "
            << (rep.all_pass() ? "true" : "false") << ",\n  \"checks\": [\n";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const auto& c = rep.checks[i];
    char margin[32];
    std::snprintf(margin, sizeof margin, "%.6g", c.margin);
    std::cout << "    {\"name\": \"" << c.name << "\", \"pass\": " << (c.pass ? "true" : "false")
              << ", \"margin\": " << margin;
    if (!c.detail.empty()) std::cout << ", \"detail\": \"" << c.detail << "\"";
    std::cout << '}' << (i + 1 < rep.checks.size() ? "," : "") << '\n';
  }
  std::cout << "  ]\n}\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_constants(const GlobalOpts& g) {
  const PrecisionContext ctx(g.digits);
  const ZetaEngine engine(ctx, g.prime_cutoff);
  ConstantCache cache(g.cache_dir);

  ConstantsBundle b;
  bool have = false;
  auto bundle = [&]() -> ConstantsBundle& {
    if (!have) {
      b = constants(engine);
      have = true;
    }
    return b;
  };
  std::vector<std::pair<std::string, std::string>> vals;
  vals.emplace_back("alpha", cache.get_or_compute("alpha", g.digits, [&] { return bundle().alpha; }));
  vals.emplace_back("c", cache.get_or_compute("c", g.digits, [&] { return bundle().c; }));
  vals.emplace_back("h_prime_1",
                    cache.get_or_compute("h_prime_1", g.digits, [&] { return bundle().h_prime_1; }));
  vals.emplace_back("euler_gamma",
                    cache.get_or_compute("euler_gamma", g.digits, [&] { return bundle().euler_gamma; }));
  vals.emplace_back("six_over_pi2",
                    cache.get_or_compute("six_over_pi2", g.digits, [&] { return bundle().six_over_pi2; }));

  if (g.format == "csv") {
    std::cout << "name,digits,value\n";
    for (const auto& [n, v] : vals) std::cout << n << ',' << g.digits << ',' << v << '\n';
  } else if (g.format == "json") {
    const Provenance p = provenance_of(g);
    std::cout << "{\n  \"provenance\": {\"tool\": \"" << p.tool << "\", \"version\": \""
              << p.version << "\", \"precision_digits\": " << p.precision_digits
              << ", \"prime_cutoff\": " << p.prime_cutoff << ", \"tail_point\": " << p.tail_point
              << ", \"threads\": " << p.threads << "},\n";
    for (std::size_t i = 0; i < vals.size(); ++i)
      std::cout << "  \"" << vals[i].first << "\": \"" << vals[i].second << '"'
                << (i + 1 < vals.size() ? "," : "") << '\n';
    std::cout << "}\n";
  } else {
    for (const auto& [n, v] : vals) std::cout << n << " = " << v << '\n';
  }
  return 0;
}

int cmd_beta(const GlobalOpts& g, unsigned k) {
  const PrecisionContext ctx(g.digits);
  const ZetaEngine engine(ctx, g.prime_cutoff);
  const Real beta = beta_lower_bound(k, engine);
  std::cout << "{\"k\": " << k << ", \"beta\": \"" << beta.to_string_fixed(g.digits)
            << "\", \"digits\": " << g.digits << "}\n";
  return 0;
}

int cmd_sieve(const GlobalOpts& g, double limit, unsigned kmax, std::uint64_t q,
              const std::string& out_path) {
  SieveConfig cfg;
  cfg.threads = g.threads;
  const auto lim = static_cast<std::uint64_t>(limit);
  const SieveSummary s = sieve_summary(lim, kmax, cfg);
  if (!out_path.empty()) save_sieve_summary(s, out_path);

  char buf[64];
  std::cout << "{\n  \"limit\": " << s.limit << ", \"k_max\": " << s.k_max << ",\n  \"rows\": [\n";
  for (unsigned k = 0; k <= kmax && k < s.counts.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", s.partial_f[k]);
    std::cout << "    {\"k\": " << k << ", \"count\": " << s.counts[k]
              << ", \"count_star\": " << s.counts_star[k] << ", \"partial_f\": " << buf;
    std::snprintf(buf, sizeof buf, "%.17g", s.partial_f_star[k]);
    std::cout << ", \"partial_f_star\": " << buf << '}'
              << (k < kmax && k + 1 < s.counts.size() ? "," : "") << '\n';
  }
  std::cout << "  ]";
  if (q > 1) {
    auto t = count_ap_all(lim, kmax, q, cfg);
    std::cout << ",\n  \"ap_counts\": {\"q\": " << q << ", \"rows\": [\n";
    for (unsigned k = 0; k <= kmax; ++k) {
      std::cout << "    [";
      for (std::uint64_t a = 0; a < q; ++a) std::cout << t[k][a] << (a + 1 < q ? "," : "");
      std::cout << ']' << (k < kmax ? "," : "") << '\n';
    }
    std::cout << "  ]}";
  }
  std::cout << "\n}\n";
  return 0;
}

int cmd_asymptotic(const GlobalOpts& g, unsigned k, double x, const std::string& variant,
                   std::uint64_t q) {
  const PrecisionContext ctx(g.digits);
  const ZetaEngine engine(ctx, g.prime_cutoff);
  const Densities dens(engine);
  DensityKind kind = DensityKind::standard;
  if (variant == "squarefree") kind = DensityKind::squarefree;
  else if (variant == "progression") kind = DensityKind::progression;
  else if (variant != "standard") throw CLI::ValidationError("unknown variant " + variant);

  const Real xr = ctx.make(x);
  const Real mt = dens.main_term(k, xr, kind, q);
  const Real z = ctx.make(static_cast<unsigned long>(k)) / log(log(xr));
  Real density = kind == DensityKind::standard ? dens.G(z)
                 : kind == DensityKind::squarefree ? dens.G_star(z)
                                                   : dens.G_q(z, q);
  std::cout << "{\"k\": " << k << ", \"x\": " << x << ", \"variant\": \"" << variant
            << "\", \"q\": " << q << ", \"z\": \"" << z.to_string_fixed(8)
            << "\", \"density\": \"" << density.to_string_fixed(g.digits)
            << "\", \"main_term\": \"" << mt.to_string_fixed(4) << "\"}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erdos sums over k-almost primes via prime zeta functions"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--digits", g.digits, "Target certified decimal digits")->capture_default_str();
  app.add_option("--format", g.format, "Output format: plain, csv, json")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for sieve-backed commands")
      ->capture_default_str();
  app.add_option("--prime-cutoff", g.prime_cutoff, "Prime cutoff A in the truncated zeta")
      ->capture_default_str();
  app.add_option("--tail-point", g.tail_point, "Split point S between substitution and plain panels")
      ->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "Directory for the constant cache");

  unsigned kmax = 10;
  bool squarefree = false, deltas = false;
  auto* t = app.add_subcommand("table", "f(N_k) table with certified brackets");
  t->add_option("--kmax", kmax, "Largest k")->capture_default_str();
  t->add_flag("--squarefree", squarefree, "Tabulate the squarefree family f(N*_k)");
  t->add_flag("--deltas", deltas, "Add the 1-f(N_k) (or f(N*_k)-6/pi^2) column");

  std::string suite;
  double vlimit = 1e7;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("suite", suite, "identities|inequalities|oracle|asymptotics|minimum")->required();
  v->add_option("--limit", vlimit, "Sieve limit for oracle-backed checks")->capture_default_str();

  auto* c = app.add_subcommand("constants", "alpha, c, h'(1), gamma, 6/pi^2");
  (void)c;

  unsigned beta_k = 20;
  auto* bcmd = app.add_subcommand("beta", "Lower bound beta_k for f(N_k)");
  bcmd->add_option("--k", beta_k, "Index k >= 9")->required();

  double slimit = 1e6;
  unsigned skmax = 8;
  std::uint64_t sq = 1;
  std::string sout;
  auto* scmd = app.add_subcommand("sieve", "Exhaustive Omega/mu^2 summary up to a limit");
  scmd->add_option("--limit", slimit, "Upper limit X")->capture_default_str();
  scmd->add_option("--kmax", skmax, "Largest k reported")->capture_default_str();
  scmd->add_option("--q", sq, "Also tally residues mod q");
  scmd->add_option("--out", sout, "Write a snapshot file");

  unsigned ak = 1;
  double ax = 1e8;
  std::string avariant = "standard";
  std::uint64_t aq = 1;
  auto* acmd = app.add_subcommand("asymptotic", "Counting main term for Omega(n)=k+1");
  acmd->add_option("--k", ak, "k (predicts the Omega = k+1 count)")->required();
  acmd->add_option("--x", ax, "Range endpoint x")->capture_default_str();
  acmd->add_option("--variant", avariant, "standard|squarefree|progression")
      ->capture_default_str();
  acmd->add_option("--q", aq, "Modulus for the progression variant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (t->parsed()) return cmd_table(g, kmax, squarefree, deltas);
    if (v->parsed()) return cmd_verify(g, suite, vlimit);
    if (c->parsed()) return cmd_constants(g);
    if (bcmd->parsed()) return cmd_beta(g, beta_k);
    if (scmd->parsed()) return cmd_sieve(g, slimit, skmax, sq, sout);
    if (acmd->parsed()) return cmd_asymptotic(g, ak, ax, avariant, aq);
  } catch (const PrecisionError& e) {
    std::cerr << "precision failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 3;
}
