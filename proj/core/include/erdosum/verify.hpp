#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace erdosum {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  double margin = 0.0;  // slack to the tolerance; negative when failing
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  int digits = 12;
  std::uint64_t limit = 10000000;  // sieve-backed suites
  unsigned threads = 1;
  std::uint64_t prime_cutoff = 100;
  double tail_point = 10.0;
};

VerifyReport verify_identities(const VerifyOptions& opt);
VerifyReport verify_inequalities(const VerifyOptions& opt);
VerifyReport verify_oracle(const VerifyOptions& opt);
VerifyReport verify_asymptotics(const VerifyOptions& opt);
VerifyReport verify_minimum(const VerifyOptions& opt);

// Dispatch by name; throws std::domain_error on an unknown suite.
VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace erdosum
