#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace holocalc::verify {

enum class Status { Pass, Fail, Error };
std::string status_name(Status s);

struct CheckRecord {
  std::string name;  // "<suite>.<check>"
  Status status = Status::Pass;
  std::string detail;
  double elapsed_ms = 0;
};

/// exterior, seifert, g2, spin7, cone, spectral, examples
const std::vector<std::string>& suite_names();
/// Names of the checks in a suite, in run order.
std::vector<std::string> check_names(const std::string& suite);

/// Every check draws from its own generator seeded by (seed, check name), so
/// results do not depend on which other checks run.
std::vector<CheckRecord> run_suite(const std::string& suite, std::uint64_t seed);
CheckRecord run_check(const std::string& name, std::uint64_t seed);

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace holocalc::verify
