#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace oscgauss {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  long precision_bits = 256;
  int jobs = 1;
};

/// moments, orthogonality, symmetry, identities, exactness, breakdown, roots,
/// rules, oracle, asymptotics, limits.
const std::vector<std::string>& check_suite_names();

/// Runs one suite, or every suite for "all". Failures inside a check are
/// reported as failed results, never thrown. Unknown names throw
/// InvalidArgument.
std::vector<CheckResult> run_checks(std::string_view suite, const CheckOptions& options = {});

}  // namespace oscgauss
