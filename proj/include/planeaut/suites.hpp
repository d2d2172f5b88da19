#pragma once

// Named verification suites over the curve families, run by `verify`.

#include <string>
#include <vector>

namespace planeaut {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// fermat, klein, fdd1, dcurve, fprime, fdoubleprime, hessian, galois,
/// theorem2, theorem3 (in that order); "all" runs each of them.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite. Errors raised inside a check are
/// reported as a failed check.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace planeaut
