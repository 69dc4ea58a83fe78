#pragma once

#include "voganish/endoscopy.hpp"

namespace voganish {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool info_only = false;  // reported, never affects the exit status
  bool warning = false;    // reported, fails only under --strict
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 1;
  bool strict = false;      // treat warnings (info lines with detail) as failures
  bool with_oracle = true;  // run the finite-field census when the instance allows
};

std::vector<CheckResult> verify_all(const ExampleBundle& b, const BundleSet& set,
                                    const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results, bool strict);

}  // namespace voganish
