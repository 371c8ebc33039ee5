#pragma once

#include <string>

#include "polycurv/translative.hpp"

namespace polycurv {

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;  // discrepancy that was compared against the bound
  double bound = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Built-in verification suites: "signs", "moments", "steiner", "mixedvol",
/// "mu", "tif", or "all". Throws ValidationError for an unknown name.
VerifyReport run_verify_suite(const std::string& suite, const McConfig& cfg = {});

std::vector<std::string> verify_suite_names();

}  // namespace polycurv
