#pragma once

#include <functional>
#include <string>
#include <vector>

#include "blues/optimizer.hpp"

namespace blues {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // non-empty on failure
};

struct VerifyOptions {
  Rational a{2};
  int digits = 50;
  unsigned seed = 12345;
  int samples = 24;  // randomized inputs per property
  // Test harness hook: applied to every convolve_green result inside the
  // convolution-identity check, to prove the check can fail.
  std::function<Field(const Field&)> convolution_tamper;
};

// Runs every module invariant suite plus the numeric quadrature
// cross-checks. All checks are deterministic for a fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace blues
