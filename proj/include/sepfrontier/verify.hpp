// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sepfrontier {

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Negative control: shifts every closed-form bound by -1e-6 so the
  /// closed-form-vs-numeric checks must fail.
  bool inject_perturbation = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::string inputs;  ///< the failing instance, for reproduction
};

/// Runs the cross-check battery (analytic spectra vs dense eigensolves,
/// closed-form bounds vs numeric search, alpha <= 1 battery, finite-q root,
/// structural invariants, environment ratio). Prints one PASS/FAIL line per
/// check to `log` as it goes.
std::vector<CheckResult> run_verify(const VerifyOptions& options, std::ostream& log);

}  // namespace sepfrontier
