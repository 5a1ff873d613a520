// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepfrontier::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kInvalidInput = 2,
  kNumericalBreach = 3,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepfrontier::cli
