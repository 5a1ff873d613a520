// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepfrontier {

enum class ErrorKind {
  InvalidSpin,
  InvalidConfig,
  InvalidIndex,
  InvalidSubset,
  DimensionCap,
  ShapeMismatch,
  NotHermitian,
  NotPositive,
  UnsupportedQ,
  NullState,
  NotNormalized,
  InvalidMixing,
  InvalidBound,
  Undefined,
  Parse,
  // Numerical contract breaches (eigen residual, failed bracketing, ...).
  NumericalContract,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace sepfrontier
