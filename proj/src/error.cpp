// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/error.hpp"

namespace sepfrontier {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSpin: return "InvalidSpin";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::InvalidSubset: return "InvalidSubset";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::UnsupportedQ: return "UnsupportedQ";
    case ErrorKind::NullState: return "NullState";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::InvalidMixing: return "InvalidMixing";
    case ErrorKind::InvalidBound: return "InvalidBound";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NumericalContract: return "NumericalContract";
  }
  return "Unknown";
}

}  // namespace sepfrontier
