// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file plan.hpp
 * @brief Sweep plan files.
 *
 * INI-style text, one section per grid axis, each with a `values` key:
 *
 *     [family]
 *     values = cc werner
 *     [spin]
 *     values = 1/2 1
 *     [sites]
 *     values = 2..4 6
 *     [q]
 *     values = 1 2 inf
 *     [coeffs]
 *     values = uniform; 1,2
 *     [base]
 *     values = default
 *     c = -1
 *     [options]
 *     cap = 4096
 *     max_subset_size = 1
 *     scope = all
 *
 * [coeffs] lists Werner coefficient sets and [base] lists CC base
 * configurations, both separated by ';'. scope is "all" or "largest".
 * Lines starting with ';' or '#' are comments.
 * Missing axes fall back to: no families, no spins, no sites (an empty plan),
 * uniform coefficients, the default base, and the default q grid.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sepfrontier/frontier.hpp"

namespace sepfrontier {

/// Throws Error(Parse) on malformed input.
SweepPlan parse_plan(std::istream& in);
SweepPlan load_plan(const std::string& path);

/// Comma- or space-separated q values; "inf" (or "infinity") for q -> infinity.
std::vector<double> parse_q_list(const std::string& text);

}  // namespace sepfrontier
