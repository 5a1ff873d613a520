// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepfrontier/frontier.hpp"

namespace sepfrontier {

/// 12 significant digits; "inf" for infinity.
std::string format_number(double value);
/// format_number, or "none" when empty.
std::string format_optional(const std::optional<double>& value);

/// RFC 4180 quoting: fields containing ',', '"' or newlines are wrapped in quotes.
std::string csv_field(const std::string& text);

/// JSON number rounded like format_number; infinities become "inf" strings.
nlohmann::ordered_json json_number(double value);
/// json_number, or null when empty.
nlohmann::ordered_json json_optional(const std::optional<double>& value);

/// family,D,S,N,subset,q,x_c_peres,x_c_entropy,coincide,exact_conjecture,r_c,r_c_paper
std::string csv_header();

/// One row per q sample. The subset column reads "<peres subset>/<entropic subset>", quoted.
void write_csv_rows(std::ostream& os, const FrontierReport& report);
void write_csv(std::ostream& os, const std::vector<FrontierReport>& reports);

nlohmann::ordered_json to_json(const FrontierReport& report);
nlohmann::ordered_json to_json(const std::vector<FrontierReport>& reports);

}  // namespace sepfrontier
