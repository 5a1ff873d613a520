// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/report_io.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace sepfrontier {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Rounded to 12 significant digits so the JSON text matches the CSV.
// strtod rather than stod: subnormal residuals must not throw.
Json json_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  return std::strtod(format_number(value).c_str(), nullptr);
}

Json json_optional(const std::optional<double>& value) {
  return value ? json_number(*value) : Json(nullptr);
}

namespace {

Json family_json(const StateInput& state) {
  Json j;
  j["kind"] = to_string(state.kind);
  if (state.cc) {
    j["base"] = state.cc->base.to_string();
    j["c"] = state.cc->c;
  }
  if (state.werner) {
    Json coefficients = Json::array();
    for (const auto& a : state.werner->coefficients()) coefficients.push_back(format_complex(a));
    j["coefficients"] = std::move(coefficients);
  }
  return j;
}

Json entropic_json(const EntropicBound& bound) {
  Json j;
  j["x_c"] = json_optional(bound.x_c);
  j["q"] = json_number(bound.q);
  j["subset"] = bound.subset.to_string();
  if (bound.v_bar) j["v_bar"] = json_number(*bound.v_bar);
  if (bound.residual) j["residual"] = json_number(*bound.residual);
  return j;
}

}  // namespace

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(12);
  os << value;
  return os.str();
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_number(*value) : "none";
}

std::string csv_header() {
  return "family,D,S,N,subset,q,x_c_peres,x_c_entropy,coincide,exact_conjecture,r_c,r_c_paper";
}

void write_csv_rows(std::ostream& os, const FrontierReport& report) {
  const auto& shape = report.shape;
  for (const auto& sample : report.x_c_q_samples) {
    os << to_string(report.family.kind) << ',' << shape.local_dim() << ',' << shape.spin().to_string()
       << ',' << shape.sites() << ','
       << csv_field(report.x_c_peres.subset.to_string() + "/" + sample.subset.to_string()) << ',' << format_number(sample.q) << ','
       << format_optional(report.x_c_peres.x_c) << ',' << format_optional(sample.x_c) << ','
       << (report.coincide ? "true" : "false") << ',' << (report.exact_conjecture ? "true" : "false")
       << ',' << format_optional(report.r_c) << ',' << format_optional(report.r_c_paper) << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<FrontierReport>& reports) {
  os << csv_header() << '\n';
  for (const auto& report : reports) write_csv_rows(os, report);
}

Json to_json(const FrontierReport& report) {
  Json j;
  j["family"] = family_json(report.family);
  j["shape"] = {{"spin", report.shape.spin().to_string()},
                {"sites", report.shape.sites()},
                {"local_dim", report.shape.local_dim()},
                {"dim", report.shape.dim()}};
  j["x_c_peres"] = {{"x_c", json_optional(report.x_c_peres.x_c)},
                    {"subset", report.x_c_peres.subset.to_string()},
                    {"witness", json_number(report.x_c_peres.witness)}};
  j["x_c_entropy"] = entropic_json(report.x_c_entropy);
  Json samples = Json::array();
  for (const auto& sample : report.x_c_q_samples) samples.push_back(entropic_json(sample));
  j["x_c_q_samples"] = std::move(samples);
  j["coincide"] = report.coincide;
  j["exact_conjecture"] = report.exact_conjecture;
  j["r_c"] = json_optional(report.r_c);
  j["r_c_paper"] = json_optional(report.r_c_paper);
  j["eigenvalue_ratio"] = json_optional(report.eigenvalue_ratio);
  return j;
}

Json to_json(const std::vector<FrontierReport>& reports) {
  Json j = Json::array();
  for (const auto& report : reports) j.push_back(to_json(report));
  return j;
}

}  // namespace sepfrontier
