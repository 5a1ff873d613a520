// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/tensor.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "sepfrontier/error.hpp"

namespace sepfrontier {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Parses a signed half-integer ("-3/2", "+1", "0.5") into twice its value.
// Returns false on anything that is not an exact multiple of 1/2.
bool parse_twice(std::string_view text, int& twice) {
  text = trim(text);
  if (text.empty()) return false;
  int sign = 1;
  if (text.front() == '+' || text.front() == '-') {
    sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  if (text.empty() || text.front() == '+' || text.front() == '-') return false;

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    int num = 0;
    int den = 0;
    const auto lhs = text.substr(0, slash);
    const auto rhs = text.substr(slash + 1);
    auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), num);
    auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), den);
    if (r1.ec != std::errc{} || r1.ptr != lhs.data() + lhs.size()) return false;
    if (r2.ec != std::errc{} || r2.ptr != rhs.data() + rhs.size()) return false;
    if (den == 1) {
      twice = sign * 2 * num;
    } else if (den == 2) {
      twice = sign * num;
    } else {
      return false;
    }
    return true;
  }

  double value = 0.0;
  auto r = std::from_chars(text.data(), text.data() + text.size(), value);
  if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) return false;
  const double doubled = 2.0 * value;
  const double rounded = std::round(doubled);
  if (std::abs(doubled - rounded) > 1e-12 || std::abs(rounded) > 1e6) return false;
  twice = sign * static_cast<int>(rounded);
  return true;
}

}  // namespace

Spin::Spin(int twice) : twice_(twice) {
  if (twice < 1) {
    throw Error(ErrorKind::InvalidSpin, "spin must be at least 1/2, got 2S=" + std::to_string(twice));
  }
}

Spin Spin::parse(std::string_view text) {
  int twice = 0;
  if (!parse_twice(text, twice) || trim(text).front() == '-') {
    throw Error(ErrorKind::InvalidSpin,
                "cannot read spin '" + std::string(text) + "' (expected e.g. 1/2, 1, 1.5)");
  }
  return Spin(twice);
}

std::string Spin::to_string() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

int parse_twice_projection(std::string_view text) {
  int twice = 0;
  if (!parse_twice(text, twice)) {
    throw Error(ErrorKind::InvalidConfig, "cannot read spin projection '" + std::string(text) + "'");
  }
  return twice;
}

std::string format_twice_projection(int twice_value) {
  std::string body = twice_value % 2 == 0 ? std::to_string(std::abs(twice_value) / 2)
                                          : std::to_string(std::abs(twice_value)) + "/2";
  if (twice_value > 0) return "+" + body;
  if (twice_value < 0) return "-" + body;
  return body;
}

std::size_t checked_pow(std::size_t base, int exponent, std::size_t limit) {
  std::size_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (result > limit / base) return limit + 1;
    result *= base;
  }
  return result;
}

SystemShape::SystemShape(Spin spin, int sites, std::size_t cap)
    : spin_(spin), sites_(sites), local_dim_(spin.local_dim()), dim_(0), cap_(cap) {
  if (sites < 1) {
    throw Error(ErrorKind::InvalidConfig, "number of sites must be >= 1, got " + std::to_string(sites));
  }
  dim_ = checked_pow(static_cast<std::size_t>(local_dim_), sites, cap);
  if (dim_ > cap) {
    throw Error(ErrorKind::DimensionCap, "D^N = " + std::to_string(local_dim_) + "^" +
                                             std::to_string(sites) + " exceeds the dimension cap " +
                                             std::to_string(cap));
  }
}

std::size_t SystemShape::stride(int site) const {
  if (site < 1 || site > sites_) {
    throw Error(ErrorKind::InvalidSubset, "site " + std::to_string(site) + " outside 1.." +
                                              std::to_string(sites_));
  }
  std::size_t s = 1;
  for (int k = site; k < sites_; ++k) s *= static_cast<std::size_t>(local_dim_);
  return s;
}

SpinConfig SpinConfig::parse(std::string_view text) {
  std::vector<int> values;
  for (auto part : split(text, ',')) values.push_back(parse_twice_projection(part));
  return SpinConfig(std::move(values));
}

void SpinConfig::validate(const SystemShape& shape) const {
  if (static_cast<int>(twice_values_.size()) != shape.sites()) {
    throw Error(ErrorKind::InvalidConfig, "configuration has " + std::to_string(twice_values_.size()) +
                                              " values but the register has " +
                                              std::to_string(shape.sites()) + " sites");
  }
  const int twice_spin = shape.spin().twice();
  for (int v : twice_values_) {
    if (v < -twice_spin || v > twice_spin || (v + twice_spin) % 2 != 0) {
      throw Error(ErrorKind::InvalidConfig, "value " + format_twice_projection(v) +
                                                " is not a projection of spin " +
                                                shape.spin().to_string());
    }
  }
}

std::string SpinConfig::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < twice_values_.size(); ++i) {
    if (i) out += ',';
    out += format_twice_projection(twice_values_[i]);
  }
  return out + ")";
}

SiteSubset::SiteSubset(std::vector<int> sites) : sites_(std::move(sites)) {
  if (sites_.empty()) throw Error(ErrorKind::InvalidSubset, "site subset must be non-empty");
  std::sort(sites_.begin(), sites_.end());
  if (sites_.front() < 1) {
    throw Error(ErrorKind::InvalidSubset, "site labels start at 1, got " + std::to_string(sites_.front()));
  }
  if (std::adjacent_find(sites_.begin(), sites_.end()) != sites_.end()) {
    throw Error(ErrorKind::InvalidSubset, "duplicate site label in subset");
  }
}

SiteSubset SiteSubset::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}') {
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> sites;
  for (auto part : split(text, ',')) {
    int value = 0;
    auto r = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || r.ec != std::errc{} || r.ptr != part.data() + part.size()) {
      throw Error(ErrorKind::InvalidSubset, "cannot read site label '" + std::string(part) + "'");
    }
    sites.push_back(value);
  }
  return SiteSubset(std::move(sites));
}

bool SiteSubset::contains(int site) const {
  return std::binary_search(sites_.begin(), sites_.end(), site);
}

void SiteSubset::validate(const SystemShape& shape) const {
  if (sites_.back() > shape.sites()) {
    throw Error(ErrorKind::InvalidSubset, "site " + std::to_string(sites_.back()) +
                                              " outside 1.." + std::to_string(shape.sites()));
  }
}

std::vector<int> SiteSubset::complement(int sites) const {
  std::vector<int> out;
  for (int s = 1; s <= sites; ++s) {
    if (!contains(s)) out.push_back(s);
  }
  return out;
}

std::string SiteSubset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sites_[i]);
  }
  return out + "}";
}

std::vector<SiteSubset> enumerate_subsets(int sites, int max_size) {
  std::vector<SiteSubset> out;
  max_size = std::min(max_size, sites);
  for (int size = 1; size <= max_size; ++size) {
    // Lexicographic combinations of `size` labels out of 1..sites.
    std::vector<int> combo(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      out.emplace_back(combo);
      int i = size - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == sites - size + i + 1) --i;
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) {
        combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

std::vector<SiteSubset> enumerate_subsets_modulo_complement(int sites, int max_size) {
  std::vector<SiteSubset> out;
  for (auto& subset : enumerate_subsets(sites, std::min(max_size, sites - 1))) {
    const auto n = static_cast<int>(subset.size());
    if (2 * n > sites) continue;  // its complement (smaller) is already listed
    if (2 * n == sites && !subset.contains(1)) continue;
    out.push_back(std::move(subset));
  }
  return out;
}

std::size_t flat_index(const SpinConfig& config, const SystemShape& shape) {
  config.validate(shape);
  const int twice_spin = shape.spin().twice();
  std::size_t index = 0;
  for (int v : config.twice_values()) {
    index = index * static_cast<std::size_t>(shape.local_dim()) +
            static_cast<std::size_t>((v + twice_spin) / 2);
  }
  return index;
}

SpinConfig config_of(std::size_t index, const SystemShape& shape) {
  if (index >= shape.dim()) {
    throw Error(ErrorKind::InvalidIndex, "index " + std::to_string(index) + " outside [0, " +
                                             std::to_string(shape.dim()) + ")");
  }
  const auto d = static_cast<std::size_t>(shape.local_dim());
  const int twice_spin = shape.spin().twice();
  std::vector<int> values(static_cast<std::size_t>(shape.sites()));
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    *it = 2 * static_cast<int>(index % d) - twice_spin;
    index /= d;
  }
  return SpinConfig(std::move(values));
}

SpinConfig conjugate(const SpinConfig& config) {
  std::vector<int> values = config.twice_values();
  for (int& v : values) v = -v;
  return SpinConfig(std::move(values));
}

bool is_self_conjugate(const SpinConfig& config) {
  return std::all_of(config.twice_values().begin(), config.twice_values().end(),
                     [](int v) { return v == 0; });
}

}  // namespace sepfrontier
