// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file tensor.hpp
 * @brief Index arithmetic for registers of N spin-S sites.
 *
 * Basis states |s_1,...,s_N> are encoded as base-D digit strings with site 1
 * the most significant digit and local value s mapped to digit s+S. Spins are
 * carried as integers 2S (and local values as 2s) so no floating-point spin
 * arithmetic ever occurs.
 */

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sepfrontier {

/// Spin quantum number S stored as the integer 2S.
class Spin {
 public:
  explicit Spin(int twice);

  /// Accepts "1/2", "3/2", "1", "0.5", "1.0", "1.5".
  static Spin parse(std::string_view text);

  [[nodiscard]] int twice() const noexcept { return twice_; }
  [[nodiscard]] double value() const noexcept { return 0.5 * twice_; }
  [[nodiscard]] int local_dim() const noexcept { return twice_ + 1; }
  /// "1/2", "1", "3/2", ...
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Spin&, const Spin&) = default;

 private:
  int twice_;
};

/// Parses a signed spin projection such as "+1/2", "-1", "0", "-0.5" into 2s.
int parse_twice_projection(std::string_view text);
std::string format_twice_projection(int twice_value);

/// Geometry (S, N, D = 2S+1, D^N) of the register.
class SystemShape {
 public:
  static constexpr std::size_t kDefaultCap = 4096;

  SystemShape(Spin spin, int sites, std::size_t cap = kDefaultCap);

  [[nodiscard]] Spin spin() const noexcept { return spin_; }
  [[nodiscard]] int sites() const noexcept { return sites_; }
  [[nodiscard]] int local_dim() const noexcept { return local_dim_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t cap() const noexcept { return cap_; }

  /// Flat-index weight of the digit belonging to 1-based `site`: D^(N-site).
  [[nodiscard]] std::size_t stride(int site) const;

  /// Digit (0..D-1) that `site` holds in flat index `index`.
  [[nodiscard]] int digit(std::size_t index, int site) const {
    return static_cast<int>((index / stride(site)) % static_cast<std::size_t>(local_dim_));
  }

  friend bool operator==(const SystemShape& a, const SystemShape& b) {
    return a.spin_ == b.spin_ && a.sites_ == b.sites_;
  }

 private:
  Spin spin_;
  int sites_;
  int local_dim_;
  std::size_t dim_;
  std::size_t cap_;
};

/// Integer power that refuses to overflow past `limit`; returns limit+1 on overflow.
std::size_t checked_pow(std::size_t base, int exponent, std::size_t limit);

/// Local spin values of every site, stored as 2s_i.
class SpinConfig {
 public:
  SpinConfig() = default;
  explicit SpinConfig(std::vector<int> twice_values) : twice_values_(std::move(twice_values)) {}

  /// Comma-separated projections, e.g. "+1/2,-1/2" or "1,0,-1".
  static SpinConfig parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& twice_values() const noexcept { return twice_values_; }
  [[nodiscard]] std::size_t size() const noexcept { return twice_values_.size(); }
  [[nodiscard]] double value(std::size_t i) const { return 0.5 * twice_values_.at(i); }

  /// Throws InvalidConfig unless the length is N and every value lies in {-S,...,S}.
  void validate(const SystemShape& shape) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SpinConfig&, const SpinConfig&) = default;

 private:
  std::vector<int> twice_values_;
};

/// Strictly increasing, non-empty list of 1-based site labels.
class SiteSubset {
 public:
  /// Sorts the labels; throws InvalidSubset on empty input, duplicates, or labels < 1.
  explicit SiteSubset(std::vector<int> sites);

  /// "1,3" or "{1,3}".
  static SiteSubset parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& sites() const noexcept { return sites_; }
  [[nodiscard]] std::size_t size() const noexcept { return sites_.size(); }
  [[nodiscard]] bool contains(int site) const;

  /// Throws InvalidSubset if a label exceeds N.
  void validate(const SystemShape& shape) const;
  [[nodiscard]] bool is_proper(const SystemShape& shape) const {
    return static_cast<int>(sites_.size()) < shape.sites();
  }

  /// Sites of 1..N not in this subset; empty when the subset is everything.
  [[nodiscard]] std::vector<int> complement(int sites) const;

  /// "{1,3}"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SiteSubset&, const SiteSubset&) = default;
  friend auto operator<=>(const SiteSubset& a, const SiteSubset& b) { return a.sites_ <=> b.sites_; }

 private:
  std::vector<int> sites_;
};

/// All subsets of {1..N} with 1 <= size <= max_size, ordered by size then lexicographically.
std::vector<SiteSubset> enumerate_subsets(int sites, int max_size);

/// Subsets of size <= max_size, keeping only one representative of each
/// {T, complement(T)} pair (the one containing site 1 when |T| = N/2).
std::vector<SiteSubset> enumerate_subsets_modulo_complement(int sites, int max_size);

std::size_t flat_index(const SpinConfig& config, const SystemShape& shape);
SpinConfig config_of(std::size_t index, const SystemShape& shape);
SpinConfig conjugate(const SpinConfig& config);
bool is_self_conjugate(const SpinConfig& config);

}  // namespace sepfrontier
