// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file states.hpp
 * @brief Entangled pure states and the noisy family rho(x) = (1-x) I/D^N + x |phi><phi|.
 *
 * Two state families are provided:
 *  - charge-conjugation states (|s_1..s_N> + c |-s_1..-s_N>)/sqrt(2), c = +/-1,
 *    which contain the two-qubit Bell states;
 *  - generalized Werner states sum_k a_k |k,k,...,k> / sqrt(sum |a_k|^2).
 * Arbitrary amplitude vectors are accepted through StateVector::normalized.
 */

#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "sepfrontier/linalg.hpp"
#include "sepfrontier/tensor.hpp"

namespace sepfrontier {

struct CCStateSpec {
  SpinConfig base;
  int c = -1;  ///< charge-conjugation eigenvalue, +1 or -1
};

/// Coefficients a_k for k = -S..S (index 0 is k = -S).
class WernerSpec {
 public:
  explicit WernerSpec(std::vector<Complex> coefficients);

  /// All D coefficients equal to one.
  static WernerSpec uniform(const SystemShape& shape);

  /// Comma-separated components in `a+bi` syntax; real components may omit
  /// the imaginary part ("1,2", "1+0.5i,-2i").
  static WernerSpec parse(std::string_view text);

  [[nodiscard]] const std::vector<Complex>& coefficients() const noexcept { return coefficients_; }
  /// sum_k |a_k|^2
  [[nodiscard]] double norm_sq() const;
  /// max_k |a_k|^2
  [[nodiscard]] double max_weight() const;
  /// max_{l != k} |a_l^* a_k|
  [[nodiscard]] double max_cross_product() const;
  [[nodiscard]] int nonzero_count() const;

  /// Throws InvalidConfig unless there are exactly D coefficients.
  void validate(const SystemShape& shape) const;
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Complex> coefficients_;
};

/// Parses one complex number in `a+bi` form ("1", "-2.5", "3i", "1-0.5i").
Complex parse_complex(std::string_view text);
std::string format_complex(Complex value);

/// Unit-norm amplitude vector.
class StateVector {
 public:
  /// Throws NotNormalized unless | ||v|| - 1 | <= 1e-12.
  explicit StateVector(ComplexVector amplitudes);
  /// Divides by the norm; throws NullState for the zero vector.
  static StateVector normalized(ComplexVector amplitudes);

  [[nodiscard]] const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }

 private:
  ComplexVector amplitudes_;
};

/// A point of the mixed family: a rank-1 projector and the weight x in [0,1].
class MixedFamilyPoint {
 public:
  /// Throws InvalidMixing for x outside [0,1] and NotNormalized unless
  /// rho_tilde has trace 1 and Tr rho_tilde^2 = 1 within 1e-10.
  MixedFamilyPoint(HermitianMatrix rho_tilde, double x, SystemShape shape);

  [[nodiscard]] const HermitianMatrix& rho_tilde() const noexcept { return rho_tilde_; }
  [[nodiscard]] double x() const noexcept { return x_; }
  [[nodiscard]] const SystemShape& shape() const noexcept { return shape_; }

 private:
  HermitianMatrix rho_tilde_;
  double x_;
  SystemShape shape_;
};

StateVector cc_state(const CCStateSpec& spec, const SystemShape& shape);
StateVector werner_state(const WernerSpec& spec, const SystemShape& shape);

/// |v><v|
HermitianMatrix pure_density(const StateVector& v, std::optional<SystemShape> shape = std::nullopt);

/// (1-x)/D^N I + x rho_tilde
HermitianMatrix family_density(const MixedFamilyPoint& point);

/// Closed-form spectrum of the family: (1+(D^N-1)x)/D^N once and (1-x)/D^N
/// with multiplicity D^N-1.
Spectrum family_spectrum(double x, const SystemShape& shape);

void require_mixing(double x);

}  // namespace sepfrontier
