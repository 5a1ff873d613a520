// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file linalg.hpp
 * @brief Dense Hermitian operators on a spin register.
 *
 * Only the operations the separability criteria need are provided: full
 * spectra, partial transposition over a site subset, partial trace onto a
 * site subset, and spectral power sums Tr M^q.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sepfrontier/tensor.hpp"

namespace sepfrontier {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Self-adjoint dense matrix. Hermiticity is checked once, on construction.
class HermitianMatrix {
 public:
  /// Throws NotHermitian if |M_ij - conj(M_ji)| > 1e-12 * max|M|, ShapeMismatch
  /// if the matrix is not square or does not match `shape`.
  explicit HermitianMatrix(ComplexMatrix entries, std::optional<SystemShape> shape = std::nullopt);

  static HermitianMatrix identity(std::size_t dim, std::optional<SystemShape> shape = std::nullopt);

  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  [[nodiscard]] const ComplexMatrix& entries() const noexcept { return entries_; }
  [[nodiscard]] const std::optional<SystemShape>& shape() const noexcept { return shape_; }
  [[nodiscard]] Complex operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  [[nodiscard]] double trace() const { return entries_.trace().real(); }
  [[nodiscard]] double frobenius_norm() const { return entries_.norm(); }

 private:
  struct TrustedTag {};
  HermitianMatrix(TrustedTag, ComplexMatrix entries, std::optional<SystemShape> shape);

  friend HermitianMatrix partial_transpose(const HermitianMatrix&, const SiteSubset&, const SystemShape&);
  friend HermitianMatrix partial_trace(const HermitianMatrix&, const SiteSubset&, const SystemShape&);

  ComplexMatrix entries_;
  std::optional<SystemShape> shape_;
};

/// Real eigenvalues in ascending order, with multiplicity.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts the values.
  explicit Spectrum(std::vector<double> values);

  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] std::size_t dim() const noexcept { return values_.size(); }
  [[nodiscard]] double min() const { return values_.front(); }
  [[nodiscard]] double max() const { return values_.back(); }
  [[nodiscard]] double sum() const;

 private:
  std::vector<double> values_;
};

/// Full spectrum. The residual ||Mv - lv|| <= 1e-9 ||M||_F of every eigenpair is
/// checked; a breach raises NumericalContract.
Spectrum eigenvalues(const HermitianMatrix& m);

/// Swaps row/column labels of the sites in `subset`:
/// <s|M'|s'> = <t|M|t'> where t, t' exchange s_i and s'_i for i in subset.
HermitianMatrix partial_transpose(const HermitianMatrix& m, const SiteSubset& subset,
                                  const SystemShape& shape);

/// Traces out every site not in `keep`. The result acts on D^|keep| states,
/// kept sites in increasing order, and carries the reduced shape.
HermitianMatrix partial_trace(const HermitianMatrix& m, const SiteSubset& keep, const SystemShape& shape);

/// Clamping threshold for negative round-off eigenvalues, relative to max|lambda|.
inline constexpr double kNegativeDustTolerance = 1e-10;

/// Sum of lambda^q over the spectrum; eigenvalues in [-1e-10 ||M||, 0) are
/// clamped to zero. Throws NotPositive below that and UnsupportedQ for q <= 0.
double trace_power(const Spectrum& spectrum, double q);
double trace_power(const HermitianMatrix& m, double q);

/// log(Tr M^q), stable for large q where lambda^q underflows.
double log_trace_power(const Spectrum& spectrum, double q);

}  // namespace sepfrontier
