// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sepfrontier/error.hpp"

namespace sepfrontier {

namespace {

constexpr double kHermiticityTolerance = 1e-12;
constexpr double kResidualTolerance = 1e-9;

void require_shape(const HermitianMatrix& m, const SystemShape& shape) {
  if (m.dim() != shape.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "matrix of dimension " + std::to_string(m.dim()) +
                                              " does not act on D^N = " + std::to_string(shape.dim()));
  }
}

// Sum of digit * stride over the given sites, for every flat index.
std::vector<std::size_t> partial_offsets(const SystemShape& shape, const std::vector<int>& sites) {
  std::vector<std::size_t> offsets(shape.dim(), 0);
  for (int site : sites) {
    const std::size_t stride = shape.stride(site);
    for (std::size_t i = 0; i < shape.dim(); ++i) {
      offsets[i] += static_cast<std::size_t>(shape.digit(i, site)) * stride;
    }
  }
  return offsets;
}

// Flat offsets, in the full register, of every configuration of `sites`
// (enumerated with the first listed site most significant).
std::vector<std::size_t> configuration_offsets(const SystemShape& shape, const std::vector<int>& sites) {
  std::vector<std::size_t> offsets{0};
  const auto d = static_cast<std::size_t>(shape.local_dim());
  for (int site : sites) {
    const std::size_t stride = shape.stride(site);
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * d);
    for (std::size_t base : offsets) {
      for (std::size_t digit = 0; digit < d; ++digit) next.push_back(base + digit * stride);
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

HermitianMatrix::HermitianMatrix(ComplexMatrix entries, std::optional<SystemShape> shape)
    : entries_(std::move(entries)), shape_(std::move(shape)) {
  if (entries_.rows() != entries_.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "matrix is " + std::to_string(entries_.rows()) + "x" +
                                              std::to_string(entries_.cols()) + ", not square");
  }
  if (shape_ && shape_->dim() != dim()) {
    throw Error(ErrorKind::ShapeMismatch, "matrix of dimension " + std::to_string(dim()) +
                                              " does not act on D^N = " + std::to_string(shape_->dim()));
  }
  const double scale = entries_.size() ? entries_.cwiseAbs().maxCoeff() : 0.0;
  const double deviation = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (entries_.size() && deviation > kHermiticityTolerance * scale) {
    throw Error(ErrorKind::NotHermitian, "max |M_ij - conj(M_ji)| = " + std::to_string(deviation));
  }
}

HermitianMatrix::HermitianMatrix(TrustedTag, ComplexMatrix entries, std::optional<SystemShape> shape)
    : entries_(std::move(entries)), shape_(std::move(shape)) {}

HermitianMatrix HermitianMatrix::identity(std::size_t dim, std::optional<SystemShape> shape) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianMatrix(ComplexMatrix::Identity(n, n), std::move(shape));
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

namespace {

// Connected components of the non-zero pattern. Permuting a Hermitian matrix
// into these blocks is an exact similarity, so each block is solved alone.
std::vector<std::vector<Eigen::Index>> sparsity_blocks(const ComplexMatrix& m) {
  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  auto find = [&](Eigen::Index i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j + 1; i < n; ++i) {
      if (m(i, j) != Complex{} || m(j, i) != Complex{}) {
        const auto a = find(i);
        const auto b = find(j);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<Eigen::Index>> blocks;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(n), -1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto root = find(i);
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<Eigen::Index>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(s)].push_back(i);
  }
  return blocks;
}

}  // namespace

Spectrum eigenvalues(const HermitianMatrix& m) {
  if (m.dim() == 0) return Spectrum{};
  const double tolerance = kResidualTolerance * m.frobenius_norm();
  std::vector<double> values;
  values.reserve(m.dim());
  for (const auto& block : sparsity_blocks(m.entries())) {
    const auto n = static_cast<Eigen::Index>(block.size());
    if (n == 1) {
      values.push_back(m.entries()(block[0], block[0]).real());
      continue;
    }
    ComplexMatrix sub(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        sub(i, j) = m.entries()(block[static_cast<std::size_t>(i)], block[static_cast<std::size_t>(j)]);
      }
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorKind::NumericalContract, "eigensolver did not converge");
    }
    const auto& vectors = solver.eigenvectors();
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    const ComplexMatrix residual = sub * vectors - vectors * lambda.cast<Complex>().asDiagonal();
    const double worst = residual.colwise().norm().maxCoeff();
    if (worst > tolerance) {
      throw Error(ErrorKind::NumericalContract,
                  "eigenpair residual " + std::to_string(worst) + " exceeds 1e-9 ||M||_F");
    }
    values.insert(values.end(), lambda.data(), lambda.data() + lambda.size());
  }
  return Spectrum(std::move(values));
}

HermitianMatrix partial_transpose(const HermitianMatrix& m, const SiteSubset& subset,
                                  const SystemShape& shape) {
  require_shape(m, shape);
  subset.validate(shape);
  const auto offsets = partial_offsets(shape, subset.sites());
  const auto n = static_cast<Eigen::Index>(shape.dim());
  ComplexMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::size_t pj = offsets[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::size_t pi = offsets[static_cast<std::size_t>(i)];
      const auto src_row = static_cast<Eigen::Index>(static_cast<std::size_t>(i) - pi + pj);
      const auto src_col = static_cast<Eigen::Index>(static_cast<std::size_t>(j) - pj + pi);
      out(i, j) = m.entries()(src_row, src_col);
    }
  }
  return HermitianMatrix(HermitianMatrix::TrustedTag{}, std::move(out), shape);
}

HermitianMatrix partial_trace(const HermitianMatrix& m, const SiteSubset& keep, const SystemShape& shape) {
  require_shape(m, shape);
  keep.validate(shape);
  const auto kept = configuration_offsets(shape, keep.sites());
  const auto traced = configuration_offsets(shape, keep.complement(shape.sites()));
  const auto n = static_cast<Eigen::Index>(kept.size());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index b = 0; b < n; ++b) {
    for (Eigen::Index a = 0; a < n; ++a) {
      Complex sum = 0.0;
      for (std::size_t t : traced) {
        sum += m.entries()(static_cast<Eigen::Index>(kept[static_cast<std::size_t>(a)] + t),
                           static_cast<Eigen::Index>(kept[static_cast<std::size_t>(b)] + t));
      }
      out(a, b) = sum;
    }
  }
  SystemShape reduced(shape.spin(), static_cast<int>(keep.size()), shape.cap());
  return HermitianMatrix(HermitianMatrix::TrustedTag{}, std::move(out), reduced);
}

namespace {

double clamp_threshold(const Spectrum& spectrum, double q) {
  if (!(q > 0.0)) {
    throw Error(ErrorKind::UnsupportedQ, "entropic index q must be > 0, got " + std::to_string(q));
  }
  if (spectrum.dim() == 0) return 0.0;
  const double scale = std::max(std::abs(spectrum.min()), std::abs(spectrum.max()));
  const double threshold = -kNegativeDustTolerance * scale;
  if (spectrum.min() < threshold) {
    throw Error(ErrorKind::NotPositive, "eigenvalue " + std::to_string(spectrum.min()) +
                                            " below the -1e-10 ||M|| tolerance");
  }
  return threshold;
}

}  // namespace

double trace_power(const Spectrum& spectrum, double q) {
  clamp_threshold(spectrum, q);
  double sum = 0.0;
  for (double v : spectrum.values()) {
    if (v > 0.0) sum += std::pow(v, q);
  }
  return sum;
}

double trace_power(const HermitianMatrix& m, double q) { return trace_power(eigenvalues(m), q); }

double log_trace_power(const Spectrum& spectrum, double q) {
  clamp_threshold(spectrum, q);
  double peak = -std::numeric_limits<double>::infinity();
  for (double v : spectrum.values()) {
    if (v > 0.0) peak = std::max(peak, q * std::log(v));
  }
  if (!std::isfinite(peak)) return peak;
  double sum = 0.0;
  for (double v : spectrum.values()) {
    if (v > 0.0) sum += std::exp(q * std::log(v) - peak);
  }
  return peak + std::log(sum);
}

}  // namespace sepfrontier
