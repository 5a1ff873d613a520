// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "sepfrontier/error.hpp"

namespace sepfrontier {

namespace {

constexpr double kVonNeumannWindow = 1e-9;
constexpr int kScanIntervals = 1000;
constexpr int kMaxBisections = 200;
constexpr double kPureCutTolerance = 1e-12;
constexpr double kTieTolerance = 1e-14;

bool is_von_neumann(double q) { return std::abs(q - 1.0) < kVonNeumannWindow; }

void require_q(double q) {
  if (!(q > 0.0)) {
    throw Error(ErrorKind::UnsupportedQ, "entropic index q must be > 0, got " + std::to_string(q));
  }
}

void require_proper(const SiteSubset& subset, const SystemShape& shape) {
  subset.validate(shape);
  if (!subset.is_proper(shape)) {
    throw Error(ErrorKind::InvalidSubset, "retained subset " + subset.to_string() +
                                              " must leave at least one site to trace out");
  }
}

// (multiplicity, eigenvalue) pairs; eigenvalues <= 0 contribute nothing.
using WeightedSpectrum = std::vector<std::pair<double, double>>;

double log_power_sum(const WeightedSpectrum& terms, double q) {
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& [count, value] : terms) {
    if (value > 0.0 && count > 0.0) peak = std::max(peak, std::log(count) + q * std::log(value));
  }
  if (!std::isfinite(peak)) return peak;
  double sum = 0.0;
  for (const auto& [count, value] : terms) {
    if (value > 0.0 && count > 0.0) sum += std::exp(std::log(count) + q * std::log(value) - peak);
  }
  return peak + std::log(sum);
}

double power_sum(const WeightedSpectrum& terms, double q) {
  double sum = 0.0;
  for (const auto& [count, value] : terms) {
    if (value > 0.0) sum += count * std::pow(value, q);
  }
  return sum;
}

double shannon(const WeightedSpectrum& terms) {
  double sum = 0.0;
  for (const auto& [count, value] : terms) {
    if (value > 0.0) sum -= count * value * std::log(value);
  }
  return sum;
}

WeightedSpectrum unit_weights(const std::vector<double>& values) {
  WeightedSpectrum out;
  out.reserve(values.size());
  for (double v : values) out.emplace_back(1.0, v);
  return out;
}

bool better(const EntropicBound& candidate, const std::optional<EntropicBound>& best) {
  if (!best) return true;
  if (candidate.x_c && !best->x_c) return true;
  if (!candidate.x_c) return false;
  if (*candidate.x_c < *best->x_c - kTieTolerance) return true;
  return *candidate.x_c <= *best->x_c + kTieTolerance && candidate.subset < best->subset;
}

std::vector<SiteSubset> retained_subsets(const SystemShape& shape, EntropicScope scope) {
  if (shape.sites() < 2) {
    throw Error(ErrorKind::InvalidSubset, "conditional entropies need at least two sites");
  }
  auto all = enumerate_subsets(shape.sites(), shape.sites() - 1);
  if (scope == EntropicScope::AllSubsets) return all;
  std::vector<SiteSubset> largest;
  for (auto& s : all) {
    if (static_cast<int>(s.size()) == shape.sites() - 1) largest.push_back(std::move(s));
  }
  return largest;
}

}  // namespace

double tsallis_entropy(const Spectrum& spectrum, double q) {
  require_q(q);
  if (is_von_neumann(q)) {
    trace_power(spectrum, 1.0);  // positivity check
    return shannon(unit_weights(spectrum.values()));
  }
  return (1.0 - trace_power(spectrum, q)) / (q - 1.0);
}

double tsallis_entropy(const HermitianMatrix& m, double q) {
  require_q(q);
  return tsallis_entropy(eigenvalues(m), q);
}

double conditional_entropy(const HermitianMatrix& rho, const SiteSubset& conditioned, double q,
                           const SystemShape& shape) {
  require_q(q);
  require_proper(conditioned, shape);
  const double total = tsallis_entropy(rho, q);
  const double part = tsallis_entropy(partial_trace(rho, conditioned, shape), q);
  const double denominator = is_von_neumann(q) ? 1.0 : 1.0 + (1.0 - q) * part;
  if (!(denominator > 0.0)) {
    throw Error(ErrorKind::NumericalContract,
                "conditional entropy denominator Tr rho_A^q = " + std::to_string(denominator) +
                    " is not positive");
  }
  return (total - part) / denominator;
}

PurityBalance::PurityBalance(const HermitianMatrix& rho_tilde, const SiteSubset& retained,
                             const SystemShape& shape)
    : retained_(retained), shape_(shape) {
  require_proper(retained, shape);
  reduced_ = eigenvalues(partial_trace(rho_tilde, retained, shape));
}

std::vector<double> PurityBalance::total_eigenvalues(double x) const {
  const auto dim = static_cast<double>(shape_.dim());
  return {(1.0 - x) / dim, (1.0 + (dim - 1.0) * x) / dim};
}

std::vector<double> PurityBalance::reduced_eigenvalues(double x) const {
  const double floor = (1.0 - x) / static_cast<double>(reduced_.dim());
  std::vector<double> out;
  out.reserve(reduced_.dim());
  for (double v : reduced_.values()) out.push_back(std::max(0.0, floor + x * v));
  return out;
}

namespace {

WeightedSpectrum total_terms(const std::vector<double>& pair, std::size_t dim) {
  return {{static_cast<double>(dim) - 1.0, pair[0]}, {1.0, pair[1]}};
}

}  // namespace

double PurityBalance::total_trace_power(double x, double q) const {
  require_q(q);
  return power_sum(total_terms(total_eigenvalues(x), shape_.dim()), q);
}

double PurityBalance::reduced_trace_power(double x, double q) const {
  require_q(q);
  return power_sum(unit_weights(reduced_eigenvalues(x)), q);
}

double PurityBalance::balance(double x, double q) const {
  return total_trace_power(x, q) - reduced_trace_power(x, q);
}

double PurityBalance::indicator(double x, double q) const {
  require_q(q);
  const auto total = total_terms(total_eigenvalues(x), shape_.dim());
  const auto part = unit_weights(reduced_eigenvalues(x));
  if (is_von_neumann(q)) return shannon(part) - shannon(total);
  return (log_power_sum(total, q) - log_power_sum(part, q)) / (q - 1.0);
}

EntropicBound PurityBalance::solve(double q, double tol) const {
  if (std::isinf(q) && q > 0.0) return solve_infinite();
  require_q(q);
  EntropicBound bound{std::nullopt, q, retained_, std::nullopt, std::nullopt};
  // A pure reduced projector means rho_tilde factorizes across the cut and
  // every rho(x) is separable; round-off must not manufacture a root near x = 1.
  if (reduced_.max() >= 1.0 - kPureCutTolerance) return bound;

  double lo = 0.0;
  double hi = -1.0;
  for (int i = 1; i <= kScanIntervals; ++i) {
    const double x = static_cast<double>(i) / kScanIntervals;
    if (indicator(x, q) > 0.0) {
      lo = static_cast<double>(i - 1) / kScanIntervals;
      hi = x;
      break;
    }
  }
  if (hi < 0.0) return bound;

  for (int iter = 0; iter < kMaxBisections && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (indicator(mid, q) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  bound.x_c = root;
  bound.residual = is_von_neumann(q) ? indicator(root, q) : balance(root, q);
  return bound;
}

EntropicBound PurityBalance::solve_infinite() const {
  const double v_bar = reduced_.max();
  EntropicBound bound{std::nullopt, kInfiniteQ, retained_, v_bar, std::nullopt};
  if (v_bar >= 1.0 - kPureCutTolerance) return bound;
  const auto dim = static_cast<double>(shape_.dim());
  const auto traced_dim = dim / static_cast<double>(reduced_.dim());
  bound.x_c = 1.0 / (1.0 + dim / (traced_dim - 1.0) * (1.0 - v_bar));
  return bound;
}

EntropicBound entropic_bound_at_q(const HermitianMatrix& rho_tilde, const SiteSubset& subset, double q,
                                  const SystemShape& shape, double tol) {
  if (!(q > 0.0)) require_q(q);
  return PurityBalance(rho_tilde, subset, shape).solve(q, tol);
}

EntropicBound entropic_bound_inf(const HermitianMatrix& rho_tilde, const SiteSubset& subset,
                                 const SystemShape& shape) {
  return PurityBalance(rho_tilde, subset, shape).solve_infinite();
}

EntropicBound best_entropic_bound(const HermitianMatrix& rho_tilde, const SystemShape& shape,
                                  EntropicScope scope) {
  return best_entropic_bounds(rho_tilde, shape, {kInfiniteQ}, scope).front();
}

std::vector<EntropicBound> best_entropic_bounds(const HermitianMatrix& rho_tilde, const SystemShape& shape,
                                                const std::vector<double>& q_grid, EntropicScope scope) {
  for (double q : q_grid) {
    if (!(q > 0.0)) require_q(q);
  }
  std::vector<PurityBalance> balances;
  for (const auto& subset : retained_subsets(shape, scope)) balances.emplace_back(rho_tilde, subset, shape);

  std::vector<EntropicBound> out;
  out.reserve(q_grid.size());
  for (double q : q_grid) {
    std::optional<EntropicBound> best;
    for (const auto& balance : balances) {
      EntropicBound candidate = balance.solve(q);
      if (better(candidate, best)) best = std::move(candidate);
    }
    out.push_back(std::move(*best));
  }
  return out;
}

double cc_entropic_closed_form(const SystemShape& shape) {
  const auto dim = static_cast<double>(shape.dim());
  return 1.0 / (1.0 + dim / 2.0 / static_cast<double>(shape.local_dim() - 1));
}

double alpha(const WernerSpec& spec, const SystemShape& shape) {
  spec.validate(shape);
  if (spec.nonzero_count() < 2) {
    throw Error(ErrorKind::Undefined, "alpha needs at least two non-zero coefficients");
  }
  return (spec.norm_sq() - spec.max_weight()) /
         (static_cast<double>(shape.local_dim() - 1) * spec.max_cross_product());
}

EntropicBound werner_entropic_closed_form(const WernerSpec& spec, const SystemShape& shape) {
  if (shape.sites() < 2) {
    throw Error(ErrorKind::InvalidSubset, "conditional entropies need at least two sites");
  }
  const double a = alpha(spec, shape);
  std::vector<int> retained;
  for (int s = 1; s < shape.sites(); ++s) retained.push_back(s);
  EntropicBound bound{std::nullopt, kInfiniteQ, SiteSubset(std::move(retained)),
                      spec.max_weight() / spec.norm_sq(), std::nullopt};
  bound.x_c = 1.0 / (1.0 + static_cast<double>(shape.dim()) * spec.max_cross_product() * a / spec.norm_sq());
  return bound;
}

}  // namespace sepfrontier
