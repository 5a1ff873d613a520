// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/peres.hpp"

#include <algorithm>
#include <cmath>

#include "sepfrontier/error.hpp"

namespace sepfrontier {

namespace {

// Witnesses closer than this are treated as equal; the lexicographically
// smaller subset wins.
constexpr double kTieTolerance = 1e-14;

void require_two_sites(const SystemShape& shape) {
  if (shape.sites() < 2) {
    throw Error(ErrorKind::InvalidSubset, "a bipartition needs at least two sites");
  }
}

}  // namespace

double peres_threshold(double witness, const SystemShape& shape) {
  return 1.0 / (1.0 - static_cast<double>(shape.dim()) * witness);
}

double pt_min_eigenvalue(const HermitianMatrix& rho_tilde, const SiteSubset& subset,
                         const SystemShape& shape) {
  return eigenvalues(partial_transpose(rho_tilde, subset, shape)).min();
}

PTBound peres_bound(const HermitianMatrix& rho_tilde, const SiteSubset& subset, const SystemShape& shape) {
  const double witness = pt_min_eigenvalue(rho_tilde, subset, shape);
  PTBound bound{std::nullopt, subset, witness};
  if (witness < -kViolationTolerance) bound.x_c = peres_threshold(witness, shape);
  return bound;
}

PTBound best_peres_bound(const HermitianMatrix& rho_tilde, const SystemShape& shape,
                         std::optional<int> max_subset_size) {
  require_two_sites(shape);
  const int limit = max_subset_size.value_or(shape.sites() / 2);
  if (limit < 1 || limit > shape.sites() - 1) {
    throw Error(ErrorKind::InvalidSubset, "max subset size must lie in 1.." +
                                              std::to_string(shape.sites() - 1) + ", got " +
                                              std::to_string(limit));
  }
  std::optional<PTBound> best;
  for (const auto& subset : enumerate_subsets_modulo_complement(shape.sites(), limit)) {
    PTBound candidate = peres_bound(rho_tilde, subset, shape);
    if (!best || candidate.witness < best->witness - kTieTolerance ||
        (candidate.witness <= best->witness + kTieTolerance && candidate.subset < best->subset)) {
      best = std::move(candidate);
    }
  }
  return *best;
}

double cc_peres_closed_form(const SystemShape& shape) {
  return 1.0 / (1.0 + static_cast<double>(shape.dim()) / 2.0);
}

bool cc_closed_form_applies(const CCStateSpec& spec) {
  const auto& v = spec.base.twice_values();
  return spec.c == -1 && std::count_if(v.begin(), v.end(), [](int s) { return s != 0; }) >= 2;
}

PTBound werner_peres_closed_form(const WernerSpec& spec, const SystemShape& shape) {
  spec.validate(shape);
  require_two_sites(shape);
  const double cross = spec.max_cross_product();
  PTBound bound{std::nullopt, SiteSubset({shape.sites()}), -cross / spec.norm_sq()};
  if (spec.nonzero_count() >= 2) {
    bound.x_c = 1.0 / (1.0 + static_cast<double>(shape.dim()) * cross / spec.norm_sq());
  }
  return bound;
}

Spectrum werner_pt_spectrum(const WernerSpec& spec, const SystemShape& shape) {
  spec.validate(shape);
  require_two_sites(shape);
  const auto& a = spec.coefficients();
  const double norm = spec.norm_sq();
  std::vector<double> values;
  values.reserve(shape.dim());
  for (std::size_t k = 0; k < a.size(); ++k) {
    values.push_back(std::norm(a[k]) / norm);
    for (std::size_t l = k + 1; l < a.size(); ++l) {
      const double m = std::abs(a[l]) * std::abs(a[k]) / norm;
      values.push_back(m);
      values.push_back(-m);
    }
  }
  values.resize(shape.dim(), 0.0);
  return Spectrum(std::move(values));
}

Spectrum cc_pt_spectrum(const SystemShape& shape) {
  require_two_sites(shape);
  std::vector<double> values(shape.dim(), 0.0);
  values[0] = -0.5;
  values[1] = values[2] = values[3] = 0.5;
  return Spectrum(std::move(values));
}

}  // namespace sepfrontier
