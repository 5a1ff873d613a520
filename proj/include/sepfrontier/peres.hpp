// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file peres.hpp
 * @brief Partial-transpose (Peres) bound on the separability frontier.
 *
 * For rho(x) = (1-x) I/D^N + x rho_tilde the partial transpose has spectrum
 * (1-x)/D^N + x E_i, where E_i is the spectrum of the partially transposed
 * rho_tilde. A negative minimum E_min certifies entanglement for every
 * x >= 1/(1 - D^N E_min).
 */

#pragma once

#include <optional>

#include "sepfrontier/linalg.hpp"
#include "sepfrontier/states.hpp"

namespace sepfrontier {

/// Witness threshold: the partial transpose counts as negative below -1e-12.
inline constexpr double kViolationTolerance = 1e-12;

struct PTBound {
  std::optional<double> x_c;  ///< empty: no violation for this subset
  SiteSubset subset;
  double witness = 0.0;  ///< minimal eigenvalue of the partially transposed rho_tilde

  [[nodiscard]] bool violated() const noexcept { return x_c.has_value(); }
};

/// x_c = 1 / (1 - D^N * witness).
double peres_threshold(double witness, const SystemShape& shape);

double pt_min_eigenvalue(const HermitianMatrix& rho_tilde, const SiteSubset& subset,
                         const SystemShape& shape);

PTBound peres_bound(const HermitianMatrix& rho_tilde, const SiteSubset& subset, const SystemShape& shape);

/// Lowest x_c over every transposed subset of size <= max_subset_size
/// (default floor(N/2)); complements are spectrum-equivalent and skipped.
/// Ties keep the lexicographically smallest subset.
PTBound best_peres_bound(const HermitianMatrix& rho_tilde, const SystemShape& shape,
                         std::optional<int> max_subset_size = std::nullopt);

/// 1 / (1 + D^N / 2), valid for c = -1 states with at least two non-zero sites.
double cc_peres_closed_form(const SystemShape& shape);

/// True when the c = -1 closed forms apply: the base has two or more
/// non-zero sites. With fewer the state factorizes.
bool cc_closed_form_applies(const CCStateSpec& spec);

/// (1 + D^N max_{l!=k}|a_l^* a_k| / sum|a_k|^2)^-1, transposing the last site.
/// No violation when fewer than two coefficients are non-zero.
PTBound werner_peres_closed_form(const WernerSpec& spec, const SystemShape& shape);

/// Spectrum of the last-site partial transpose of a Werner projector:
/// +/-|a_l^* a_k|/N for l<k, |a_k|^2/N for each k, zeros elsewhere.
Spectrum werner_pt_spectrum(const WernerSpec& spec, const SystemShape& shape);

/// {-1/2, 1/2, 1/2, 1/2} padded with zeros to D^N.
Spectrum cc_pt_spectrum(const SystemShape& shape);

}  // namespace sepfrontier
