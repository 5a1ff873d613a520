// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file entropy.hpp
 * @brief Conditional Tsallis-entropy bound on the separability frontier.
 *
 * A separable state has non-negative conditional entropy
 *   S_q(total | A) = [S_q(total) - S_q(A)] / [1 + (1-q) S_q(A)]
 * for every subsystem A, with S_q(rho) = (1 - Tr rho^q)/(q-1). Along the
 * family rho(x) the sign change happens where Tr rho(x)^q = Tr rho_A(x)^q.
 * Both sides are closed in x once the spectrum v_i of the reduced projector
 * Tr_{not A} rho_tilde is known:
 *   Tr rho(x)^q   = (D^N-1) ((1-x)/D^N)^q + ((1+(D^N-1)x)/D^N)^q
 *   Tr rho_A(x)^q = sum_i ((1-x) D^(N-n)/D^N + x v_i)^q,   n = |A|.
 * As q -> infinity only the largest terms survive, giving
 *   x_c = 1 / (1 + D^N (1 - v_max) / (D^(N-n) - 1)).
 *
 * Throughout, a subset argument names the retained (conditioning) subsystem A;
 * its complement is traced out.
 */

#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "sepfrontier/linalg.hpp"
#include "sepfrontier/states.hpp"

namespace sepfrontier {

inline constexpr double kInfiniteQ = std::numeric_limits<double>::infinity();

struct EntropicBound {
  std::optional<double> x_c;  ///< empty: no sign change of the conditional entropy
  double q = kInfiniteQ;
  SiteSubset subset;
  std::optional<double> v_bar;     ///< largest reduced eigenvalue, q = infinity only
  std::optional<double> residual;  ///< Tr rho^q - Tr rho_A^q at the root, finite q only

  [[nodiscard]] bool violated() const noexcept { return x_c.has_value(); }
};

enum class EntropicScope {
  AllSubsets,       ///< every proper non-empty retained subset
  LargestSubsets,   ///< retained subsets of size N-1 only
};

double tsallis_entropy(const Spectrum& spectrum, double q);
/// (1 - Tr M^q)/(q-1); von Neumann entropy when |q-1| < 1e-9.
double tsallis_entropy(const HermitianMatrix& m, double q);

/// Throws InvalidSubset unless `conditioned` is a proper subset.
double conditional_entropy(const HermitianMatrix& rho, const SiteSubset& conditioned, double q,
                           const SystemShape& shape);

/// Both sides of the purity balance along the family, for one retained subset.
class PurityBalance {
 public:
  PurityBalance(const HermitianMatrix& rho_tilde, const SiteSubset& retained, const SystemShape& shape);

  [[nodiscard]] const SiteSubset& retained() const noexcept { return retained_; }
  [[nodiscard]] const Spectrum& reduced_spectrum() const noexcept { return reduced_; }

  /// Tr rho(x)^q from the closed-form family spectrum.
  [[nodiscard]] double total_trace_power(double x, double q) const;
  /// Tr rho_A(x)^q from the reduced eigenvalues.
  [[nodiscard]] double reduced_trace_power(double x, double q) const;
  /// g(x) = Tr rho(x)^q - Tr rho_A(x)^q
  [[nodiscard]] double balance(double x, double q) const;
  /// S_q(A) - S_q(total), computed in log space; positive exactly where the
  /// conditional entropy is negative (entanglement detected).
  [[nodiscard]] double indicator(double x, double q) const;

  /// Root of the indicator on [0,1] (smallest, after a 1000-interval scan),
  /// bisected to |dx| <= tol.
  [[nodiscard]] EntropicBound solve(double q, double tol = 1e-12) const;
  /// q -> infinity limit.
  [[nodiscard]] EntropicBound solve_infinite() const;

 private:
  [[nodiscard]] std::vector<double> total_eigenvalues(double x) const;
  [[nodiscard]] std::vector<double> reduced_eigenvalues(double x) const;

  SiteSubset retained_;
  SystemShape shape_;
  Spectrum reduced_;
};

EntropicBound entropic_bound_at_q(const HermitianMatrix& rho_tilde, const SiteSubset& subset, double q,
                                  const SystemShape& shape, double tol = 1e-12);

EntropicBound entropic_bound_inf(const HermitianMatrix& rho_tilde, const SiteSubset& subset,
                                 const SystemShape& shape);

/// Lowest q -> infinity bound over retained subsets in `scope`.
EntropicBound best_entropic_bound(const HermitianMatrix& rho_tilde, const SystemShape& shape,
                                  EntropicScope scope = EntropicScope::AllSubsets);

/// Lowest bound over retained subsets for every q in `q_grid` (infinity allowed).
/// Reduced spectra are computed once per subset.
std::vector<EntropicBound> best_entropic_bounds(const HermitianMatrix& rho_tilde, const SystemShape& shape,
                                                const std::vector<double>& q_grid,
                                                EntropicScope scope = EntropicScope::AllSubsets);

/// 1 / (1 + D^N / (2 (D-1))), valid for c = -1 states with two or more non-zero sites.
double cc_entropic_closed_form(const SystemShape& shape);

/// (sum|a_k|^2 - max|a_k|^2) / ((D-1) max_{l!=k}|a_l^* a_k|); Undefined for
/// fewer than two non-zero coefficients.
double alpha(const WernerSpec& spec, const SystemShape& shape);

/// (1 + D^N max|a_l^* a_k| alpha / sum|a_k|^2)^-1 for the retained subset {1..N-1}.
EntropicBound werner_entropic_closed_form(const WernerSpec& spec, const SystemShape& shape);

}  // namespace sepfrontier
