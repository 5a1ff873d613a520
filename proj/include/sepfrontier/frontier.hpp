// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file frontier.hpp
 * @brief Side-by-side Peres and entropic bounds, coincidence flags, and sweeps.
 *
 * When both criteria give the same x_c the report raises `exact_conjecture`.
 * That is a conjecture label only; neither criterion is sufficient for
 * separability in general.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepfrontier/entropy.hpp"
#include "sepfrontier/peres.hpp"
#include "sepfrontier/states.hpp"

namespace sepfrontier {

/// |x_c^P - x_c^S| at or below this counts as coincident.
inline constexpr double kCoincidenceTolerance = 1e-9;

enum class FamilyKind { CC, Werner, Custom };

std::string to_string(FamilyKind kind);

/// The entangled pure state of a report together with how it was specified.
struct StateInput {
  FamilyKind kind;
  std::optional<CCStateSpec> cc;
  std::optional<WernerSpec> werner;
  StateVector vector;

  static StateInput from_cc(CCStateSpec spec, const SystemShape& shape);
  static StateInput from_werner(WernerSpec spec, const SystemShape& shape);
  static StateInput from_custom(StateVector vector);

  /// "cc base=(+1/2,-1/2) c=-1", "werner coeffs=1,1", "custom".
  [[nodiscard]] std::string describe() const;
};

struct FrontierReport {
  StateInput family;
  SystemShape shape;
  PTBound x_c_peres;
  EntropicBound x_c_entropy;  ///< q -> infinity, best retained subset
  std::vector<EntropicBound> x_c_q_samples;
  bool coincide = false;
  bool exact_conjecture = false;
  std::optional<double> r_c;               ///< at the tighter of the two bounds
  std::optional<double> r_c_paper;         ///< (sum|a|^2 - max|a_l a_k|)/max|a_l a_k|, Werner only
  std::optional<double> eigenvalue_ratio;  ///< dominant / degenerate eigenvalue of rho(x_c) = 1/r_c
};

/// q values used when none are given: 1, 2, 5, 20, 1000, infinity.
std::vector<double> default_q_grid();

struct CompareOptions {
  std::vector<double> q_grid = default_q_grid();
  std::optional<int> max_subset_size;  ///< Peres transposed-subset size limit, default floor(N/2)
  EntropicScope scope = EntropicScope::AllSubsets;
};

FrontierReport compare(const StateInput& state, const SystemShape& shape,
                       const CompareOptions& options = CompareOptions{});

/// r_c = (1 - x_c) / (1 + (D^N - 1) x_c): degenerate over dominant eigenvalue
/// of rho(x_c). Throws InvalidBound unless 0 < x_c < 1.
double environment_ratio(double x_c, const SystemShape& shape);

/// The Werner-family closed form (sum|a_k|^2 - M)/M with M = max_{l!=k}|a_l^* a_k|.
/// It disagrees with environment_ratio at the Peres bound; kept as a diagnostic.
std::optional<double> werner_ratio_closed_form(const WernerSpec& spec);

/// Grid of family instances; expanded in the nesting order
/// family > spin > sites > (coefficient set | base), rows ordered by q inside a report.
struct SweepPlan {
  std::vector<FamilyKind> families;
  std::vector<Spin> spins;
  std::vector<int> sites;
  /// Werner coefficient sets; nullopt stands for uniform coefficients.
  std::vector<std::optional<WernerSpec>> coefficient_sets{std::nullopt};
  /// CC base configurations; nullopt stands for the default (+S, -S, ..., -S).
  std::vector<std::optional<SpinConfig>> bases{std::nullopt};
  int c = -1;
  std::vector<double> q_grid = default_q_grid();
  std::size_t cap = SystemShape::kDefaultCap;
  std::optional<int> max_subset_size;
  EntropicScope scope = EntropicScope::AllSubsets;
};

/// Families cc and werner, spins 1/2 and 1, N = 2..4, uniform coefficients.
SweepPlan default_sweep_plan();

/// Default CC base (+S, -S, ..., -S).
SpinConfig default_cc_base(const SystemShape& shape);

std::vector<FrontierReport> sweep(const SweepPlan& plan);

}  // namespace sepfrontier
