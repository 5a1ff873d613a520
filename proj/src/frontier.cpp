// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/frontier.hpp"

#include <cmath>

#include "sepfrontier/error.hpp"

namespace sepfrontier {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::CC: return "cc";
    case FamilyKind::Werner: return "werner";
    case FamilyKind::Custom: return "custom";
  }
  return "unknown";
}

StateInput StateInput::from_cc(CCStateSpec spec, const SystemShape& shape) {
  StateVector v = cc_state(spec, shape);
  return StateInput{FamilyKind::CC, std::move(spec), std::nullopt, std::move(v)};
}

StateInput StateInput::from_werner(WernerSpec spec, const SystemShape& shape) {
  StateVector v = werner_state(spec, shape);
  return StateInput{FamilyKind::Werner, std::nullopt, std::move(spec), std::move(v)};
}

StateInput StateInput::from_custom(StateVector vector) {
  return StateInput{FamilyKind::Custom, std::nullopt, std::nullopt, std::move(vector)};
}

std::string StateInput::describe() const {
  switch (kind) {
    case FamilyKind::CC:
      return "cc base=" + cc->base.to_string() + " c=" + (cc->c < 0 ? "-1" : "+1");
    case FamilyKind::Werner:
      return "werner coeffs=" + werner->to_string();
    case FamilyKind::Custom:
      return "custom";
  }
  return "unknown";
}

std::vector<double> default_q_grid() { return {1.0, 2.0, 5.0, 20.0, 1000.0, kInfiniteQ}; }

double environment_ratio(double x_c, const SystemShape& shape) {
  if (!(x_c > 0.0 && x_c < 1.0)) {
    throw Error(ErrorKind::InvalidBound, "x_c must lie strictly inside (0,1), got " + std::to_string(x_c));
  }
  const auto dim = static_cast<double>(shape.dim());
  return (1.0 - x_c) / (1.0 + (dim - 1.0) * x_c);
}

std::optional<double> werner_ratio_closed_form(const WernerSpec& spec) {
  const double cross = spec.max_cross_product();
  if (!(cross > 0.0)) return std::nullopt;
  return (spec.norm_sq() - cross) / cross;
}

FrontierReport compare(const StateInput& state, const SystemShape& shape, const CompareOptions& options) {
  if (state.vector.dim() != shape.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "state has " + std::to_string(state.vector.dim()) +
                                              " amplitudes but D^N = " + std::to_string(shape.dim()));
  }
  const HermitianMatrix rho_tilde = pure_density(state.vector, shape);

  PTBound peres = best_peres_bound(rho_tilde, shape, options.max_subset_size);

  // One pass over the retained subsets serves both the q grid and q = infinity.
  std::vector<double> qs = options.q_grid;
  qs.push_back(kInfiniteQ);
  std::vector<EntropicBound> bounds = best_entropic_bounds(rho_tilde, shape, qs, options.scope);
  EntropicBound entropic = std::move(bounds.back());
  bounds.pop_back();

  FrontierReport report{state, shape, std::move(peres), std::move(entropic), std::move(bounds), false, false,
                        std::nullopt, std::nullopt, std::nullopt};
  const auto& xp = report.x_c_peres.x_c;
  const auto& xs = report.x_c_entropy.x_c;
  report.coincide = xp && xs && std::abs(*xp - *xs) <= kCoincidenceTolerance;
  report.exact_conjecture = report.coincide;

  std::optional<double> tighter;
  if (xp && xs) {
    tighter = std::min(*xp, *xs);
  } else if (xp) {
    tighter = xp;
  } else if (xs) {
    tighter = xs;
  }
  if (tighter && *tighter > 0.0 && *tighter < 1.0) {
    report.r_c = environment_ratio(*tighter, shape);
    report.eigenvalue_ratio = 1.0 / *report.r_c;
  }
  if (state.kind == FamilyKind::Werner) report.r_c_paper = werner_ratio_closed_form(*state.werner);
  return report;
}

SweepPlan default_sweep_plan() {
  SweepPlan plan;
  plan.families = {FamilyKind::CC, FamilyKind::Werner};
  plan.spins = {Spin(1), Spin(2)};
  plan.sites = {2, 3, 4};
  return plan;
}

SpinConfig default_cc_base(const SystemShape& shape) {
  std::vector<int> values(static_cast<std::size_t>(shape.sites()), -shape.spin().twice());
  values.front() = shape.spin().twice();
  return SpinConfig(std::move(values));
}

std::vector<FrontierReport> sweep(const SweepPlan& plan) {
  CompareOptions options;
  options.q_grid = plan.q_grid;
  options.max_subset_size = plan.max_subset_size;
  options.scope = plan.scope;

  std::vector<FrontierReport> rows;
  for (FamilyKind family : plan.families) {
    for (const Spin& spin : plan.spins) {
      for (int n : plan.sites) {
        const SystemShape shape(spin, n, plan.cap);
        if (family == FamilyKind::CC) {
          for (const auto& base : plan.bases) {
            CCStateSpec spec{base.value_or(default_cc_base(shape)), plan.c};
            rows.push_back(compare(StateInput::from_cc(std::move(spec), shape), shape, options));
          }
        } else if (family == FamilyKind::Werner) {
          for (const auto& coefficients : plan.coefficient_sets) {
            WernerSpec spec = coefficients.value_or(WernerSpec::uniform(shape));
            rows.push_back(compare(StateInput::from_werner(std::move(spec), shape), shape, options));
          }
        } else {
          throw Error(ErrorKind::Parse, "custom states cannot be swept");
        }
      }
    }
  }
  return rows;
}

}  // namespace sepfrontier
