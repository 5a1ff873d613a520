// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "sepfrontier/entropy.hpp"
#include "sepfrontier/error.hpp"
#include "sepfrontier/frontier.hpp"
#include "sepfrontier/peres.hpp"
#include "sepfrontier/report_io.hpp"

namespace sepfrontier {

namespace {

using Rng = std::mt19937_64;

// Tracks the worst deviation (relative to its tolerance) and the first
// instance that broke its tolerance.
class Tally {
 public:
  explicit Tally(double tolerance) : tolerance_(tolerance) {}

  void record(double deviation, const std::function<std::string()>& describe) {
    record(deviation, tolerance_, describe);
  }
  void record(double deviation, double tolerance, const std::function<std::string()>& describe) {
    const double ratio = deviation / tolerance;
    if (!(ratio <= worst_ratio_)) {  // NaN sticks
      worst_ratio_ = ratio;
      worst_ = deviation;
      worst_tolerance_ = tolerance;
    }
    if (!(deviation <= tolerance) && failing_.empty()) failing_ = describe();
    ++count_;
  }
  void fail(const std::string& what) {
    if (failing_.empty()) failing_ = what;
    worst_ratio_ = worst_ = std::numeric_limits<double>::infinity();
  }

  [[nodiscard]] CheckResult result(std::string name) const {
    std::ostringstream detail;
    detail << count_ << " cases, max deviation " << format_number(worst_) << " (tol "
           << format_number(worst_tolerance_) << ")";
    return CheckResult{std::move(name), failing_.empty(), detail.str(), failing_};
  }

 private:
  double tolerance_;
  double worst_ = 0.0;
  double worst_ratio_ = 0.0;
  double worst_tolerance_ = tolerance_;
  int count_ = 0;
  std::string failing_;
};

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  return {re, normal(rng)};
}

WernerSpec random_werner(Rng& rng, int d) {
  std::uniform_real_distribution<double> uniform;
  while (true) {
    std::vector<Complex> a(static_cast<std::size_t>(d));
    for (auto& v : a) v = uniform(rng) < 0.1 ? Complex{} : random_complex(rng);
    const auto nonzero = std::count_if(a.begin(), a.end(), [](Complex v) { return v != Complex{}; });
    if (nonzero >= 2) return WernerSpec(std::move(a));
  }
}

// Equal moduli, random phases and overall scale.
WernerSpec random_equal_modulus_werner(Rng& rng, int d) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::acos(-1.0));
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  const double r = scale(rng);
  std::vector<Complex> a(static_cast<std::size_t>(d));
  for (auto& v : a) v = std::polar(r, phase(rng));
  return WernerSpec(std::move(a));
}

HermitianMatrix random_density(Rng& rng, const SystemShape& shape) {
  const auto n = static_cast<Eigen::Index>(shape.dim());
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = random_complex(rng);
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return HermitianMatrix(std::move(rho), shape);
}

StateVector random_state(Rng& rng, std::size_t dim) {
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = random_complex(rng);
  return StateVector::normalized(std::move(v));
}

double max_spectrum_gap(const Spectrum& a, const Spectrum& b) {
  if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  return worst;
}

std::string shape_label(const SystemShape& shape) {
  return "S=" + shape.spin().to_string() + " N=" + std::to_string(shape.sites());
}

std::vector<SystemShape> cc_shapes() {
  std::vector<SystemShape> shapes;
  for (int n = 2; n <= 8; ++n) shapes.emplace_back(Spin(1), n);
  shapes.emplace_back(Spin(2), 2);
  shapes.emplace_back(Spin(2), 3);
  shapes.emplace_back(Spin(3), 2);
  return shapes;
}

CheckResult check_cc_pt_spectrum() {
  Tally tally(1e-10);
  const std::vector<std::pair<int, int>> grid{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}};
  for (auto [twice, n] : grid) {
    const SystemShape shape(Spin(twice), n);
    const auto state = cc_state({default_cc_base(shape), -1}, shape);
    const auto rho = pure_density(state, shape);
    const auto dense = eigenvalues(partial_transpose(rho, SiteSubset({n}), shape));
    tally.record(max_spectrum_gap(dense, cc_pt_spectrum(shape)), [&] { return shape_label(shape); });
  }
  return tally.result("cc_pt_spectrum_vs_dense");
}

CheckResult check_werner_pt_spectrum(Rng& rng) {
  Tally tally(1e-10);
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 3;
    const int n = 2 + (i / 3) % 2;
    const SystemShape shape(Spin(d - 1), n);
    const auto spec = random_werner(rng, d);
    const auto rho = pure_density(werner_state(spec, shape), shape);
    const auto dense = eigenvalues(partial_transpose(rho, SiteSubset({n}), shape));
    tally.record(max_spectrum_gap(dense, werner_pt_spectrum(spec, shape)),
                 [&] { return shape_label(shape) + " coeffs=" + spec.to_string(); });
  }
  return tally.result("werner_pt_spectrum_vs_dense");
}

CheckResult check_family_spectrum(Rng& rng) {
  Tally tally(1e-10);
  std::uniform_real_distribution<double> uniform;
  const std::vector<std::pair<int, int>> grid{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 2}, {2, 3}, {2, 4}};
  for (int i = 0; i < 20; ++i) {
    const auto [twice, n] = grid[static_cast<std::size_t>(i) % grid.size()];
    const SystemShape shape(Spin(twice), n);
    const double x = uniform(rng);
    const auto rho = pure_density(random_state(rng, shape.dim()), shape);
    const auto dense = eigenvalues(family_density(MixedFamilyPoint(rho, x, shape)));
    tally.record(max_spectrum_gap(dense, family_spectrum(x, shape)),
                 [&] { return shape_label(shape) + " x=" + format_number(x); });
  }
  return tally.result("family_spectrum_vs_dense");
}

CheckResult check_cc_bounds(double shift) {
  Tally tally(1e-10);
  for (const auto& shape : cc_shapes()) {
    const auto rho = pure_density(cc_state({default_cc_base(shape), -1}, shape), shape);
    const auto peres = best_peres_bound(rho, shape);
    const auto entropic = best_entropic_bound(rho, shape);
    if (!peres.x_c || !entropic.x_c) {
      tally.fail(shape_label(shape) + ": numeric search found no violation");
      continue;
    }
    const double closed_p = cc_peres_closed_form(shape) + shift;
    const double closed_s = cc_entropic_closed_form(shape) + shift;
    tally.record(std::abs(*peres.x_c - closed_p), [&] {
      return shape_label(shape) + " peres numeric=" + format_number(*peres.x_c) +
             " closed=" + format_number(closed_p);
    });
    tally.record(std::abs(*entropic.x_c - closed_s), [&] {
      return shape_label(shape) + " entropic numeric=" + format_number(*entropic.x_c) +
             " closed=" + format_number(closed_s);
    });
  }
  return tally.result("cc_closed_forms_vs_numeric");
}

CheckResult check_werner_bounds(Rng& rng, double shift) {
  Tally tally(1e-10);
  auto run = [&](const WernerSpec& spec, const SystemShape& shape) {
    const auto rho = pure_density(werner_state(spec, shape), shape);
    const auto peres = best_peres_bound(rho, shape);
    const auto entropic = best_entropic_bound(rho, shape);
    const auto closed_p = werner_peres_closed_form(spec, shape);
    const auto closed_s = werner_entropic_closed_form(spec, shape);
    const auto label = [&] { return shape_label(shape) + " coeffs=" + spec.to_string(); };
    if (!peres.x_c || !entropic.x_c) {
      tally.fail(label() + ": numeric search found no violation");
      return;
    }
    tally.record(std::abs(*peres.x_c - (*closed_p.x_c + shift)), label);
    tally.record(std::abs(*entropic.x_c - (*closed_s.x_c + shift)), label);
  };
  for (int d = 2; d <= 4; ++d) {
    for (int n = 2; n <= 3; ++n) {
      const SystemShape shape(Spin(d - 1), n);
      run(WernerSpec::uniform(shape), shape);
    }
  }
  for (int i = 0; i < 30; ++i) {
    const int d = 2 + i % 3;
    const SystemShape shape(Spin(d - 1), 2 + (i / 3) % 2);
    run(random_werner(rng, d), shape);
  }
  return tally.result("werner_closed_forms_vs_numeric");
}

CheckResult check_alpha(Rng& rng) {
  Tally tally(1e-12);
  for (int i = 0; i < 1000; ++i) {
    const int d = 2 + i % 4;
    const SystemShape shape(Spin(d - 1), 2);
    const auto spec = random_werner(rng, d);
    const double a = alpha(spec, shape);
    const double xp = *werner_peres_closed_form(spec, shape).x_c;
    const double xs = *werner_entropic_closed_form(spec, shape).x_c;
    const auto label = [&] { return "D=" + std::to_string(d) + " coeffs=" + spec.to_string(); };
    tally.record(std::max(0.0, a - 1.0), label);
    tally.record(std::max(0.0, xp - xs), label);
  }
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 4;
    const SystemShape shape(Spin(d - 1), 2);
    const auto spec = random_equal_modulus_werner(rng, d);
    tally.record(std::abs(alpha(spec, shape) - 1.0) > 1e-9 ? 1.0 : 0.0,
                 [&] { return "equal moduli D=" + std::to_string(d) + " coeffs=" + spec.to_string(); });
  }
  return tally.result("alpha_battery");
}

CheckResult check_finite_q() {
  Tally tally(1e-10);
  const SystemShape shape(Spin(1), 2);
  const auto rho = pure_density(cc_state({SpinConfig({1, -1}), -1}, shape), shape);
  const SiteSubset subset({1});
  const PurityBalance balance(rho, subset, shape);

  const auto at_two = balance.solve(2.0);
  tally.record(at_two.x_c ? std::abs(*at_two.x_c - 1.0 / std::sqrt(3.0)) : 1.0,
               [] { return "singlet q=2 root"; });
  tally.record(at_two.residual ? std::abs(*at_two.residual) : 1.0, [] { return "singlet q=2 residual"; });

  const double floor = *balance.solve_infinite().x_c;
  double previous = 1.0;
  for (double q : {0.5, 1.0, 1.5, 2.0, 5.0, 10.0, 50.0, 200.0, 1000.0}) {
    const auto bound = balance.solve(q);
    if (!bound.x_c) {
      tally.fail("singlet q=" + format_number(q) + ": no root");
      continue;
    }
    const double x = *bound.x_c;
    tally.record(std::max({0.0, x - previous, floor - x}),
                 [&] { return "singlet q=" + format_number(q) + " x_c=" + format_number(x); });
    previous = x;
    if (q == 1000.0) {
      tally.record(std::abs(x - 1.0 / 3.0) <= 1e-2 ? 0.0 : 1.0,
                   [&] { return "singlet q=1000 x_c=" + format_number(x) + " not within 1e-2 of 1/3"; });
    }
  }
  return tally.result("finite_q_singlet");
}

CheckResult check_structural(Rng& rng) {
  Tally tally(1e-12);
  const std::vector<std::pair<int, int>> grid{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                                              {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (auto [twice, n] : grid) {
    const SystemShape shape(Spin(twice), n);
    const auto rho = random_density(rng, shape);
    const auto label = [&] { return shape_label(shape); };
    for (const auto& subset : enumerate_subsets(n, n)) {
      const auto pt = partial_transpose(rho, subset, shape);
      const auto back = partial_transpose(pt, subset, shape);
      tally.record((back.entries().array() != rho.entries().array()).any() ? 1.0 : 0.0, label);
      tally.record(std::abs(pt.trace() - rho.trace()), label);
      tally.record((pt.entries() - pt.entries().adjoint()).cwiseAbs().maxCoeff(), label);
      if (subset.is_proper(shape)) {
        const SiteSubset complement(subset.complement(n));
        const auto a = eigenvalues(pt);
        const auto b = eigenvalues(partial_transpose(rho, complement, shape));
        tally.record(max_spectrum_gap(a, b), 1e-10, label);
        tally.record(std::abs(partial_trace(rho, subset, shape).trace() - rho.trace()), label);
      }
    }
    const auto spectrum = eigenvalues(rho);
    const double scale = rho.entries().cwiseAbs().maxCoeff();
    tally.record(std::abs(spectrum.sum() - rho.trace()), 1e-9 * static_cast<double>(shape.dim()) * scale, label);
    double squares = 0.0;
    for (double v : spectrum.values()) squares += v * v;
    tally.record(std::abs(squares - rho.entries().squaredNorm()) / rho.entries().squaredNorm(), 1e-8, label);
  }
  return tally.result("structural_invariants");
}

CheckResult check_environment_ratio() {
  Tally tally(1e-12);
  for (const auto& shape : cc_shapes()) {
    const double x = cc_peres_closed_form(shape);
    const auto spectrum = family_spectrum(x, shape);
    tally.record(std::abs(spectrum.max() / spectrum.min() - 3.0), [&] { return shape_label(shape); });
    tally.record(std::abs(1.0 / environment_ratio(x, shape) - 3.0), [&] { return shape_label(shape); });
  }
  const SystemShape shape(Spin(1), 2);
  const auto report = compare(StateInput::from_werner(WernerSpec::uniform(shape), shape), shape);
  tally.record(report.r_c ? std::abs(*report.r_c - 1.0 / 3.0) : 1.0, [] { return "werner uniform r_c"; });
  tally.record(report.r_c_paper ? std::abs(*report.r_c_paper - 1.0) : 1.0,
               [] { return "werner uniform r_c_paper"; });
  return tally.result("environment_ratio");
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options, std::ostream& log) {
  Rng rng(options.seed);
  const double shift = options.inject_perturbation ? -1e-6 : 0.0;

  const std::vector<std::pair<std::string, std::function<CheckResult()>>> checks{
      {"cc_pt_spectrum_vs_dense", [] { return check_cc_pt_spectrum(); }},
      {"werner_pt_spectrum_vs_dense", [&] { return check_werner_pt_spectrum(rng); }},
      {"family_spectrum_vs_dense", [&] { return check_family_spectrum(rng); }},
      {"cc_closed_forms_vs_numeric", [&] { return check_cc_bounds(shift); }},
      {"werner_closed_forms_vs_numeric", [&] { return check_werner_bounds(rng, shift); }},
      {"alpha_battery", [&] { return check_alpha(rng); }},
      {"finite_q_singlet", [] { return check_finite_q(); }},
      {"structural_invariants", [&] { return check_structural(rng); }},
      {"environment_ratio", [] { return check_environment_ratio(); }},
  };

  std::vector<CheckResult> results;
  for (const auto& [name, check] : checks) {
    CheckResult result;
    try {
      result = check();
    } catch (const Error& e) {
      result = CheckResult{name, false, std::string("aborted: ") + e.what(), e.what()};
    }
    log << (result.passed ? "PASS " : "FAIL ") << result.name << ": " << result.detail << '\n';
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace sepfrontier
