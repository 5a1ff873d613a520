// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "sepfrontier/error.hpp"
#include "sepfrontier/frontier.hpp"

using namespace sepfrontier;

TEST_CASE("singlet report") {
  const SystemShape shape(Spin(1), 2);
  const FrontierReport r = compare(StateInput::from_cc({SpinConfig::parse("+1/2,-1/2"), -1}, shape), shape);
  CHECK(*r.x_c_peres.x_c == doctest::Approx(1.0 / 3.0));
  CHECK(*r.x_c_entropy.x_c == doctest::Approx(1.0 / 3.0));
  CHECK(r.coincide);
  CHECK(r.exact_conjecture);
  CHECK(*r.r_c == doctest::Approx(1.0 / 3.0));
  CHECK(*r.eigenvalue_ratio == doctest::Approx(3.0));
  CHECK_FALSE(r.r_c_paper.has_value());
  REQUIRE(r.x_c_q_samples.size() == default_q_grid().size());
  CHECK(std::isinf(r.x_c_q_samples.back().q));
}

TEST_CASE("spin-1 cc states do not coincide") {
  const SystemShape shape(Spin(2), 2);
  const FrontierReport r = compare(StateInput::from_cc({SpinConfig::parse("+1,-1"), -1}, shape), shape);
  CHECK(*r.x_c_peres.x_c < *r.x_c_entropy.x_c);
  CHECK_FALSE(r.coincide);
  CHECK(*r.eigenvalue_ratio == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("Werner ratio discrepancy") {
  const SystemShape shape(Spin(1), 2);
  const FrontierReport r = compare(StateInput::from_werner(WernerSpec::parse("1,1"), shape), shape);
  CHECK(*r.r_c == doctest::Approx(1.0 / 3.0));
  CHECK(*r.r_c_paper == doctest::Approx(1.0));
}

TEST_CASE("environment ratio") {
  const SystemShape shape(Spin(1), 5);
  CHECK(environment_ratio(1.0 / 17.0, shape) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(environment_ratio(0.0, shape), Error);
  CHECK_THROWS_AS(environment_ratio(1.0, shape), Error);
}

TEST_CASE("default sweep") {
  const auto rows = sweep(default_sweep_plan());
  CHECK(rows.size() == 12);
  CHECK(rows.front().family.kind == FamilyKind::CC);
  CHECK(rows.back().family.kind == FamilyKind::Werner);
  for (const auto& r : rows) CHECK(r.x_c_peres.violated());
}

TEST_CASE("CC sweep over N") {
  SweepPlan plan;
  plan.families = {FamilyKind::CC};
  plan.spins = {Spin(1)};
  plan.sites = {2, 3, 4, 5, 6};
  plan.q_grid = {};
  const auto rows = sweep(plan);
  const std::vector<double> expected{1.0 / 3, 1.0 / 5, 1.0 / 9, 1.0 / 17, 1.0 / 33};
  REQUIRE(rows.size() == expected.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(*rows[i].x_c_peres.x_c == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}
