// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sepfrontier/entropy.hpp"
#include "sepfrontier/error.hpp"
#include "sepfrontier/peres.hpp"

using namespace sepfrontier;

namespace {

const SystemShape kPair(Spin(1), 2);

HermitianMatrix singlet() {
  return pure_density(cc_state({SpinConfig::parse("+1/2,-1/2"), -1}, kPair), kPair);
}

}  // namespace

TEST_CASE("Tsallis entropies") {
  const HermitianMatrix mixed(0.25 * ComplexMatrix::Identity(4, 4));
  CHECK(tsallis_entropy(mixed, 2.0) == doctest::Approx(0.75));
  CHECK(tsallis_entropy(mixed, 1.0) == doctest::Approx(std::log(4.0)));
  CHECK(tsallis_entropy(mixed, 1.0 + 1e-10) == doctest::Approx(std::log(4.0)));
  CHECK(tsallis_entropy(singlet(), 3.0) == doctest::Approx(0.0));
  CHECK(tsallis_entropy(singlet(), 1.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(tsallis_entropy(mixed, -1.0), Error);
}

TEST_CASE("conditional entropies") {
  CHECK(conditional_entropy(singlet(), SiteSubset({2}), 2.0, kPair) == doctest::Approx(-1.0));
  const HermitianMatrix mixed(0.25 * ComplexMatrix::Identity(4, 4), kPair);
  for (double q : {0.5, 1.0, 2.0, 7.0}) CHECK(conditional_entropy(mixed, SiteSubset({1}), q, kPair) >= 0.0);

  oracle::Rng rng(9);
  const ComplexMatrix a = oracle::random_density(rng, 2);
  const ComplexMatrix b = oracle::random_density(rng, 2);
  ComplexMatrix ab(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ab.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  for (double q : {0.5, 1.0, 2.0, 5.0}) {
    CHECK(conditional_entropy(HermitianMatrix(ab, kPair), SiteSubset({2}), q, kPair) ==
          doctest::Approx(tsallis_entropy(HermitianMatrix(a), q)).epsilon(1e-10));
  }
}

TEST_CASE("singlet finite-q roots") {
  const PurityBalance balance(singlet(), SiteSubset({1}), kPair);
  const EntropicBound q2 = balance.solve(2.0);
  REQUIRE(q2.violated());
  CHECK(std::abs(*q2.x_c - 1.0 / std::sqrt(3.0)) < 1e-10);
  CHECK(std::abs(*q2.residual) <= 1e-10);

  // Independent dense scan of the von Neumann condition.
  const double oracle_root = oracle::dense_entropic_root(singlet().entries(), {1}, kPair, 1.0);
  const EntropicBound q1 = balance.solve(1.0);
  REQUIRE(q1.violated());
  CHECK(std::abs(*q1.x_c - oracle_root) < 1e-6);
  CHECK(*q1.x_c == doctest::Approx(0.7476).epsilon(1e-3));

  const EntropicBound big = balance.solve(1000.0);
  CHECK(*big.x_c >= 1.0 / 3.0);
  CHECK(*big.x_c - 1.0 / 3.0 <= 1e-2);
  CHECK_THROWS_AS((void)balance.solve(0.0), Error);
}

TEST_CASE("finite-q roots match a dense oracle for other states") {
  const SystemShape shape(Spin(2), 2);
  const HermitianMatrix rho = pure_density(werner_state(WernerSpec::parse("1,2,0.5"), shape), shape);
  for (double q : {0.5, 2.0, 5.0}) {
    const EntropicBound b = entropic_bound_at_q(rho, SiteSubset({1}), q, shape);
    REQUIRE(b.violated());
    CHECK(std::abs(*b.x_c - oracle::dense_entropic_root(rho.entries(), {1}, shape, q)) < 1e-8);
  }
}

TEST_CASE("x_c(q) is non-increasing and bounded below by the q -> infinity limit") {
  const std::vector<double> grid{0.5, 1.0, 1.5, 2.0, 5.0, 10.0, 50.0, 200.0, 1000.0};
  const SystemShape shape(Spin(1), 3);
  const HermitianMatrix rho = pure_density(cc_state({SpinConfig::parse("+1/2,-1/2,-1/2"), -1}, shape), shape);
  for (const auto& subset : enumerate_subsets(3, 2)) {
    const PurityBalance balance(rho, subset, shape);
    const double floor = *balance.solve_infinite().x_c;
    double previous = 1.0;
    for (double q : grid) {
      const EntropicBound b = balance.solve(q);
      REQUIRE(b.violated());
      CHECK(*b.x_c <= previous + 1e-12);
      CHECK(*b.x_c >= floor - 1e-12);
      CHECK(std::abs(*b.residual) <= 1e-10);
      previous = *b.x_c;
    }
  }
}

TEST_CASE("q -> infinity bound") {
  const EntropicBound s = entropic_bound_inf(singlet(), SiteSubset({1}), kPair);
  CHECK(*s.v_bar == doctest::Approx(0.5));
  CHECK(*s.x_c == doctest::Approx(1.0 / 3.0));

  const HermitianMatrix w = pure_density(werner_state(WernerSpec::parse("1,2"), kPair), kPair);
  const EntropicBound b = entropic_bound_inf(w, SiteSubset({1}), kPair);
  CHECK(*b.v_bar == doctest::Approx(0.8));
  CHECK(*b.x_c == doctest::Approx(5.0 / 9.0));
  CHECK(*werner_entropic_closed_form(WernerSpec::parse("1,2"), kPair).x_c == doctest::Approx(5.0 / 9.0));

  ComplexVector e = ComplexVector::Zero(4);
  e(0) = 1.0;
  CHECK_FALSE(entropic_bound_inf(pure_density(StateVector(e), kPair), SiteSubset({1}), kPair).violated());
  CHECK_FALSE(PurityBalance(pure_density(StateVector(e), kPair), SiteSubset({1}), kPair).solve(2.0).violated());
}

TEST_CASE("best entropic bound and closed forms") {
  CHECK(*best_entropic_bound(singlet(), kPair).x_c == doctest::Approx(1.0 / 3.0));
  const SystemShape d3(Spin(2), 2);
  const HermitianMatrix cc = pure_density(cc_state({SpinConfig::parse("+1,-1"), -1}, d3), d3);
  CHECK(*best_entropic_bound(cc, d3).x_c == doctest::Approx(4.0 / 13.0).epsilon(1e-12));
  CHECK(cc_entropic_closed_form(d3) == doctest::Approx(4.0 / 13.0));
  for (int n = 2; n <= 8; ++n) {
    const SystemShape shape(Spin(1), n);
    CHECK(cc_entropic_closed_form(shape) == doctest::Approx(cc_peres_closed_form(shape)));
  }
  for (int twice = 1; twice <= 3; ++twice) {
    for (int n = 2; n <= 3; ++n) {
      const SystemShape shape(Spin(twice), n);
      const HermitianMatrix rho = pure_density(werner_state(WernerSpec::uniform(shape), shape), shape);
      const double expected = 1.0 / (1.0 + std::pow(shape.local_dim(), n - 1));
      CHECK(*best_entropic_bound(rho, shape).x_c == doctest::Approx(expected).epsilon(1e-12));
      CHECK(*best_entropic_bound(rho, shape, EntropicScope::LargestSubsets).x_c ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("alpha") {
  const SystemShape two(Spin(1), 2);
  CHECK(alpha(WernerSpec::parse("1,1"), two) == doctest::Approx(1.0));
  CHECK(alpha(WernerSpec::parse("1,2"), two) == doctest::Approx(0.5));
  CHECK_THROWS_AS(alpha(WernerSpec::parse("1,0"), two), Error);
}

TEST_CASE("separable side has non-negative conditional entropy") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    const SystemShape shape(Spin(1 + trial % 2), 2);
    const WernerSpec spec(oracle::random_coefficients(rng, shape.local_dim()));
    const HermitianMatrix rho_tilde = pure_density(werner_state(spec, shape), shape);
    const double xp = *werner_peres_closed_form(spec, shape).x_c;
    const double xs = *werner_entropic_closed_form(spec, shape).x_c;
    const double limit = std::min(xp, xs) - 1e-6;
    for (double x = 0.0; x <= limit; x += limit / 5.0) {
      const HermitianMatrix rho = family_density(MixedFamilyPoint(rho_tilde, x, shape));
      for (double q : {0.5, 1.0, 2.0, 10.0}) {
        CHECK(conditional_entropy(rho, SiteSubset({1}), q, shape) >= -1e-10);
      }
    }
  }
}
