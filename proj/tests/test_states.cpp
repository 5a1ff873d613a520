// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sepfrontier/error.hpp"
#include "sepfrontier/states.hpp"

using namespace sepfrontier;

TEST_CASE("charge-conjugation states") {
  const SystemShape shape(Spin(1), 2);
  const StateVector v = cc_state({SpinConfig::parse("+1/2,-1/2"), -1}, shape);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(v.amplitudes()(2) - h) < 1e-15);
  CHECK(std::abs(v.amplitudes()(1) + h) < 1e-15);
  CHECK(std::abs(v.amplitudes().norm() - 1.0) < 1e-12);

  const HermitianMatrix rho = pure_density(v, shape);
  CHECK(rho(1, 1).real() == doctest::Approx(0.5));
  CHECK(rho(1, 2).real() == doctest::Approx(-0.5));
  CHECK(std::abs(rho.entries().sum() - 0.0) < 1e-15);

  const SystemShape one(Spin(2), 1);
  CHECK_THROWS_AS(cc_state({SpinConfig::parse("0"), -1}, one), Error);
  const StateVector bare = cc_state({SpinConfig::parse("0"), +1}, one);
  CHECK(std::abs(bare.amplitudes()(1) - 1.0) < 1e-15);
}

TEST_CASE("cc states are spin-reversal eigenvectors") {
  const SystemShape shape(Spin(2), 3);
  for (int c : {-1, 1}) {
    const StateVector v = cc_state({SpinConfig::parse("+1,0,-1"), c}, shape);
    for (std::size_t i = 0; i < shape.dim(); ++i) {
      const std::size_t j = shape.dim() - 1 - i;
      CHECK(std::abs(v.amplitudes()(static_cast<Eigen::Index>(j)) -
                     static_cast<double>(c) * v.amplitudes()(static_cast<Eigen::Index>(i))) < 1e-15);
    }
  }
}

TEST_CASE("Werner states") {
  const SystemShape shape(Spin(1), 2);
  const StateVector u = werner_state(WernerSpec::parse("1,1"), shape);
  CHECK(std::abs(u.amplitudes()(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(u.amplitudes()(3) - 1.0 / std::sqrt(2.0)) < 1e-15);

  const StateVector w = werner_state(WernerSpec::parse("1,2"), shape);
  CHECK(std::abs(w.amplitudes()(0) - 1.0 / std::sqrt(5.0)) < 1e-15);
  CHECK(std::abs(w.amplitudes()(3) - 2.0 / std::sqrt(5.0)) < 1e-15);
  CHECK(std::abs(w.amplitudes()(1)) == 0.0);

  const SystemShape three(Spin(1), 3);
  const StateVector p = werner_state(WernerSpec::parse("1,0"), three);
  CHECK(std::abs(p.amplitudes()(0) - 1.0) < 1e-15);

  CHECK_THROWS_AS(WernerSpec::parse("0,0"), Error);
  CHECK_THROWS_AS(werner_state(WernerSpec::parse("1,2,3"), shape), Error);

  const WernerSpec c = WernerSpec::parse("1+0.5i,-2i");
  CHECK(c.coefficients()[0] == Complex(1.0, 0.5));
  CHECK(c.coefficients()[1] == Complex(0.0, -2.0));
  CHECK(c.norm_sq() == doctest::Approx(5.25));
  CHECK(c.max_cross_product() == doctest::Approx(std::sqrt(1.25) * 2.0));
}

TEST_CASE("complex coefficient syntax") {
  CHECK(parse_complex("3") == Complex(3, 0));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("2.5-0.5i") == Complex(2.5, -0.5));
  CHECK(parse_complex("1e-3+2e1i") == Complex(1e-3, 20));
  CHECK_THROWS_AS(parse_complex("1+"), Error);
  CHECK_THROWS_AS(parse_complex("x"), Error);
  CHECK_THROWS_AS(parse_complex("1 + 2i"), Error);
}

TEST_CASE("state vectors") {
  ComplexVector v(2);
  v << 3.0, 4.0;
  CHECK_THROWS_AS(StateVector{v}, Error);
  CHECK(std::abs(StateVector::normalized(v).amplitudes()(1) - 0.8) < 1e-15);
  CHECK_THROWS_AS(StateVector::normalized(ComplexVector::Zero(2)), Error);
}

TEST_CASE("mixed family") {
  const SystemShape shape(Spin(1), 2);
  const HermitianMatrix rho = pure_density(cc_state({SpinConfig::parse("+1/2,-1/2"), -1}, shape), shape);
  CHECK((family_density(MixedFamilyPoint(rho, 0.0, shape)).entries() - 0.25 * ComplexMatrix::Identity(4, 4)).norm() <
        1e-15);
  CHECK((family_density(MixedFamilyPoint(rho, 1.0, shape)).entries() - rho.entries()).norm() < 1e-15);
  const Spectrum half = eigenvalues(family_density(MixedFamilyPoint(rho, 0.5, shape)));
  CHECK(oracle::multiset_gap(half.values(), {0.125, 0.125, 0.125, 0.625}) < 1e-15);
  CHECK(oracle::multiset_gap(family_spectrum(0.5, shape).values(), {0.125, 0.125, 0.125, 0.625}) < 1e-15);
  CHECK(oracle::multiset_gap(family_spectrum(1.0, shape).values(), {0, 0, 0, 1}) == 0.0);
  CHECK_THROWS_AS(MixedFamilyPoint(rho, 1.5, shape), Error);
  CHECK_THROWS_AS(MixedFamilyPoint(rho, -0.1, shape), Error);
  CHECK_THROWS_AS(MixedFamilyPoint(HermitianMatrix(0.25 * ComplexMatrix::Identity(4, 4)), 0.5, shape), Error);
}
