// Copyright 2026 The nnlse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nnlse/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace nnlse;

namespace {
constexpr double kPi = std::numbers::pi;

Eigen::VectorXcd random_field(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int j = 0; j < n; ++j) v[j] = std::complex<double>(dist(rng), dist(rng));
  return v;
}
}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("grid conventions at L = 2 pi") {
  MomentumGrid grid(2.0 * kPi, 2);
  CHECK(grid.mode_count() == 5);
  const auto modes = grid.modes();
  CHECK(modes == std::vector<int>{-2, -1, 0, 1, 2});
  for (int n : modes) {
    CHECK(grid.momentum(n) == doctest::Approx(n).epsilon(1e-15));
    CHECK(grid.momentum(-n) == -grid.momentum(n));
  }
  CHECK(grid.momentum(0) == 0.0);
}

TEST_CASE("spacing and input validation") {
  MomentumGrid grid(10.0, 8);
  CHECK(grid.spacing() == doctest::Approx(10.0 / 17.0).epsilon(1e-15));
  CHECK_THROWS_AS(MomentumGrid(0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(MomentumGrid(-1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(MomentumGrid(5.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(PositionGrid(5.0, 1), std::invalid_argument);
}

TEST_CASE("mode set closed under negation") {
  MomentumGrid grid(3.7, 5);
  auto modes = grid.modes();
  auto negated = modes;
  for (int& m : negated) m = -m;
  std::sort(negated.begin(), negated.end());
  CHECK(modes == negated);
}

TEST_CASE("reflection map is an involution with x = 0 fixed") {
  for (int sites : {17, 16}) {
    PositionGrid grid(7.0, sites);
    CHECK(grid.position(grid.origin_index()) == 0.0);
    CHECK(grid.reflect_index(grid.origin_index()) == grid.origin_index());
    for (int j = 0; j < sites; ++j) {
      const int r = grid.reflect_index(j);
      CHECK(grid.reflect_index(r) == j);
      // x_{r(j)} == -x_j modulo L
      double diff = grid.position(r) + grid.position(j);
      diff -= grid.box_length() * std::round(diff / grid.box_length());
      CHECK(std::abs(diff) < 1e-12);
    }
  }
  PositionGrid grid(2.0 * kPi, 5);
  const int o = grid.origin_index();
  CHECK(grid.reflect_index(o + 1) == o - 1);
  CHECK_THROWS_AS(grid.reflect_index(-1), std::out_of_range);
  CHECK_THROWS_AS(grid.reflect_index(5), std::out_of_range);
}

TEST_CASE("discrete Parseval identity fixes the Fourier normalization") {
  for (int sites : {17, 16}) {
    PositionGrid grid(11.0, sites);
    FourierTransform ft(grid);
    const Eigen::VectorXcd psi = random_field(sites, 42);
    const Eigen::VectorXcd coeff = ft.forward(psi);

    double position_sum = 0.0;
    for (int j = 0; j < sites; ++j) position_sum += std::norm(psi[j]) * grid.spacing();
    double mode_sum = 0.0;
    for (int k = 0; k < sites; ++k) mode_sum += std::norm(coeff[k]) / grid.box_length();
    CHECK(position_sum == doctest::Approx(mode_sum).epsilon(1e-12));

    const Eigen::VectorXcd back = ft.inverse(coeff);
    CHECK((back - psi).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("spectral derivative of an on-grid plane wave") {
  PositionGrid grid(9.0, 33);
  FourierTransform ft(grid);
  const double k = 2.0 * kPi * 4 / grid.box_length();
  Eigen::VectorXcd psi(grid.site_count());
  for (int j = 0; j < grid.site_count(); ++j) {
    psi[j] = std::polar(1.0, k * grid.position(j));
  }
  const Eigen::VectorXcd dpsi = ft.derivative(psi);
  const std::complex<double> ik(0.0, k);
  CHECK((dpsi - ik * psi).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("momentum-conserving pair table") {
  MomentumGrid grid(1.0, 3);
  CHECK(grid.pairs_with_sum(0).size() == 7);
  CHECK(grid.pairs_with_sum(6).size() == 1);
  CHECK(grid.pairs_with_sum(7).empty());
  CHECK(grid.pairs_with_sum(-7).empty());
  for (const auto& [a, b] : grid.pairs_with_sum(2)) CHECK(a + b == 2);
}

}  // TEST_SUITE
