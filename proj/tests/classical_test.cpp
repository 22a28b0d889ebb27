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

#include "nnlse/classical.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"

using namespace nnlse;

namespace {

using Complex = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Two unequal humps with different phase kicks; breaks x -> -x symmetry.
ClassicalField two_bump_field(std::shared_ptr<const PositionGrid> grid) {
  ClassicalField a = make_gaussian_field(grid, 1.0, 2.0, 1.0, 0);
  const ClassicalField b = make_gaussian_field(grid, 0.5, -3.0, 1.5, 3);
  a.values += b.values;
  return a;
}

double rel_drift(Complex now, Complex initial) {
  return std::abs(now - initial) / std::max(std::abs(initial), 1e-12);
}

}  // namespace

TEST_SUITE("classical") {

TEST_CASE("free plane wave picks up exactly the dispersion phase") {
  for (int sites : {128, 129}) {
    auto grid = std::make_shared<PositionGrid>(40.0, sites);
    const ClassicalField initial = make_plane_wave(grid, 0.7, 3);
    const double k = kTwoPi * 3 / 40.0;
    const double t = 1.0;
    const ClassicalField final = evolve(initial, {0.0}, 1e-3, 1000);

    double err = 0.0;
    for (int j = 0; j < sites; ++j) {
      const Complex exact = 0.7 * std::polar(1.0, k * grid->position(j) - k * k * t);
      err = std::max(err, std::abs(final.values[j] - exact));
    }
    CHECK(err < 1e-10);
    CHECK(final.time == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("zero field stays zero") {
  auto grid = std::make_shared<PositionGrid>(20.0, 64);
  ClassicalField zero{grid, Eigen::VectorXcd::Zero(64), 0.0};
  const ClassicalField out = evolve(zero, {1.7}, 1e-3, 200);
  CHECK(out.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("charges of simple fields") {
  auto grid = std::make_shared<PositionGrid>(12.0, 96);

  ClassicalField constant{grid, Eigen::VectorXcd::Constant(96, Complex(0.8, 0.0)), 0.0};
  const ChargeTriple qc = charges(constant, {1.0});
  CHECK(std::abs(qc.n - 0.64 * 12.0) < 1e-12);
  CHECK(std::abs(qc.p) < 1e-12);

  // exp(2ikx) averages to zero on the ring.
  const ClassicalField wave = make_plane_wave(grid, 1.1, 2);
  CHECK(std::abs(charges(wave, {1.0}).n) < 1e-12);
}

TEST_CASE("reflection pairing: N and H real, P imaginary, P nonzero for asymmetric data") {
  auto grid = std::make_shared<PositionGrid>(40.0, 256);
  const ClassicalField field = two_bump_field(grid);
  const ChargeTriple q = charges(field, {1.0});
  CHECK(std::abs(q.n.imag()) < 1e-12);
  CHECK(std::abs(q.h.imag()) < 1e-12);
  CHECK(std::abs(q.p.real()) < 1e-12);
  CHECK(std::abs(q.p.imag()) > 1e-2);  // the non-real charge of the nonlocal pairing
}

TEST_CASE("charges are conserved along the flow") {
  auto grid = std::make_shared<PositionGrid>(40.0, 256);
  const ClassicalField initial = two_bump_field(grid);
  for (double c : {1.0, -1.0}) {
    const ChargeTriple q0 = charges(initial, {c});
    const ClassicalField final = evolve(initial, {c}, 2e-4, 1000);  // t = 0.2
    const ChargeTriple q1 = charges(final, {c});
    CHECK(rel_drift(q1.n, q0.n) < 1e-10);
    CHECK(rel_drift(q1.p, q0.p) < 1e-10);
    CHECK(rel_drift(q1.h, q0.h) < 1e-7);
  }
}

TEST_CASE("halving dt cuts the H drift by about four") {
  auto grid = std::make_shared<PositionGrid>(40.0, 256);
  const ClassicalField initial = two_bump_field(grid);
  const Coupling c{1.0};
  const ChargeTriple q0 = charges(initial, c);
  const double T = 0.25;

  auto h_drift = [&](double dt) {
    const ClassicalField out = evolve(initial, c, dt, static_cast<int>(std::lround(T / dt)));
    return std::abs(charges(out, c).h - q0.h);
  };
  const double coarse = h_drift(8e-4);
  const double fine = h_drift(4e-4);
  CHECK(coarse / fine > 3.0);
  CHECK(coarse / fine < 5.0);
}

TEST_CASE("field self-convergence is second order in dt") {
  auto grid = std::make_shared<PositionGrid>(40.0, 256);
  const ClassicalField initial = two_bump_field(grid);
  const Coupling c{1.0};
  const double T = 0.25;

  auto run = [&](double dt) {
    return evolve(initial, c, dt, static_cast<int>(std::lround(T / dt))).values;
  };
  const Eigen::VectorXcd ref = run(1.25e-4);
  const double e1 = (run(1e-3) - ref).cwiseAbs().maxCoeff();
  const double e2 = (run(5e-4) - ref).cwiseAbs().maxCoeff();
  const double order = std::log2(e1 / e2);
  CHECK(order > 1.8);
  CHECK(order < 2.2);
}

TEST_CASE("translation covariance holds only in the free theory") {
  auto grid = std::make_shared<PositionGrid>(40.0, 128);
  const ClassicalField field = two_bump_field(grid);
  const double dx = grid->spacing();

  CHECK(translation_covariance_test(field, 5 * dx, {0.0}, 1e-3, 100) < 1e-10);
  CHECK(translation_covariance_test(field, 0.0, {1.0}, 1e-3, 50) == 0.0);
  // The nonlocal term pins x = 0; shifted and unshifted problems genuinely
  // differ at c != 0.
  CHECK(translation_covariance_test(field, 5 * dx, {1.0}, 1e-3, 100) > 1e-4);
  CHECK_THROWS_AS(translation_covariance_test(field, 0.4 * dx, {0.0}, 1e-3, 10),
                  std::invalid_argument);
}

TEST_CASE("validation and blow-up detection") {
  auto grid = std::make_shared<PositionGrid>(10.0, 32);
  const ClassicalField field = make_gaussian_field(grid, 1.0, 0.0, 1.0, 0);
  CHECK_THROWS_AS(evolve(field, {1.0}, 0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(evolve(field, {1.0}, -1e-3, 10), std::invalid_argument);

  const ClassicalField huge = make_gaussian_field(grid, 1e8, 0.0, 1.0, 0);
  CHECK_THROWS_AS(evolve(huge, {1.0}, 1e-2, 100), std::runtime_error);
}

}  // TEST_SUITE
