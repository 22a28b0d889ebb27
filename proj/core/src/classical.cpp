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
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nnlse {

namespace {

using Complex = std::complex<double>;

void require_field(const ClassicalField& field) {
  if (!field.grid) throw std::invalid_argument("ClassicalField: null grid");
  if (field.values.size() != field.grid->site_count()) {
    throw std::invalid_argument("ClassicalField: value count does not match grid");
  }
}

Eigen::VectorXcd nonlocal_rhs(const Eigen::VectorXcd& psi, const std::vector<int>& reflect,
                              double c) {
  const int n = static_cast<int>(psi.size());
  Eigen::VectorXcd out(n);
  const Complex factor(0.0, -2.0 * c);
  for (int j = 0; j < n; ++j) {
    out[j] = factor * std::conj(psi[reflect[j]]) * psi[j] * psi[j];
  }
  return out;
}

}  // namespace

ClassicalField make_gaussian_field(std::shared_ptr<const PositionGrid> grid, double amplitude,
                                   double center, double width, int wavenumber) {
  if (!grid) throw std::invalid_argument("make_gaussian_field: null grid");
  if (!(width > 0.0)) throw std::invalid_argument("make_gaussian_field: width must be positive");
  const int n = grid->site_count();
  const double k = 2.0 * std::numbers::pi * wavenumber / grid->box_length();
  Eigen::VectorXcd values(n);
  for (int j = 0; j < n; ++j) {
    const double x = grid->position(j);
    const double envelope = amplitude * std::exp(-(x - center) * (x - center) / (2.0 * width * width));
    values[j] = envelope * std::polar(1.0, k * x);
  }
  return {std::move(grid), std::move(values), 0.0};
}

ClassicalField make_plane_wave(std::shared_ptr<const PositionGrid> grid, double amplitude,
                               int mode) {
  if (!grid) throw std::invalid_argument("make_plane_wave: null grid");
  const int n = grid->site_count();
  const double k = 2.0 * std::numbers::pi * mode / grid->box_length();
  Eigen::VectorXcd values(n);
  for (int j = 0; j < n; ++j) values[j] = amplitude * std::polar(1.0, k * grid->position(j));
  return {std::move(grid), std::move(values), 0.0};
}

ClassicalField evolve(const ClassicalField& field, Coupling coupling, double dt, int steps) {
  require_field(field);
  if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
  if (steps < 0) throw std::invalid_argument("evolve: negative step count");

  const PositionGrid& grid = *field.grid;
  const int n = grid.site_count();
  FourierTransform ft(grid);

  double p_max = 0.0;
  Eigen::VectorXcd half_phase(n);
  for (int k = 0; k < n; ++k) {
    const double p = grid.bin_momentum(k);
    p_max = std::max(p_max, std::abs(p));
    half_phase[k] = std::polar(1.0, -p * p * dt / 2.0);
  }
  if (dt * p_max * p_max >= 1.0) {
    std::clog << "evolve: dt * p_max^2 = " << dt * p_max * p_max
              << " >= 1; the nonlinear substep may be under-resolved\n";
  }

  std::vector<int> reflect(n);
  for (int j = 0; j < n; ++j) reflect[j] = grid.reflect_index(j);

  Eigen::VectorXcd psi = field.values;
  const double c = coupling.c;
  for (int s = 0; s < steps; ++s) {
    psi = ft.inverse(half_phase.cwiseProduct(ft.forward(psi)));

    const Eigen::VectorXcd k1 = nonlocal_rhs(psi, reflect, c);
    const Eigen::VectorXcd k2 = nonlocal_rhs(psi + (dt / 2.0) * k1, reflect, c);
    const Eigen::VectorXcd k3 = nonlocal_rhs(psi + (dt / 2.0) * k2, reflect, c);
    const Eigen::VectorXcd k4 = nonlocal_rhs(psi + dt * k3, reflect, c);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    psi = ft.inverse(half_phase.cwiseProduct(ft.forward(psi)));

    const double peak = psi.cwiseAbs().maxCoeff();
    if (!std::isfinite(peak) || peak > 1e12) {
      std::ostringstream os;
      os << "evolve: field blew up at step " << s << " (max |psi| = " << peak << ")";
      throw std::runtime_error(os.str());
    }
  }
  return {field.grid, std::move(psi), field.time + steps * dt};
}

ChargeTriple charges(const ClassicalField& field, Coupling coupling) {
  require_field(field);
  const PositionGrid& grid = *field.grid;
  const int n = grid.site_count();
  const double dx = grid.spacing();

  FourierTransform ft(grid);
  const Eigen::VectorXcd& psi = field.values;
  const Eigen::VectorXcd dpsi = ft.derivative(psi);

  ChargeTriple out;
  out.time = field.time;
  for (int j = 0; j < n; ++j) {
    const int r = grid.reflect_index(j);
    const Complex pr = std::conj(psi[r]);    // conj(psi(-x))
    const Complex dpr = std::conj(dpsi[r]);  // conj(psi_x(-x))
    out.n += psi[j] * pr * dx;
    out.p += Complex(0.0, 1.0) * pr * dpsi[j] * dx;
    out.h += (-dpr * dpsi[j] + coupling.c * pr * pr * psi[j] * psi[j]) * dx;
  }
  return out;
}

double translation_covariance_test(const ClassicalField& field, double shift, Coupling coupling,
                                   double dt, int steps) {
  require_field(field);
  const PositionGrid& grid = *field.grid;
  const int n = grid.site_count();
  const double dx = grid.spacing();
  const double sites_shift = shift / dx;
  const long rounded = std::lround(sites_shift);
  if (std::abs(sites_shift - rounded) > 1e-9) {
    throw std::invalid_argument("translation_covariance_test: shift must be a multiple of dx");
  }
  const int s = static_cast<int>(((rounded % n) + n) % n);

  auto roll = [&](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(n);
    for (int j = 0; j < n; ++j) out[j] = v[(j - s + n) % n];
    return out;
  };

  ClassicalField shifted{field.grid, roll(field.values), field.time};
  const Eigen::VectorXcd evolved_shifted = evolve(shifted, coupling, dt, steps).values;
  const Eigen::VectorXcd shifted_evolved = roll(evolve(field, coupling, dt, steps).values);
  return (evolved_shifted - shifted_evolved).cwiseAbs().maxCoeff();
}

}  // namespace nnlse
