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

#ifndef NNLSE_CLASSICAL_HPP
#define NNLSE_CLASSICAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>

#include "nnlse/lattice.hpp"
#include "nnlse/qoperators.hpp"

namespace nnlse {

/// Complex field samples on a reflection-symmetric position grid.
struct ClassicalField {
  std::shared_ptr<const PositionGrid> grid;
  Eigen::VectorXcd values;
  double time = 0.0;
};

/// The conserved charges, evaluated with pi(x) = i conj(psi(-x)) substituted:
///   N = integral psi(x) conj(psi(-x)) dx
///   P = i integral conj(psi(-x)) psi_x(x) dx
///   H = integral [ -conj(psi_x(-x)) psi_x(x) + c conj(psi(-x))^2 psi(x)^2 ] dx
/// Reported as complex; the reflection pairing makes N and H real-valued and
/// P purely imaginary, but no realness is assumed anywhere.
struct ChargeTriple {
  std::complex<double> n;
  std::complex<double> p;
  std::complex<double> h;
  double time = 0.0;
};

/// Gaussian packet amplitude * exp(-(x - center)^2 / (2 width^2)) with an
/// on-grid phase kick exp(i 2 pi wavenumber x / L).
ClassicalField make_gaussian_field(std::shared_ptr<const PositionGrid> grid, double amplitude,
                                   double center, double width, int wavenumber);

/// Plane wave amplitude * exp(i p_mode x).
ClassicalField make_plane_wave(std::shared_ptr<const PositionGrid> grid, double amplitude,
                               int mode);

/// Strang-split integration of i psi_t = -psi_xx + 2 c conj(psi(-x)) psi^2:
/// exact linear half-steps in Fourier space around a classical RK4 sweep of
/// the nonlocal substep psi_t = -2 i c conj(psi(-x)) psi^2 (which is not a
/// pointwise phase rotation, unlike the local equation, because it couples x
/// with -x). Second order in dt overall. Overflow or NaN aborts with the
/// offending step index; dt * p_max^2 >= 1 only earns a warning.
ClassicalField evolve(const ClassicalField& field, Coupling coupling, double dt, int steps);

/// Charges by spectral differentiation and the (exact, periodic) trapezoidal
/// rule.
ChargeTriple charges(const ClassicalField& field, Coupling coupling);

/// Max pointwise deviation between evolve(shift(field)) and
/// shift(evolve(field)) for a shift of an integer number of sites. The
/// nonlocal term pins x = 0, so the deviation is only expected to vanish at
/// c = 0; conservation of P during evolve carries the translation-symmetry
/// content at c != 0.
double translation_covariance_test(const ClassicalField& field, double shift, Coupling coupling,
                                   double dt, int steps);

}  // namespace nnlse

#endif  // NNLSE_CLASSICAL_HPP
