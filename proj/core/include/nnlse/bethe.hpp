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

#ifndef NNLSE_BETHE_HPP
#define NNLSE_BETHE_HPP

#include <complex>
#include <span>
#include <vector>

namespace nnlse {

/// Two-body scattering factor (k2 - k1 - ic) / (k2 - k1 + ic); unit modulus
/// for real arguments. Throws std::domain_error when numerator and
/// denominator both vanish (k2 == k1 and c == 0).
std::complex<double> s_matrix_phase(double k1, double k2, double c);

/// Exact eigenstate data: a rapidity list plus the coupling. Either all
/// rapidities are real and pairwise distinct (scattering state), or they form
/// the N = 2 conjugate pair q +- i|c|/2 (bound state, c < 0).
class BetheState {
 public:
  static BetheState scattering(std::vector<double> rapidities, double c);
  /// q +- i|c|/2 with q = total_momentum / 2; the pole of the two-body
  /// S-matrix. Requires c < 0.
  static BetheState bound_pair(double total_momentum, double c);

  int size() const { return static_cast<int>(rapidities_.size()); }
  std::complex<double> rapidity(int i) const { return rapidities_.at(i); }
  const std::vector<std::complex<double>>& rapidities() const { return rapidities_; }
  double coupling() const { return c_; }
  bool is_bound() const { return bound_; }

  std::complex<double> energy() const;    ///< sum k_i^2
  std::complex<double> momentum() const;  ///< sum k_i

 private:
  BetheState(std::vector<std::complex<double>> ks, double c, bool bound);

  std::vector<std::complex<double>> rapidities_;
  double c_;
  bool bound_;
};

/// Coordinate wavefunction in the Gaudin product form,
///   sum_sigma prod_a exp(i k_a x_{sigma(a)})
///             prod_{a<b} (1 - i c eps(x_{sigma(a)} - x_{sigma(b)}) / (k_a - k_b)),
/// with eps(0) = 0 so the contact value is single-valued. Scattering states
/// are normalized so the leading plane-wave coefficient in the fundamental
/// sector x_1 < ... < x_N is 1; the bound pair is normalized to
/// exp(i q (x1 + x2)) exp(-|c||x1 - x2|/2).
std::complex<double> eval_wavefunction(const BetheState& state, std::span<const double> positions);

/// Plane-wave coefficient of prod_a exp(i k_a x_{sigma(a)}) in the sector
/// where the coordinates are ordered as listed in `ascending_positions`
/// (position indices sorted by coordinate). `sigma[a]` is the position index
/// carrying rapidity a. Normalized like eval_wavefunction.
std::complex<double> sector_amplitude(const BetheState& state, std::span<const int> sigma,
                                      std::span<const int> ascending_positions);

/// Contact-condition residual at x_i = x_j: the jump of the relative normal
/// derivative (d_i - d_j) across the coincidence plane must equal
/// 2 c psi(contact). Derivatives are one-sided analytic evaluations of the
/// sector-wise smooth wavefunction; positions[j] is taken equal to
/// positions[i]. Returns |jump - 2c psi| / (|2c psi| + 1e-300).
double check_cusp(const BetheState& state, int i, int j, std::span<const double> positions);

struct FdVerification {
  double residual = 0.0;      ///< max |H psi - E psi| / max |E psi| over interior points
  double grid_spacing = 0.0;
  int points_per_dim = 0;
  double energy = 0.0;
};

/// Brute-force oracle: samples the wavefunction on an N-dimensional grid over
/// [-box/2, box/2]^N, applies the central-difference Hamiltonian
/// -sum d^2 + 2c sum_{i<j} delta (delta = 1/h on the coincidence planes) and
/// measures the eigenvalue residual on interior points. First-order accurate
/// across the cusp, second-order elsewhere; the triple-coincidence line,
/// where the pointwise delta weights stop being consistent, is excluded from
/// the norm. N in {2, 3}.
FdVerification verify_eigenstate_fd(const BetheState& state, double box, int points_per_dim);

struct RingBetheResult {
  BetheState state;
  double residual = 0.0;
  int iterations = 0;
};

/// Damped Newton solution of the periodic-box quantization conditions
///   k_j L = 2 pi I_j + sum_{l != j} theta(k_j - k_l),
///   theta(kappa) = 2 atan(c / kappa)  (odd, theta(0) := 0),
/// which reproduce exact diagonalization on the same box: e^{i k_j L} equals
/// the product over l of (k_j - k_l + ic)/(k_j - k_l - ic), the inverse
/// two-body phases picked up moving one particle around the ring. Repulsive
/// coupling and distinct integer quantum numbers required; the free solution
/// k_j = 2 pi I_j / L seeds the iteration.
RingBetheResult solve_ring_bethe(double box_length, double c, std::span<const int> quantum_numbers);

}  // namespace nnlse

#endif  // NNLSE_BETHE_HPP
