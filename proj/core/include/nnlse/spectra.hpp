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

#ifndef NNLSE_SPECTRA_HPP
#define NNLSE_SPECTRA_HPP

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "nnlse/qoperators.hpp"

namespace nnlse {

enum class EigenMethod {
  automatic,     ///< general solver at small dimension, self-adjoint above
  general,       ///< non-symmetric complex solver; realness is a result, not an input
  self_adjoint,  ///< Hermitian fast path
};

struct SpectrumResult {
  std::shared_ptr<const SectorBasis> basis;
  Eigen::VectorXd eigenvalues;   ///< ascending
  Eigen::MatrixXcd eigenvectors; ///< columns matching eigenvalues
  Eigen::VectorXd residuals;     ///< ||H v - lambda v|| / ||v|| per pair
  double realness_defect = 0.0;  ///< max |Im lambda| seen before taking real parts
};

/// Full dense eigendecomposition (dimension <= 4000). Every reported pair is
/// checked to satisfy ||H v - lambda v||/||v|| < 1e-9; imaginary parts beyond
/// 1e-8 * scale abort with a diagnostic.
SpectrumResult diagonalize(const SectorOperator& hamiltonian,
                           EigenMethod method = EigenMethod::automatic);

/// Rayleigh-Schrodinger-regularized Lippmann-Schwinger iteration
/// term_{l} = [R0 V]^l |ref>, where R0 multiplies by 1/(w_ref - E) off shell
/// and annihilates the on-shell subspace |E - w_ref| <= 1e-9 max(1, |w_ref|)
/// (the i-epsilon prescription has no finite-grid counterpart; the reduced
/// resolvent reproduces the perturbation expansion order by order).
struct PerturbationSeries {
  std::shared_ptr<const SectorBasis> basis;
  int reference_index = -1;
  double reference_energy = 0.0;
  std::vector<Eigen::VectorXcd> terms;      ///< terms[l], l = 0..order
  std::vector<double> onshell_magnitudes;   ///< ||on-shell part of V term_{l-1}||, l >= 1

  Eigen::VectorXcd partial_sum(int order) const;
};

PerturbationSeries ls_series(std::shared_ptr<const SectorBasis> basis, const FockState& reference,
                             Coupling coupling, int order);

/// w_ref + <ref|V|ref>: the first-order eigenvalue of the state connected to
/// the reference at small coupling.
double first_order_energy(const PerturbationSeries& series, const SectorOperator& v);

struct SweepRow {
  int mode_cutoff;
  std::vector<double> lowest;
};

/// Lowest eigenvalues per mode cutoff, for extrapolation against exact
/// (Bethe) oracle values. Cutoffs must be ascending.
std::vector<SweepRow> convergence_sweep(double box_length, int particles, Coupling coupling,
                                        std::optional<int> momentum_filter,
                                        std::span<const int> cutoffs, int n_lowest);

}  // namespace nnlse

#endif  // NNLSE_SPECTRA_HPP
