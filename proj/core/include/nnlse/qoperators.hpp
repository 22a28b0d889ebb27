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

#ifndef NNLSE_QOPERATORS_HPP
#define NNLSE_QOPERATORS_HPP

#include <Eigen/Dense>
#include <memory>

#include "nnlse/fock.hpp"

namespace nnlse {

/// Contact-interaction strength; sign free (c > 0 repulsive, c < 0 attractive).
struct Coupling {
  double c = 0.0;
};

enum class Provenance { momentum_space, position_space, composed };

/// Dense matrix of an operator restricted to one sector basis.
struct SectorOperator {
  std::shared_ptr<const SectorBasis> basis;
  Eigen::MatrixXcd matrix;
  Provenance provenance = Provenance::composed;

  int dimension() const { return static_cast<int>(matrix.rows()); }
};

/// Free Hamiltonian: diagonal, sum_n p_n^2 count(n).
SectorOperator build_h0(std::shared_ptr<const SectorBasis> basis);

/// Interaction assembled in momentum space:
///   V = (c/L) sum_{n1+n2 = n3+n4} b+_{n1} b+_{n2} b_{n3} b_{n4},
/// quadruples restricted to the retained mode window (hard cutoff).
SectorOperator build_v_momentum(std::shared_ptr<const SectorBasis> basis, Coupling coupling);

/// The same interaction assembled as the normal-ordered density-density
/// contact term c * integral dx psi+(x) psi+(x) psi(x) psi(x), with the
/// position-space field operators obtained by Fourier transform of the modes
/// and the integral evaluated on a 4M+1-point quadrature (exact for the
/// retained window, so no umklapp aliasing). Independent construction used
/// to cross-check build_v_momentum.
SectorOperator build_v_position(std::shared_ptr<const SectorBasis> basis, Coupling coupling);

/// H = H0 + V (momentum-space V).
SectorOperator build_hamiltonian(std::shared_ptr<const SectorBasis> basis, Coupling coupling);

/// Number operator: n * Identity on an n-particle sector.
SectorOperator build_number(std::shared_ptr<const SectorBasis> basis);

/// Field momentum: diagonal, sum_n p_n count(n).
SectorOperator build_momentum(std::shared_ptr<const SectorBasis> basis);

/// Parity: permutation matrix negating every mode index. P^2 = 1 and
/// P|vac> = |vac>. Requires the basis to be closed under mode negation
/// (true for unfiltered sectors and the zero-momentum block).
SectorOperator build_parity(std::shared_ptr<const SectorBasis> basis);

}  // namespace nnlse

#endif  // NNLSE_QOPERATORS_HPP
