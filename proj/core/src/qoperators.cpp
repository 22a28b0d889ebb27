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

#include "nnlse/qoperators.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace nnlse {

namespace {

void require_basis(const std::shared_ptr<const SectorBasis>& basis) {
  if (!basis) throw std::invalid_argument("SectorOperator: null basis");
}

void require_finite(Coupling coupling) {
  if (!std::isfinite(coupling.c)) throw std::invalid_argument("Coupling: c must be finite");
}

SectorOperator diagonal_operator(std::shared_ptr<const SectorBasis> basis,
                                 double (*entry)(const FockState&, const MomentumGrid&)) {
  const int dim = basis->dimension();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = entry(basis->state(i), basis->grid());
  }
  return {std::move(basis), std::move(m), Provenance::momentum_space};
}

}  // namespace

SectorOperator build_h0(std::shared_ptr<const SectorBasis> basis) {
  require_basis(basis);
  return diagonal_operator(std::move(basis), [](const FockState& s, const MomentumGrid& g) {
    double e = 0.0;
    for (const auto& [mode, count] : s.occupations()) {
      const double p = g.momentum(mode);
      e += p * p * count;
    }
    return e;
  });
}

SectorOperator build_number(std::shared_ptr<const SectorBasis> basis) {
  require_basis(basis);
  return diagonal_operator(std::move(basis), [](const FockState& s, const MomentumGrid&) {
    return static_cast<double>(s.particle_number());
  });
}

SectorOperator build_momentum(std::shared_ptr<const SectorBasis> basis) {
  require_basis(basis);
  return diagonal_operator(std::move(basis), [](const FockState& s, const MomentumGrid& g) {
    double p = 0.0;
    for (const auto& [mode, count] : s.occupations()) p += g.momentum(mode) * count;
    return p;
  });
}

SectorOperator build_parity(std::shared_ptr<const SectorBasis> basis) {
  require_basis(basis);
  const int dim = basis->dimension();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const FockState image = basis->state(j).negated();
    const auto i = basis->index_of(image);
    if (!i) {
      throw std::invalid_argument(
          "build_parity: basis is not closed under mode negation (momentum block != 0)");
    }
    m(*i, j) = 1.0;
  }
  return {std::move(basis), std::move(m), Provenance::momentum_space};
}

SectorOperator build_v_momentum(std::shared_ptr<const SectorBasis> basis, Coupling coupling) {
  require_basis(basis);
  require_finite(coupling);
  const MomentumGrid& grid = basis->grid();
  const int dim = basis->dimension();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  if (coupling.c == 0.0) return {std::move(basis), std::move(m), Provenance::momentum_space};

  const double prefactor = coupling.c / grid.box_length();
  for (int col = 0; col < dim; ++col) {
    const FockState& s = basis->state(col);
    // b_{n4} first, then b_{n3}; ordered pairs over occupied modes.
    for (const auto& [n4, c4] : s.occupations()) {
      const auto r4 = apply_annihilation(s, n4);
      for (const auto& [n3, c3] : r4->first.occupations()) {
        const auto r3 = apply_annihilation(r4->first, n3);
        const double ann_amp = r4->second * r3->second;
        // Creation pairs sharing the annihilated momentum sum.
        for (const auto& [n1, n2] : grid.pairs_with_sum(n3 + n4)) {
          const auto r2 = apply_creation(r3->first, n2);
          const auto r1 = apply_creation(r2.first, n1);
          if (const auto row = basis->index_of(r1.first)) {
            m(*row, col) += prefactor * ann_amp * r2.second * r1.second;
          }
        }
      }
    }
  }
  return {std::move(basis), std::move(m), Provenance::momentum_space};
}

SectorOperator build_v_position(std::shared_ptr<const SectorBasis> basis, Coupling coupling) {
  require_basis(basis);
  require_finite(coupling);
  const MomentumGrid& grid = basis->grid();
  const int dim = basis->dimension();
  const int n = basis->particles();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  if (coupling.c == 0.0 || n < 2) {
    return {std::move(basis), std::move(m), Provenance::position_space};
  }

  const double length = grid.box_length();
  const int cutoff = grid.mode_cutoff();
  // psi(y)^2 carries mode sums in [-2M, 2M]; a (4M+1)-point uniform rule
  // integrates all of them exactly, so the quadrature introduces no aliasing.
  const int quad_points = 4 * cutoff + 1;

  const auto sub = enumerate_sector(basis->grid_ptr(), n - 2);

  // Transitions of psi(y)^2 per column: (target row, amplitude, mode sum).
  struct Transition {
    int row;
    double amplitude;
    int mode_sum;
  };
  std::vector<std::vector<Transition>> transitions(dim);
  for (int col = 0; col < dim; ++col) {
    const FockState& s = basis->state(col);
    for (const auto& [n4, c4] : s.occupations()) {
      const auto r4 = apply_annihilation(s, n4);
      for (const auto& [n3, c3] : r4->first.occupations()) {
        const auto r3 = apply_annihilation(r4->first, n3);
        const auto row = sub->index_of(r3->first);
        transitions[col].push_back({*row, r4->second * r3->second, n3 + n4});
      }
    }
  }

  Eigen::MatrixXcd a_y(sub->dimension(), dim);
  for (int t = 0; t < quad_points; ++t) {
    const double y = t * length / quad_points - length / 2.0;
    a_y.setZero();
    for (int col = 0; col < dim; ++col) {
      for (const auto& tr : transitions[col]) {
        // psi = (1/sqrt L) sum_n exp(i p_n y) b_n, so psi^2 carries 1/L.
        a_y(tr.row, col) += (tr.amplitude / length) *
                            std::polar(1.0, grid.momentum(tr.mode_sum) * y);
      }
    }
    m.noalias() += (coupling.c * length / quad_points) * (a_y.adjoint() * a_y);
  }
  return {std::move(basis), std::move(m), Provenance::position_space};
}

SectorOperator build_hamiltonian(std::shared_ptr<const SectorBasis> basis, Coupling coupling) {
  SectorOperator h0 = build_h0(basis);
  SectorOperator v = build_v_momentum(basis, coupling);
  return {std::move(basis), h0.matrix + v.matrix, Provenance::composed};
}

}  // namespace nnlse
