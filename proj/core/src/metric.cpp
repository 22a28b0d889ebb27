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

#include "nnlse/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nnlse {

namespace {

// Sum over assignments of the annihilator at `ann_pos[i]` to unused creators
// to its right with matching mode.
double count_matchings(const std::vector<std::pair<int, int>>& anns,
                       const std::vector<std::pair<int, int>>& cres, std::size_t next,
                       std::vector<bool>& used) {
  if (next == anns.size()) return 1.0;
  const auto [apos, amode] = anns[next];
  double total = 0.0;
  for (std::size_t j = 0; j < cres.size(); ++j) {
    if (used[j]) continue;
    const auto [cpos, cmode] = cres[j];
    if (cpos < apos || cmode != amode) continue;
    used[j] = true;
    total += count_matchings(anns, cres, next + 1, used);
    used[j] = false;
  }
  return total;
}

}  // namespace

double wick_vev(std::span<const LadderOp> ops) {
  std::vector<std::pair<int, int>> anns;  // (position, mode)
  std::vector<std::pair<int, int>> cres;
  for (int i = 0; i < static_cast<int>(ops.size()); ++i) {
    if (ops[i].kind == LadderOp::Kind::annihilate) {
      anns.emplace_back(i, ops[i].mode);
    } else {
      cres.emplace_back(i, ops[i].mode);
    }
  }
  if (anns.size() != cres.size()) return 0.0;
  std::vector<bool> used(cres.size(), false);
  return count_matchings(anns, cres, 0, used);
}

GramMatrix gram(std::shared_ptr<const SectorBasis> basis, PairingKind kind) {
  if (!basis) throw std::invalid_argument("gram: null basis");
  const int dim = basis->dimension();
  const int n = basis->particles();
  const double scale = std::pow(basis->grid().box_length(), n);

  // Cache the mode lists; the bra modes are negated once for the Dirac
  // pairing and left alone for the parity pairing (P negates them back).
  std::vector<std::vector<int>> ket_modes(dim);
  std::vector<std::vector<int>> bra_modes(dim);
  for (int i = 0; i < dim; ++i) {
    ket_modes[i] = basis->state(i).modes_with_multiplicity();
    bra_modes[i] = ket_modes[i];
    if (kind == PairingKind::dirac) {
      for (int& m : bra_modes[i]) m = -m;
    }
    std::sort(bra_modes[i].begin(), bra_modes[i].end());
  }

  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<LadderOp> ops;
  ops.reserve(2 * n);
  for (int r = 0; r < dim; ++r) {
    for (int s = 0; s < dim; ++s) {
      // All contractions vanish unless the bra annihilates exactly the
      // ket's mode multiset.
      if (bra_modes[r] != ket_modes[s]) continue;
      ops.clear();
      for (int m : bra_modes[r]) ops.push_back(annihilator(m));
      for (int m : ket_modes[s]) ops.push_back(creator(m));
      g(r, s) = scale * wick_vev(ops);
    }
  }
  return {std::move(basis), kind, std::move(g)};
}

std::vector<double> dirac_gram_spectrum(std::shared_ptr<const SectorBasis> basis) {
  if (!basis) throw std::invalid_argument("dirac_gram_spectrum: null basis");
  if (basis->particles() != 1) {
    throw std::invalid_argument("dirac_gram_spectrum: single-particle basis required");
  }
  GramMatrix g = gram(std::move(basis), PairingKind::dirac);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g.matrix);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dirac_gram_spectrum: eigensolver failed");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

SectorOperator p_adjoint(const SectorOperator& op, const SectorOperator& parity) {
  if (!op.basis || !parity.basis) throw std::invalid_argument("p_adjoint: null basis");
  if (op.matrix.rows() != parity.matrix.rows() || op.matrix.cols() != parity.matrix.cols()) {
    throw std::invalid_argument("p_adjoint: dimension mismatch");
  }
  return {op.basis, parity.matrix * op.matrix.adjoint() * parity.matrix, Provenance::composed};
}

}  // namespace nnlse
