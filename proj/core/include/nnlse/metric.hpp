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

#ifndef NNLSE_METRIC_HPP
#define NNLSE_METRIC_HPP

#include <Eigen/Dense>
#include <memory>
#include <span>
#include <vector>

#include "nnlse/fock.hpp"
#include "nnlse/qoperators.hpp"

namespace nnlse {

/// One factor in an operator string over the unit-normalized modes b_n.
struct LadderOp {
  enum class Kind { create, annihilate };
  Kind kind;
  int mode;
};

inline LadderOp creator(int mode) { return {LadderOp::Kind::create, mode}; }
inline LadderOp annihilator(int mode) { return {LadderOp::Kind::annihilate, mode}; }

/// Vacuum expectation value of an operator string, evaluated by summing all
/// complete contractions that pair each annihilator with a creator standing
/// to its right ([b_n, b+_m] = [n == m]). Unbalanced strings give 0. For
/// strings of the form b...b b+...b+ this is the permanent of the
/// mode-coincidence matrix; the straightforward matching enumeration is used
/// (sector sizes at desk scale keep strings short).
double wick_vev(std::span<const LadderOp> ops);

/// The two pairings of the theory. The Dirac pairing is induced by the
/// adjoint rule a+(p)^h = a-(-p), so the bra annihilates the negated modes;
/// the parity pairing inserts P first, which negates them back and yields the
/// standard bosonic Gram.
enum class PairingKind { dirac, parity };

/// Gram matrix over continuum-normalized product states
/// a+(p_1)...a+(p_n)|vac>, i.e. entries carry a factor L^n over the b-mode
/// contraction count.
struct GramMatrix {
  std::shared_ptr<const SectorBasis> basis;
  PairingKind kind;
  Eigen::MatrixXcd matrix;
};

GramMatrix gram(std::shared_ptr<const SectorBasis> basis, PairingKind kind);

/// Eigenvalues (ascending) of the single-particle Dirac Gram: +L with
/// multiplicity M+1 and -L with multiplicity M, from the (p, -p) two-by-two
/// blocks plus the self-paired p = 0 entry.
std::vector<double> dirac_gram_spectrum(std::shared_ptr<const SectorBasis> basis);

/// P-adjoint: P O^h P with O^h the matrix conjugate transpose.
SectorOperator p_adjoint(const SectorOperator& op, const SectorOperator& parity);

}  // namespace nnlse

#endif  // NNLSE_METRIC_HPP
