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

#ifndef NNLSE_EXPORT_HPP
#define NNLSE_EXPORT_HPP

#include <Eigen/Dense>
#include <ostream>
#include <string>
#include <vector>

#include "nnlse/classical.hpp"
#include "nnlse/spectra.hpp"

namespace nnlse {

/// 17 significant digits, enough to round-trip a double exactly.
std::string format_full(double value);

/// Dense complex matrix as CSV: row per line, entries as re,im pairs, so a
/// dim x dim matrix has 2*dim columns.
void write_matrix_csv(std::ostream& os, const Eigen::MatrixXcd& matrix);

/// Sparse triplet text: one "row,col,re,im" line per entry that is not
/// exactly zero.
void write_matrix_triplets(std::ostream& os, const Eigen::MatrixXcd& matrix);

/// Spectrum CSV with columns sector_n,momentum_block,index,eigenvalue,residual
/// (momentum_block empty when the sector is unfiltered).
void write_spectrum_csv(std::ostream& os, const SpectrumResult& spectrum);

/// Trajectory CSV with columns t,re_n,im_n,re_p,im_p,re_h,im_h.
void write_trajectory_csv(std::ostream& os, const std::vector<ChargeTriple>& trajectory);

/// Sweep table CSV: mode_cutoff followed by the retained lowest eigenvalues.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& table);

/// Field snapshot rows t,x,re,im appended for every site.
void write_field_csv(std::ostream& os, const ClassicalField& field);

}  // namespace nnlse

#endif  // NNLSE_EXPORT_HPP
