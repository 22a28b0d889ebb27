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

#include "nnlse/export.hpp"

#include <cstdio>

namespace nnlse {

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXcd& matrix) {
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j > 0) os << ',';
      os << format_full(matrix(i, j).real()) << ',' << format_full(matrix(i, j).imag());
    }
    os << '\n';
  }
}

void write_matrix_triplets(std::ostream& os, const Eigen::MatrixXcd& matrix) {
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      const auto v = matrix(i, j);
      if (v.real() == 0.0 && v.imag() == 0.0) continue;
      os << i << ',' << j << ',' << format_full(v.real()) << ',' << format_full(v.imag())
         << '\n';
    }
  }
}

void write_spectrum_csv(std::ostream& os, const SpectrumResult& spectrum) {
  os << "sector_n,momentum_block,index,eigenvalue,residual\n";
  const int n = spectrum.basis ? spectrum.basis->particles() : 0;
  std::string block;
  if (spectrum.basis && spectrum.basis->momentum_filter()) {
    block = std::to_string(*spectrum.basis->momentum_filter());
  }
  for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i) {
    os << n << ',' << block << ',' << i << ',' << format_full(spectrum.eigenvalues[i]) << ','
       << format_full(spectrum.residuals[i]) << '\n';
  }
}

void write_trajectory_csv(std::ostream& os, const std::vector<ChargeTriple>& trajectory) {
  os << "t,re_n,im_n,re_p,im_p,re_h,im_h\n";
  for (const ChargeTriple& q : trajectory) {
    os << format_full(q.time) << ',' << format_full(q.n.real()) << ',' << format_full(q.n.imag())
       << ',' << format_full(q.p.real()) << ',' << format_full(q.p.imag()) << ','
       << format_full(q.h.real()) << ',' << format_full(q.h.imag()) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& table) {
  std::size_t width = 0;
  for (const SweepRow& row : table) width = std::max(width, row.lowest.size());
  os << "mode_cutoff";
  for (std::size_t i = 0; i < width; ++i) os << ",eig" << i;
  os << '\n';
  for (const SweepRow& row : table) {
    os << row.mode_cutoff;
    for (double e : row.lowest) os << ',' << format_full(e);
    os << '\n';
  }
}

void write_field_csv(std::ostream& os, const ClassicalField& field) {
  for (int j = 0; j < field.grid->site_count(); ++j) {
    os << format_full(field.time) << ',' << format_full(field.grid->position(j)) << ','
       << format_full(field.values[j].real()) << ',' << format_full(field.values[j].imag())
       << '\n';
  }
}

}  // namespace nnlse
