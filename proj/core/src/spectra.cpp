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

#include "nnlse/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nnlse {

namespace {

constexpr int kMaxDenseDim = 4000;
constexpr int kGeneralSolverDim = 512;

void check_residuals(const Eigen::MatrixXcd& h, SpectrumResult& result) {
  const int dim = static_cast<int>(h.rows());
  result.residuals.resize(dim);
  double worst = 0.0;
  for (int i = 0; i < dim; ++i) {
    const auto v = result.eigenvectors.col(i);
    const double r = (h * v - result.eigenvalues[i] * v).norm() / v.norm();
    result.residuals[i] = r;
    worst = std::max(worst, r);
  }
  if (worst >= 1e-9 * std::max(1.0, h.cwiseAbs().maxCoeff())) {
    std::ostringstream os;
    os << "diagonalize: eigenpair residual " << worst << " exceeds tolerance";
    throw std::runtime_error(os.str());
  }
}

}  // namespace

SpectrumResult diagonalize(const SectorOperator& hamiltonian, EigenMethod method) {
  if (!hamiltonian.basis) throw std::invalid_argument("diagonalize: null basis");
  const Eigen::MatrixXcd& h = hamiltonian.matrix;
  const int dim = static_cast<int>(h.rows());
  if (h.cols() != dim) throw std::invalid_argument("diagonalize: matrix not square");
  if (dim > kMaxDenseDim) {
    throw std::invalid_argument("diagonalize: dimension exceeds dense limit (4000)");
  }

  SpectrumResult result;
  result.basis = hamiltonian.basis;
  if (dim == 0) return result;

  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  const double herm_defect = (h - h.adjoint()).cwiseAbs().maxCoeff();

  EigenMethod chosen = method;
  if (chosen == EigenMethod::automatic) {
    chosen = (dim <= kGeneralSolverDim || herm_defect > 1e-10 * scale)
                 ? EigenMethod::general
                 : EigenMethod::self_adjoint;
  }

  if (chosen == EigenMethod::self_adjoint) {
    if (herm_defect > 1e-9 * scale) {
      throw std::invalid_argument("diagonalize: matrix is not Hermitian enough for the "
                                  "self-adjoint solver");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("diagonalize: self-adjoint eigensolver failed to converge");
    }
    result.eigenvalues = solver.eigenvalues();
    result.eigenvectors = solver.eigenvectors();
    result.realness_defect = 0.0;
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("diagonalize: complex eigensolver failed to converge");
    }
    const Eigen::VectorXcd values = solver.eigenvalues();
    result.realness_defect = values.imag().cwiseAbs().maxCoeff();
    if (result.realness_defect > 1e-8 * scale) {
      std::ostringstream os;
      os << "diagonalize: eigenvalues not real (max |Im| = " << result.realness_defect << ")";
      throw std::runtime_error(os.str());
    }
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[a].real() < values[b].real(); });
    result.eigenvalues.resize(dim);
    result.eigenvectors.resize(dim, dim);
    for (int i = 0; i < dim; ++i) {
      result.eigenvalues[i] = values[order[i]].real();
      result.eigenvectors.col(i) = solver.eigenvectors().col(order[i]);
    }
  }

  check_residuals(h, result);
  return result;
}

Eigen::VectorXcd PerturbationSeries::partial_sum(int order) const {
  if (order < 0 || order >= static_cast<int>(terms.size())) {
    throw std::invalid_argument("PerturbationSeries: order out of range");
  }
  Eigen::VectorXcd sum = terms[0];
  for (int l = 1; l <= order; ++l) sum += terms[l];
  return sum;
}

PerturbationSeries ls_series(std::shared_ptr<const SectorBasis> basis, const FockState& reference,
                             Coupling coupling, int order) {
  if (!basis) throw std::invalid_argument("ls_series: null basis");
  if (order < 0) throw std::invalid_argument("ls_series: negative order");
  const auto ref_index = basis->index_of(reference);
  if (!ref_index) {
    throw std::invalid_argument("ls_series: reference state not in the enumerated sector");
  }

  const SectorOperator h0 = build_h0(basis);
  const SectorOperator v = build_v_momentum(basis, coupling);
  const int dim = basis->dimension();
  const Eigen::VectorXd free_energies = h0.matrix.diagonal().real();
  const double w = free_energies[*ref_index];
  const double onshell_tol = 1e-9 * std::max(1.0, std::abs(w));

  PerturbationSeries series;
  series.basis = basis;
  series.reference_index = *ref_index;
  series.reference_energy = w;
  series.terms.reserve(order + 1);

  Eigen::VectorXcd term = Eigen::VectorXcd::Zero(dim);
  term[*ref_index] = 1.0;
  series.terms.push_back(term);

  for (int l = 1; l <= order; ++l) {
    Eigen::VectorXcd image = v.matrix * series.terms.back();
    double onshell_sq = 0.0;
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(dim);
    for (int i = 0; i < dim; ++i) {
      if (std::abs(free_energies[i] - w) <= onshell_tol) {
        onshell_sq += std::norm(image[i]);
      } else {
        next[i] = image[i] / (w - free_energies[i]);
      }
    }
    series.onshell_magnitudes.push_back(std::sqrt(onshell_sq));
    series.terms.push_back(std::move(next));
  }
  return series;
}

double first_order_energy(const PerturbationSeries& series, const SectorOperator& v) {
  if (!series.basis || !v.basis) throw std::invalid_argument("first_order_energy: null basis");
  if (v.matrix.rows() != series.basis->dimension()) {
    throw std::invalid_argument("first_order_energy: operator/basis mismatch");
  }
  const int r = series.reference_index;
  return series.reference_energy + v.matrix(r, r).real();
}

std::vector<SweepRow> convergence_sweep(double box_length, int particles, Coupling coupling,
                                        std::optional<int> momentum_filter,
                                        std::span<const int> cutoffs, int n_lowest) {
  if (n_lowest < 1) throw std::invalid_argument("convergence_sweep: n_lowest must be >= 1");
  for (std::size_t i = 1; i < cutoffs.size(); ++i) {
    if (cutoffs[i] <= cutoffs[i - 1]) {
      throw std::invalid_argument("convergence_sweep: cutoffs must be strictly ascending");
    }
  }
  std::vector<SweepRow> table;
  table.reserve(cutoffs.size());
  for (int m : cutoffs) {
    auto grid = std::make_shared<MomentumGrid>(box_length, m);
    auto basis = enumerate_sector(grid, particles, momentum_filter);
    const SpectrumResult spec = diagonalize(build_hamiltonian(basis, coupling));
    SweepRow row;
    row.mode_cutoff = m;
    const int take = std::min<int>(n_lowest, static_cast<int>(spec.eigenvalues.size()));
    row.lowest.assign(spec.eigenvalues.data(), spec.eigenvalues.data() + take);
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace nnlse
