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

#ifndef NNLSE_LATTICE_HPP
#define NNLSE_LATTICE_HPP

#include <Eigen/Dense>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace nnlse {

/// Periodic-box momentum lattice.
///
/// Every continuum convention used by the rest of the library is fixed here,
/// once:
///
///   integral dp/(2 pi)  ->  (1/L) sum_n          over n = -M..M
///   2 pi delta(p - q)   ->  L * [n == m]
///   delta(x - y)        ->  [j == l] / dx,       dx = L / (2M + 1)
///   a(p_n)              ->  sqrt(L) * b_n        (unit-normalized modes b_n)
///
/// The mode window is symmetric, {-M, ..., +M}, so that negating every mode
/// index is an exact involution of the lattice.
class MomentumGrid {
 public:
  MomentumGrid(double box_length, int mode_cutoff);

  double box_length() const { return box_length_; }
  int mode_cutoff() const { return mode_cutoff_; }
  int mode_count() const { return 2 * mode_cutoff_ + 1; }
  double spacing() const { return box_length_ / mode_count(); }

  /// p_n = 2 pi n / L. Valid for any integer n; the retained window is
  /// |n| <= mode_cutoff.
  double momentum(int mode) const;
  bool contains_mode(int mode) const { return mode >= -mode_cutoff_ && mode <= mode_cutoff_; }

  /// Retained modes in ascending order, -M..M.
  std::vector<int> modes() const;

  /// Ordered mode pairs grouped by their sum, shared by every interaction
  /// assembly on this grid. pairs_with_sum(s) is empty outside [-2M, 2M].
  const std::vector<std::pair<int, int>>& pairs_with_sum(int sum) const;

 private:
  double box_length_;
  int mode_cutoff_;
  mutable std::once_flag pair_table_once_;
  mutable std::vector<std::vector<std::pair<int, int>>> pair_table_;
  mutable std::vector<std::pair<int, int>> empty_pairs_;
};

/// Uniform reflection-symmetric position grid on [-L/2, L/2).
///
/// x = 0 is always a grid point and x -> -x maps the site set to itself.
/// A grid derived from a MomentumGrid has 2M+1 sites; the classical
/// integrator may also use an even site count (the reflection map stays an
/// exact involution either way).
class PositionGrid {
 public:
  explicit PositionGrid(const MomentumGrid& grid);
  PositionGrid(double box_length, int sites);

  double box_length() const { return box_length_; }
  int site_count() const { return sites_; }
  double spacing() const { return box_length_ / sites_; }

  double position(int j) const;
  /// Index r(j) with x_{r(j)} = -x_j (mod L); an involution.
  int reflect_index(int j) const;
  /// Index of the x = 0 site.
  int origin_index() const { return origin_; }

  /// FFT-layout frequency of bin k: k for k <= N/2, k - N above.
  int frequency(int bin) const;
  /// Momentum 2 pi f / L of FFT bin.
  double bin_momentum(int bin) const;

 private:
  void check_index(int j) const;

  double box_length_;
  int sites_;
  int origin_;
};

/// Discrete Fourier transform fixing the normalization used everywhere:
///
///   forward:  c_n = sum_j psi_j exp(-i p_n x_j) dx
///   inverse:  psi_j = (1/L) sum_n c_n exp(+i p_n x_j)
///
/// so that sum_j |psi_j|^2 dx == (1/L) sum_n |c_n|^2 (discrete Parseval).
/// Coefficients are stored in FFT bin order (PositionGrid::frequency).
/// Instances hold scratch buffers and are not safe to share across threads.
class FourierTransform {
 public:
  explicit FourierTransform(const PositionGrid& grid);
  ~FourierTransform();

  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  Eigen::VectorXcd forward(const Eigen::VectorXcd& sites) const;
  Eigen::VectorXcd inverse(const Eigen::VectorXcd& modes) const;

  /// Spectral derivative d/dx. The Nyquist bin of an even-sized grid gets a
  /// zero multiplier.
  Eigen::VectorXcd derivative(const Eigen::VectorXcd& sites) const;

  const PositionGrid& grid() const { return grid_; }

 private:
  PositionGrid grid_;
  void* plan_forward_;
  void* plan_inverse_;
  void* buf_in_;
  void* buf_out_;
  mutable std::mutex exec_mutex_;
};

}  // namespace nnlse

#endif  // NNLSE_LATTICE_HPP
