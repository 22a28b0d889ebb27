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

#include "nnlse/lattice.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nnlse {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// FFTW planning is not thread-safe; execution through the new-array API is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

MomentumGrid::MomentumGrid(double box_length, int mode_cutoff)
    : box_length_(box_length), mode_cutoff_(mode_cutoff) {
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw std::invalid_argument("MomentumGrid: box length must be positive and finite");
  }
  if (mode_cutoff < 1) {
    throw std::invalid_argument("MomentumGrid: mode cutoff must be >= 1");
  }
}

double MomentumGrid::momentum(int mode) const { return kTwoPi * mode / box_length_; }

std::vector<int> MomentumGrid::modes() const {
  std::vector<int> out;
  out.reserve(mode_count());
  for (int n = -mode_cutoff_; n <= mode_cutoff_; ++n) out.push_back(n);
  return out;
}

const std::vector<std::pair<int, int>>& MomentumGrid::pairs_with_sum(int sum) const {
  std::call_once(pair_table_once_, [this] {
    const int m = mode_cutoff_;
    pair_table_.assign(4 * m + 1, {});
    for (int a = -m; a <= m; ++a) {
      for (int b = -m; b <= m; ++b) {
        pair_table_[(a + b) + 2 * m].emplace_back(a, b);
      }
    }
  });
  const int offset = sum + 2 * mode_cutoff_;
  if (offset < 0 || offset >= static_cast<int>(pair_table_.size())) return empty_pairs_;
  return pair_table_[offset];
}

PositionGrid::PositionGrid(const MomentumGrid& grid)
    : PositionGrid(grid.box_length(), grid.mode_count()) {}

PositionGrid::PositionGrid(double box_length, int sites)
    : box_length_(box_length), sites_(sites) {
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw std::invalid_argument("PositionGrid: box length must be positive and finite");
  }
  if (sites < 2) {
    throw std::invalid_argument("PositionGrid: need at least two sites");
  }
  origin_ = (sites_ % 2 == 1) ? (sites_ - 1) / 2 : sites_ / 2;
}

void PositionGrid::check_index(int j) const {
  if (j < 0 || j >= sites_) {
    throw std::out_of_range("PositionGrid: site index out of range");
  }
}

double PositionGrid::position(int j) const {
  check_index(j);
  return (j - origin_) * spacing();
}

int PositionGrid::reflect_index(int j) const {
  check_index(j);
  if (sites_ % 2 == 1) return sites_ - 1 - j;
  return (sites_ - j) % sites_;
}

int PositionGrid::frequency(int bin) const {
  check_index(bin);
  return bin <= sites_ / 2 ? bin : bin - sites_;
}

double PositionGrid::bin_momentum(int bin) const {
  return kTwoPi * frequency(bin) / box_length_;
}

FourierTransform::FourierTransform(const PositionGrid& grid) : grid_(grid) {
  const int n = grid_.site_count();
  buf_in_ = fftw_alloc_complex(n);
  buf_out_ = fftw_alloc_complex(n);
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_forward_ = fftw_plan_dft_1d(n, static_cast<fftw_complex*>(buf_in_),
                                   static_cast<fftw_complex*>(buf_out_), FFTW_FORWARD,
                                   FFTW_ESTIMATE);
  plan_inverse_ = fftw_plan_dft_1d(n, static_cast<fftw_complex*>(buf_in_),
                                   static_cast<fftw_complex*>(buf_out_), FFTW_BACKWARD,
                                   FFTW_ESTIMATE);
}

FourierTransform::~FourierTransform() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inverse_));
  fftw_free(buf_in_);
  fftw_free(buf_out_);
}

Eigen::VectorXcd FourierTransform::forward(const Eigen::VectorXcd& sites) const {
  const int n = grid_.site_count();
  if (sites.size() != n) throw std::invalid_argument("FourierTransform: size mismatch");
  std::lock_guard<std::mutex> lock(exec_mutex_);
  auto* in = static_cast<fftw_complex*>(buf_in_);
  auto* out = static_cast<fftw_complex*>(buf_out_);
  for (int j = 0; j < n; ++j) {
    in[j][0] = sites[j].real();
    in[j][1] = sites[j].imag();
  }
  fftw_execute(static_cast<fftw_plan>(plan_forward_));
  // c_n = dx * exp(-i p_n x_0) * FFT_n, with x_0 = position(0).
  const double dx = grid_.spacing();
  const double x0 = grid_.position(0);
  Eigen::VectorXcd coeff(n);
  for (int k = 0; k < n; ++k) {
    const std::complex<double> phase = std::polar(dx, -grid_.bin_momentum(k) * x0);
    coeff[k] = phase * std::complex<double>(out[k][0], out[k][1]);
  }
  return coeff;
}

Eigen::VectorXcd FourierTransform::inverse(const Eigen::VectorXcd& modes) const {
  const int n = grid_.site_count();
  if (modes.size() != n) throw std::invalid_argument("FourierTransform: size mismatch");
  std::lock_guard<std::mutex> lock(exec_mutex_);
  auto* in = static_cast<fftw_complex*>(buf_in_);
  auto* out = static_cast<fftw_complex*>(buf_out_);
  const double x0 = grid_.position(0);
  for (int k = 0; k < n; ++k) {
    const std::complex<double> v = modes[k] * std::polar(1.0, grid_.bin_momentum(k) * x0);
    in[k][0] = v.real();
    in[k][1] = v.imag();
  }
  fftw_execute(static_cast<fftw_plan>(plan_inverse_));
  Eigen::VectorXcd sites(n);
  const double scale = 1.0 / grid_.box_length();
  for (int j = 0; j < n; ++j) {
    sites[j] = scale * std::complex<double>(out[j][0], out[j][1]);
  }
  return sites;
}

Eigen::VectorXcd FourierTransform::derivative(const Eigen::VectorXcd& sites) const {
  const int n = grid_.site_count();
  Eigen::VectorXcd modes = forward(sites);
  for (int k = 0; k < n; ++k) {
    const bool nyquist = (n % 2 == 0) && k == n / 2;
    modes[k] *= nyquist ? 0.0 : std::complex<double>(0.0, grid_.bin_momentum(k));
  }
  return inverse(modes);
}

}  // namespace nnlse
