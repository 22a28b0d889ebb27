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

#include "nnlse/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nnlse {

FockState FockState::from_modes(const std::vector<int>& modes) {
  FockState out;
  std::vector<int> sorted = modes;
  std::sort(sorted.begin(), sorted.end());
  for (int m : sorted) {
    if (!out.occ_.empty() && out.occ_.back().first == m) {
      ++out.occ_.back().second;
    } else {
      out.occ_.emplace_back(m, 1);
    }
  }
  return out;
}

int FockState::particle_number() const {
  int n = 0;
  for (const auto& [mode, count] : occ_) n += count;
  return n;
}

int FockState::momentum_index() const {
  int q = 0;
  for (const auto& [mode, count] : occ_) q += mode * count;
  return q;
}

int FockState::count(int mode) const {
  auto it = std::lower_bound(occ_.begin(), occ_.end(), mode,
                             [](const auto& p, int m) { return p.first < m; });
  return (it != occ_.end() && it->first == mode) ? it->second : 0;
}

std::vector<int> FockState::modes_with_multiplicity() const {
  std::vector<int> out;
  out.reserve(particle_number());
  for (const auto& [mode, count] : occ_) {
    for (int i = 0; i < count; ++i) out.push_back(mode);
  }
  return out;
}

FockState FockState::negated() const {
  FockState out;
  out.occ_.reserve(occ_.size());
  for (auto it = occ_.rbegin(); it != occ_.rend(); ++it) {
    out.occ_.emplace_back(-it->first, it->second);
  }
  return out;
}

std::string FockState::to_string() const {
  std::ostringstream os;
  os << '|';
  bool first = true;
  for (const auto& [mode, count] : occ_) {
    if (!first) os << ' ';
    first = false;
    os << mode << '^' << count;
  }
  os << '>';
  return os.str();
}

std::size_t FockStateHash::operator()(const FockState& s) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [mode, count] : s.occupations()) {
    std::size_t x = (static_cast<std::size_t>(static_cast<unsigned>(mode)) << 32) ^
                    static_cast<unsigned>(count);
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::pair<FockState, double> apply_creation(const FockState& state, int mode) {
  FockState out = state;
  auto it = std::lower_bound(out.occ_.begin(), out.occ_.end(), mode,
                             [](const auto& p, int m) { return p.first < m; });
  if (it != out.occ_.end() && it->first == mode) {
    const double amp = std::sqrt(static_cast<double>(it->second + 1));
    ++it->second;
    return {std::move(out), amp};
  }
  out.occ_.insert(it, {mode, 1});
  return {std::move(out), 1.0};
}

std::optional<std::pair<FockState, double>> apply_annihilation(const FockState& state, int mode) {
  FockState out = state;
  auto it = std::lower_bound(out.occ_.begin(), out.occ_.end(), mode,
                             [](const auto& p, int m) { return p.first < m; });
  if (it == out.occ_.end() || it->first != mode) return std::nullopt;
  const double amp = std::sqrt(static_cast<double>(it->second));
  if (--it->second == 0) out.occ_.erase(it);
  return std::make_pair(std::move(out), amp);
}

namespace {

void enumerate_rec(const std::vector<int>& modes, std::size_t start, int remaining,
                   std::vector<int>& current, const std::optional<int>& filter,
                   std::vector<FockState>& out) {
  if (remaining == 0) {
    FockState s = FockState::from_modes(current);
    if (!filter || s.momentum_index() == *filter) out.push_back(std::move(s));
    return;
  }
  for (std::size_t i = start; i < modes.size(); ++i) {
    current.push_back(modes[i]);
    enumerate_rec(modes, i, remaining - 1, current, filter, out);
    current.pop_back();
  }
}

}  // namespace

std::shared_ptr<const SectorBasis> SectorBasis::enumerate(
    std::shared_ptr<const MomentumGrid> grid, int particles,
    std::optional<int> momentum_filter) {
  if (!grid) throw std::invalid_argument("SectorBasis: null grid");
  if (particles < 0) throw std::invalid_argument("SectorBasis: negative particle number");

  auto basis = std::shared_ptr<SectorBasis>(new SectorBasis());
  basis->grid_ = std::move(grid);
  basis->particles_ = particles;
  basis->momentum_filter_ = momentum_filter;

  const std::vector<int> modes = basis->grid_->modes();
  std::vector<int> current;
  current.reserve(particles);
  enumerate_rec(modes, 0, particles, current, momentum_filter, basis->states_);

  basis->index_.reserve(basis->states_.size());
  for (int i = 0; i < static_cast<int>(basis->states_.size()); ++i) {
    basis->index_.emplace(basis->states_[i], i);
  }
  return basis;
}

std::optional<int> SectorBasis::index_of(const FockState& state) const {
  auto it = index_.find(state);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<const SectorBasis> enumerate_sector(
    std::shared_ptr<const MomentumGrid> grid, int particles,
    std::optional<int> momentum_filter) {
  return SectorBasis::enumerate(std::move(grid), particles, momentum_filter);
}

}  // namespace nnlse
