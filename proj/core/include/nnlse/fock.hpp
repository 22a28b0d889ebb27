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

#ifndef NNLSE_FOCK_HPP
#define NNLSE_FOCK_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nnlse/lattice.hpp"

namespace nnlse {

/// Bosonic occupation configuration over momentum modes.
///
/// Canonical form: (mode, count) pairs sorted by mode, counts >= 1. Two
/// physically equal states always compare equal.
class FockState {
 public:
  FockState() = default;

  static FockState vacuum() { return FockState(); }
  /// Builds the state occupying the listed modes (repetitions allowed).
  static FockState from_modes(const std::vector<int>& modes);

  int particle_number() const;
  /// Sum of n * count(n); the total momentum is 2 pi/L times this.
  int momentum_index() const;
  int count(int mode) const;
  bool is_vacuum() const { return occ_.empty(); }

  /// Occupied modes listed with multiplicity, ascending.
  std::vector<int> modes_with_multiplicity() const;
  const std::vector<std::pair<int, int>>& occupations() const { return occ_; }

  /// State with every mode index negated (the parity image).
  FockState negated() const;

  bool operator==(const FockState& other) const { return occ_ == other.occ_; }
  std::string to_string() const;

 private:
  friend std::pair<FockState, double> apply_creation(const FockState&, int);
  friend std::optional<std::pair<FockState, double>> apply_annihilation(const FockState&, int);

  std::vector<std::pair<int, int>> occ_;
};

struct FockStateHash {
  std::size_t operator()(const FockState& s) const;
};

/// b+_n |s>; amplitude sqrt(count + 1).
std::pair<FockState, double> apply_creation(const FockState& state, int mode);

/// b_n |s>; amplitude sqrt(count). Annihilating an unoccupied mode yields
/// the zero vector, reported as an empty optional rather than a sentinel
/// state.
std::optional<std::pair<FockState, double>> apply_annihilation(const FockState& state, int mode);

/// Indexed basis of a fixed-particle-number sector, optionally restricted to
/// one total-momentum-index block. Enumeration order is lexicographic in the
/// non-decreasing mode tuple, so two constructions of the same sector agree.
/// Immutable after construction.
class SectorBasis {
 public:
  static std::shared_ptr<const SectorBasis> enumerate(
      std::shared_ptr<const MomentumGrid> grid, int particles,
      std::optional<int> momentum_filter = std::nullopt);

  const MomentumGrid& grid() const { return *grid_; }
  std::shared_ptr<const MomentumGrid> grid_ptr() const { return grid_; }
  int particles() const { return particles_; }
  std::optional<int> momentum_filter() const { return momentum_filter_; }

  int dimension() const { return static_cast<int>(states_.size()); }
  const FockState& state(int index) const { return states_.at(index); }
  const std::vector<FockState>& states() const { return states_; }
  std::optional<int> index_of(const FockState& state) const;

 private:
  SectorBasis() = default;

  std::shared_ptr<const MomentumGrid> grid_;
  int particles_ = 0;
  std::optional<int> momentum_filter_;
  std::vector<FockState> states_;
  std::unordered_map<FockState, int, FockStateHash> index_;
};

std::shared_ptr<const SectorBasis> enumerate_sector(
    std::shared_ptr<const MomentumGrid> grid, int particles,
    std::optional<int> momentum_filter = std::nullopt);

}  // namespace nnlse

#endif  // NNLSE_FOCK_HPP
