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

// End-to-end verification suite. Each check pins its tolerances in code and
// prints one PASS/FAIL line; the exit status is the number of failed checks.
//
// Check 7 is expected to stay red at the pinned parameters: the hard mode
// cutoff makes the two-particle binding energy converge like ~8/(pi p_max),
// which is a 0.227 gap at M = 32, L = 20; reaching 0.1 needs M of about 80.
// The threshold is kept strict rather than tuned to the truncation tail; the
// output prints the measured sequence so the slow tail is visible.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nnlse/bethe.hpp"
#include "nnlse/classical.hpp"
#include "nnlse/metric.hpp"
#include "nnlse/spectra.hpp"

namespace {

using namespace nnlse;
using Complex = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    ok = ok && condition;
    detail << "    " << (condition ? "ok  " : "FAIL") << ' ' << what << '\n';
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// 1. Pathology reproduction: zero-normed single-particle states, cured Gram.
bool check_pathology(std::ostream& os) {
  Check c;
  const double length = 1.0;
  auto grid = std::make_shared<MomentumGrid>(length, 4);
  auto basis = enumerate_sector(grid, 1);

  const GramMatrix dirac = gram(basis, PairingKind::dirac);
  double offzero = 0.0, zero_mode_err = 1.0;
  for (int i = 0; i < basis->dimension(); ++i) {
    if (basis->state(i).momentum_index() != 0) {
      offzero = std::max(offzero, std::abs(dirac.matrix(i, i)));
    } else {
      zero_mode_err = std::abs(dirac.matrix(i, i) - length);
    }
  }
  c.require(offzero <= 1e-14, "Dirac diagonal vanishes off p = 0 (max " + fmt(offzero) + ")");
  c.require(zero_mode_err <= 1e-14, "Dirac p = 0 entry equals L");

  const std::vector<double> spectrum = dirac_gram_spectrum(basis);
  std::vector<double> expected{-length, -length, -length, -length,
                               length,  length,  length,  length,  length};
  double spec_err = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    spec_err = std::max(spec_err, std::abs(spectrum[i] - expected[i]));
  }
  c.require(spec_err <= 1e-14, "Dirac spectrum = {+L x5, -L x4} (max err " + fmt(spec_err) + ")");

  const GramMatrix parity = gram(basis, PairingKind::parity);
  const double id_err =
      (parity.matrix - length * Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff();
  c.require(id_err <= 1e-14, "parity Gram = L * Identity (max err " + fmt(id_err) + ")");
  os << c.detail.str();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 2. Pseudo-Hermiticity of H and N, and a real spectrum from the general solver.
bool check_pseudo_hermiticity(std::ostream& os) {
  Check c;
  auto grid = std::make_shared<MomentumGrid>(kTwoPi, 6);
  auto basis = enumerate_sector(grid, 2);
  const SectorOperator parity = build_parity(basis);
  for (double coupling : {1.0, -1.0}) {
    const SectorOperator h = build_hamiltonian(basis, {coupling});
    const SectorOperator n = build_number(basis);
    const double h_err = (p_adjoint(h, parity).matrix - h.matrix).cwiseAbs().maxCoeff();
    const double n_err = (p_adjoint(n, parity).matrix - n.matrix).cwiseAbs().maxCoeff();
    c.require(h_err <= 1e-12, "P H^h P = H at c = " + fmt(coupling) + " (" + fmt(h_err) + ")");
    c.require(n_err <= 1e-12, "P N^h P = N at c = " + fmt(coupling) + " (" + fmt(n_err) + ")");

    const SpectrumResult spec = diagonalize(h, EigenMethod::general);
    c.require(spec.realness_defect <= 1e-10,
              "spectrum real at c = " + fmt(coupling) + " (max |Im| = " +
                  fmt(spec.realness_defect) + ")");
  }
  os << c.detail.str();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 3. Locality equivalence: momentum-space V == position-space density-density V.
bool check_locality(std::ostream& os) {
  Check c;
  for (int m = 3; m <= 6; ++m) {
    auto grid = std::make_shared<MomentumGrid>(kTwoPi, m);
    for (int n : {2, 3}) {
      auto basis = enumerate_sector(grid, n);
      const SectorOperator vm = build_v_momentum(basis, {1.0});
      const SectorOperator vp = build_v_position(basis, {1.0});
      const double rel = (vm.matrix - vp.matrix).norm() / vm.matrix.norm();
      c.require(rel <= 1e-12,
                "M = " + std::to_string(m) + ", n = " + std::to_string(n) +
                    ": rel Frobenius " + fmt(rel));
    }
  }
  os << c.detail.str();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 4. Commuting charges.
bool check_commuting_charges(std::ostream& os) {
  Check c;
  for (int m = 3; m <= 6; ++m) {
    auto grid = std::make_shared<MomentumGrid>(kTwoPi, m);
    for (int n : {2, 3}) {
      auto basis = enumerate_sector(grid, n);
      const SectorOperator h = build_hamiltonian(basis, {1.0});
      const SectorOperator num = build_number(basis);
      const SectorOperator mom = build_momentum(basis);
      const double hn = (h.matrix * num.matrix - num.matrix * h.matrix).cwiseAbs().maxCoeff();
      const double hp = (h.matrix * mom.matrix - mom.matrix * h.matrix).cwiseAbs().maxCoeff();
      c.require(hn <= 1e-12 && hp <= 1e-12,
                "M = " + std::to_string(m) + ", n = " + std::to_string(n) + ": |[H,N]| = " +
                    fmt(hn) + ", |[H,P]| = " + fmt(hp));
    }
  }
  os << c.detail.str();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 5. Bethe eigenstate verification.
bool check_bethe_eigenstates(std::ostream& os) {
  Check c;
  const BetheState two = BetheState::scattering({-1.0, 2.0}, 1.5);
  const double r200 = verify_eigenstate_fd(two, 30.0, 201).residual;
  const double r400 = verify_eigenstate_fd(two, 30.0, 401).residual;
  const double r800 = verify_eigenstate_fd(two, 30.0, 801).residual;
  c.require(r200 / r400 > 1.8, "FD residual ratio 201 -> 401: " + fmt(r200 / r400));
  c.require(r400 / r800 > 1.8, "FD residual ratio 401 -> 801: " + fmt(r400 / r800));

  const double contact[] = {0.4, 0.4};
  const double cusp2 = check_cusp(two, 0, 1, contact);
  c.require(cusp2 < 1e-10, "N = 2 cusp residual " + fmt(cusp2));

  std::mt19937_64 rng(20260811);
  std::uniform_real_distribution<double> kdist(-3.0, 3.0);
  std::uniform_real_distribution<double> cdist(0.5, 2.5);
  std::uniform_real_distribution<double> xdist(-2.0, 2.0);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> ks;
    do {
      ks = {kdist(rng), kdist(rng), kdist(rng)};
      std::sort(ks.begin(), ks.end());
    } while (ks[1] - ks[0] < 0.4 || ks[2] - ks[1] < 0.4);
    const BetheState three = BetheState::scattering(ks, cdist(rng));
    const double xs[] = {xdist(rng), xdist(rng), xdist(rng)};
    double worst = 0.0;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      worst = std::max(worst, check_cusp(three, i, j, xs));
    }
    c.require(worst < 1e-9, "N = 3 trial " + std::to_string(trial) + " worst pairwise cusp " +
                                fmt(worst));
  }
  os << c.detail.str();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 6. S-matrix properties.
bool check_s_matrix(std::ostream& os) {
  Check c;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  double worst_modulus = 0.0, worst_inverse = 0.0;
  int draws = 0;
  while (draws < 10000) {
    const double k1 = dist(rng), k2 = dist(rng), coupling = dist(rng);
    if (std::abs(k2 - k1) < 1e-8 && std::abs(coupling) < 1e-8) continue;
    ++draws;
    const Complex s = s_matrix_phase(k1, k2, coupling);
    worst_modulus = std::max(worst_modulus, std::abs(std::abs(s) - 1.0));
    worst_inverse =
        std::max(worst_inverse, std::abs(s * s_matrix_phase(k2, k1, coupling) - 1.0));
  }
  c.require(worst_modulus <= 1e-12, "unit modulus over 1e4 draws (worst " + fmt(worst_modulus) + ")");
  c.require(worst_inverse <= 1e-12, "exchange inverse over 1e4 draws (worst " + fmt(worst_inverse) + ")");
  const double at_unit = std::abs(s_matrix_phase(0.0, 1.0, 1.0) - Complex(0.0, -1.0));
  c.require(at_unit <= 1e-12, "value -i at (dk, c) = (1, 1)");
  os << c.detail.str();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 7. Bound state: lattice convergence toward -c^2/2 plus the FD oracle.
bool check_bound_state(std::ostream& os) {
  Check c;
  const std::vector<int> cutoffs{8, 16, 24, 32};
  const auto rows = convergence_sweep(20.0, 2, {-2.0}, 0, cutoffs, 1);
  std::ostringstream seq;
  bool decreasing = true, above = true;
  double prev = std::numeric_limits<double>::infinity();
  for (const SweepRow& row : rows) {
    seq << " E(" << row.mode_cutoff << ") = " << fmt(row.lowest[0]);
    decreasing = decreasing && row.lowest[0] < prev;
    above = above && row.lowest[0] > -2.0;
    prev = row.lowest[0];
  }
  c.require(decreasing, "ground energy strictly decreasing:" + seq.str());
  c.require(above, "approach toward -2 from above");
  const double gap = std::abs(rows.back().lowest[0] + 2.0);
  c.require(gap < 0.1, "final absolute gap " + fmt(gap) + " < 0.1 (hard-cutoff tail ~8/(pi p_max))");

  const BetheState bound = BetheState::bound_pair(0.0, -2.0);
  const double r400 = verify_eigenstate_fd(bound, 30.0, 401).residual;
  const double r800 = verify_eigenstate_fd(bound, 30.0, 801).residual;
  c.require(bound.energy().real() == -2.0, "bound pair energy is exactly -c^2/2");
  c.require(r800 < r400 && r400 / r800 > 1.8,
            "FD oracle on exp(-|x1-x2|): O(h) residuals " + fmt(r400) + " -> " + fmt(r800));
  os << c.detail.str();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 8. First-order Lippmann-Schwinger energy vs exact eigenvalue slope.
bool check_ls_first_order(std::ostream& os) {
  Check c;
  auto grid = std::make_shared<MomentumGrid>(kTwoPi, 6);
  auto basis = enumerate_sector(grid, 2, 1);
  const FockState ref = FockState::from_modes({0, 1});

  const PerturbationSeries series = ls_series(basis, ref, {1.0}, 1);
  const SectorOperator v = build_v_momentum(basis, {1.0});
  const double first_order = first_order_energy(series, v) - series.reference_energy;

  const double delta = 1e-3;
  const double e_plus = diagonalize(build_hamiltonian(basis, {delta})).eigenvalues[0];
  const double e_minus = diagonalize(build_hamiltonian(basis, {-delta})).eigenvalues[0];
  const double slope = (e_plus - e_minus) / (2.0 * delta);
  const double rel = std::abs(slope - first_order) / std::abs(first_order);
  c.require(rel <= 1e-6, "slope " + fmt(slope) + " vs <ref|V|ref> " + fmt(first_order) +
                             " (rel " + fmt(rel) + ")");
  os << c.detail.str();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 9. Ring-Bethe rapidities against the diagonalization sweep.
bool check_ring_bethe(std::ostream& os) {
  Check c;
  const std::vector<int> qn{0, 1};
  const RingBetheResult ring = solve_ring_bethe(kTwoPi, 1.0, qn);
  c.require(ring.residual < 1e-12, "Newton residual " + fmt(ring.residual));
  const double exact = ring.state.energy().real();

  const std::vector<int> cutoffs{4, 8, 12, 16, 20, 24};
  const auto rows = convergence_sweep(kTwoPi, 2, {1.0}, 1, cutoffs, 1);
  bool monotone = true, above = true;
  double prev = std::numeric_limits<double>::infinity();
  for (const SweepRow& row : rows) {
    monotone = monotone && row.lowest[0] < prev;
    above = above && row.lowest[0] > exact;
    prev = row.lowest[0];
  }
  const double rel_gap = std::abs(rows.back().lowest[0] - exact) / std::abs(exact);
  c.require(monotone && above, "sweep approaches E = " + fmt(exact) + " monotonically from above");
  c.require(rel_gap < 0.05, "final-cutoff relative gap " + fmt(rel_gap) + " < 5%");
  os << c.detail.str();
  return c.ok;
}

// ---------------------------------------------------------------------------
// 10. Classical conservation, free propagation, splitting order.
bool check_classical(std::ostream& os) {
  Check c;
  auto grid = std::make_shared<PositionGrid>(40.0, 512);
  const ClassicalField packet = make_gaussian_field(grid, 1.0, 2.0, 2.5, 2);

  for (double coupling : {1.0, -1.0}) {
    const ChargeTriple q0 = charges(packet, {coupling});
    const ClassicalField out = evolve(packet, {coupling}, 1e-4, 10000);  // t = 1
    const ChargeTriple q1 = charges(out, {coupling});
    const double dn = std::abs(q1.n - q0.n) / std::max(std::abs(q0.n), 1e-12);
    const double dp = std::abs(q1.p - q0.p) / std::max(std::abs(q0.p), 1e-12);
    const double dh = std::abs(q1.h - q0.h) / std::max(std::abs(q0.h), 1e-12);
    c.require(dn < 1e-6 && dp < 1e-6 && dh < 1e-6,
              "c = " + fmt(coupling) + " drifts N/P/H = " + fmt(dn) + ", " + fmt(dp) + ", " +
                  fmt(dh));
  }

  const ClassicalField wave = make_plane_wave(grid, 0.7, 3);
  const ClassicalField wave_out = evolve(wave, {0.0}, 1e-3, 1000);
  const double k = kTwoPi * 3 / 40.0;
  double err = 0.0;
  for (int j = 0; j < grid->site_count(); ++j) {
    const Complex exact = 0.7 * std::polar(1.0, k * grid->position(j) - k * k * 1.0);
    err = std::max(err, std::abs(wave_out.values[j] - exact));
  }
  c.require(err < 1e-10, "free plane wave error " + fmt(err));

  auto small_grid = std::make_shared<PositionGrid>(40.0, 256);
  const ClassicalField small = make_gaussian_field(small_grid, 1.0, 2.0, 2.5, 2);
  auto run = [&](double dt) {
    return evolve(small, {1.0}, dt, static_cast<int>(std::lround(0.25 / dt))).values;
  };
  const Eigen::VectorXcd ref = run(1.25e-4);
  const double e1 = (run(2e-3) - ref).cwiseAbs().maxCoeff();
  const double e2 = (run(1e-3) - ref).cwiseAbs().maxCoeff();
  const double e3 = (run(5e-4) - ref).cwiseAbs().maxCoeff();
  const double o1 = std::log2(e1 / e2);
  const double o2 = std::log2(e2 / e3);
  c.require(o1 > 1.8 && o1 < 2.2, "splitting order (2e-3 -> 1e-3): " + fmt(o1));
  c.require(o2 > 1.8 && o2 < 2.2, "splitting order (1e-3 -> 5e-4): " + fmt(o2));
  os << c.detail.str();
  return c.ok;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(std::ostream&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "pathological Dirac pairing and parity cure", check_pathology},
      {2, "pseudo-Hermiticity and real spectrum", check_pseudo_hermiticity},
      {3, "momentum-space V equals density-density V", check_locality},
      {4, "H commutes with N and P", check_commuting_charges},
      {5, "Bethe eigenstates against the FD oracle", check_bethe_eigenstates},
      {6, "S-matrix unitarity and exchange inverse", check_s_matrix},
      {7, "attractive bound state at -c^2/2", check_bound_state},
      {8, "Lippmann-Schwinger first order vs eigenvalue slope", check_ls_first_order},
      {9, "ring-Bethe rapidities vs diagonalization", check_ring_bethe},
      {10, "classical charge conservation and splitting order", check_classical},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  int failures = 0;
  for (const Criterion& criterion : criteria()) {
    if (only != 0 && criterion.id != only) continue;
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail << "    exception: " << e.what() << '\n';
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << criterion.id << (ok ? " PASS " : " FAIL ") << '('
              << fmt(seconds) << " s) " << criterion.name << '\n'
              << detail.str();
    if (!ok) ++failures;
  }
  return failures;
}
