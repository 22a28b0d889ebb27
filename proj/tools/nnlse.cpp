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

// Command-line driver. Every computation is exposed as a subcommand taking a
// JSON run configuration (--config) with flag overrides; flags win. Exit
// codes: 0 success, 1 validation error, 2 numerical failure.

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "nnlse/bethe.hpp"
#include "nnlse/classical.hpp"
#include "nnlse/export.hpp"
#include "nnlse/metric.hpp"
#include "nnlse/spectra.hpp"

namespace {

using json = nlohmann::json;
using namespace nnlse;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Run configuration: JSON file merged under explicit flags. Unknown keys are
// rejected so that typos never silently fall back to defaults.
class RunConfig {
 public:
  RunConfig(const std::string& path, std::set<std::string> known_keys)
      : known_(std::move(known_keys)) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not readable: " + path);
    in >> data_;
    if (!data_.is_object()) throw std::invalid_argument("config root must be a JSON object");
    for (const auto& [key, value] : data_.items()) {
      if (!known_.count(key)) {
        throw std::invalid_argument("unknown config field '" + key + "'");
      }
    }
  }

  template <typename T>
  void merge(const CLI::Option* flag, const std::string& key, T& value) const {
    if (flag != nullptr && flag->count() > 0) return;  // flags win
    if (data_.contains(key) && !data_[key].is_null()) value = data_[key].get<T>();
  }

  void merge_optional_int(const CLI::Option* flag, const std::string& key,
                          std::optional<int>& value) const {
    if (flag != nullptr && flag->count() > 0) return;
    if (data_.contains(key) && !data_[key].is_null()) value = data_[key].get<int>();
  }

 private:
  json data_;
  std::set<std::string> known_;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  return out;
}

void emit_report(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << '\n';
  } else {
    open_output(out_path) << report.dump(2) << '\n';
    std::cout << "wrote " << out_path << '\n';
  }
}

// ---------------------------------------------------------------------------

struct SectorParams {
  double length = kTwoPi;
  int modes = 6;
  int particles = 2;
  std::optional<int> block;
  double coupling = 1.0;

  std::shared_ptr<const SectorBasis> make_basis() const {
    auto grid = std::make_shared<MomentumGrid>(length, modes);
    return enumerate_sector(grid, particles, block);
  }
};

struct SectorFlags {
  CLI::Option* length = nullptr;
  CLI::Option* modes = nullptr;
  CLI::Option* particles = nullptr;
  CLI::Option* block = nullptr;
  CLI::Option* coupling = nullptr;
  int block_value = 0;
};

SectorFlags add_sector_options(CLI::App* cmd, SectorParams& p, SectorFlags& f) {
  f.length = cmd->add_option("--length", p.length, "ring circumference L");
  f.modes = cmd->add_option("--modes", p.modes, "mode cutoff M (window -M..M)");
  f.particles = cmd->add_option("--particles", p.particles, "particle number n");
  f.block = cmd->add_option("--momentum-block", f.block_value,
                            "restrict to one total momentum index");
  f.coupling = cmd->add_option("--coupling", p.coupling, "interaction strength c");
  return f;
}

void merge_sector(const RunConfig& cfg, const SectorFlags& f, SectorParams& p) {
  cfg.merge(f.length, "length", p.length);
  cfg.merge(f.modes, "modes", p.modes);
  cfg.merge(f.particles, "particles", p.particles);
  cfg.merge(f.coupling, "coupling", p.coupling);
  if (f.block->count() > 0) {
    p.block = f.block_value;
  } else {
    cfg.merge_optional_int(nullptr, "momentum_block", p.block);
  }
}

const std::set<std::string> kSectorKeys = {"length", "modes", "particles", "momentum_block",
                                           "coupling"};

std::set<std::string> with_sector_keys(std::set<std::string> extra) {
  extra.insert(kSectorKeys.begin(), kSectorKeys.end());
  return extra;
}

// ---------------------------------------------------------------------------

int run_spectrum(const SectorParams& sector, const std::string& out,
                 const std::string& dump_operator, const std::string& dump_format,
                 const std::string& method_name) {
  EigenMethod method = EigenMethod::automatic;
  if (method_name == "general") method = EigenMethod::general;
  else if (method_name == "self-adjoint") method = EigenMethod::self_adjoint;
  else if (method_name != "auto") throw std::invalid_argument("unknown --method " + method_name);

  auto basis = sector.make_basis();
  const SectorOperator h = build_hamiltonian(basis, {sector.coupling});
  const SpectrumResult spec = diagonalize(h, method);

  auto os = open_output(out);
  write_spectrum_csv(os, spec);
  if (!dump_operator.empty()) {
    auto dump = open_output(dump_operator);
    if (dump_format == "triplet") {
      write_matrix_triplets(dump, h.matrix);
    } else if (dump_format == "dense") {
      write_matrix_csv(dump, h.matrix);
    } else {
      throw std::invalid_argument("unknown --dump-format " + dump_format);
    }
  }
  std::cout << "dimension " << basis->dimension() << ", lowest eigenvalue "
            << (spec.eigenvalues.size() ? format_full(spec.eigenvalues[0]) : "n/a") << ", wrote "
            << out << '\n';
  return 0;
}

int run_gram(const SectorParams& sector, const std::string& kind_name, const std::string& out,
             const std::string& spectrum_out) {
  PairingKind kind;
  if (kind_name == "dirac") kind = PairingKind::dirac;
  else if (kind_name == "parity") kind = PairingKind::parity;
  else throw std::invalid_argument("unknown --kind " + kind_name);

  auto basis = sector.make_basis();
  const GramMatrix g = gram(basis, kind);
  auto os = open_output(out);
  write_matrix_csv(os, g.matrix);

  if (!spectrum_out.empty()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g.matrix);
    json values = json::array();
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      values.push_back(solver.eigenvalues()[i]);
    }
    emit_report(json{{"pairing", kind_name}, {"eigenvalues", values}}, spectrum_out);
  }
  std::cout << "wrote " << basis->dimension() << "x" << basis->dimension() << " " << kind_name
            << " Gram to " << out << '\n';
  return 0;
}

int run_hermiticity(const SectorParams& sector, const std::string& out) {
  auto basis = sector.make_basis();
  const SectorOperator h = build_hamiltonian(basis, {sector.coupling});
  const SectorOperator n = build_number(basis);
  const SectorOperator p = build_momentum(basis);
  const SectorOperator parity = build_parity(basis);
  const SectorOperator vm = build_v_momentum(basis, {sector.coupling});
  const SectorOperator vp = build_v_position(basis, {sector.coupling});
  const SpectrumResult spec = diagonalize(h, EigenMethod::general);

  json report{
      {"dimension", basis->dimension()},
      {"p_adjoint_h_defect", (p_adjoint(h, parity).matrix - h.matrix).cwiseAbs().maxCoeff()},
      {"p_adjoint_n_defect", (p_adjoint(n, parity).matrix - n.matrix).cwiseAbs().maxCoeff()},
      {"commutator_hn", (h.matrix * n.matrix - n.matrix * h.matrix).cwiseAbs().maxCoeff()},
      {"commutator_hp", (h.matrix * p.matrix - p.matrix * h.matrix).cwiseAbs().maxCoeff()},
      {"v_position_vs_momentum_rel",
       vm.matrix.norm() > 0 ? (vm.matrix - vp.matrix).norm() / vm.matrix.norm() : 0.0},
      {"spectrum_max_imag", spec.realness_defect},
      {"max_eigen_residual", spec.residuals.size() ? spec.residuals.maxCoeff() : 0.0},
  };
  emit_report(report, out);
  return 0;
}

int run_ls_series(const SectorParams& sector, const std::vector<int>& reference, int order,
                  const std::string& out) {
  if (reference.empty()) throw std::invalid_argument("--reference must list occupied modes");
  const FockState ref = FockState::from_modes(reference);
  if (sector.block && *sector.block != ref.momentum_index()) {
    throw std::invalid_argument("--momentum-block contradicts the reference state's momentum");
  }
  auto grid = std::make_shared<MomentumGrid>(sector.length, sector.modes);
  auto basis = enumerate_sector(grid, ref.particle_number(), ref.momentum_index());

  const PerturbationSeries series = ls_series(basis, ref, {sector.coupling}, order);
  const SectorOperator v = build_v_momentum(basis, {sector.coupling});

  json orders = json::array();
  for (std::size_t l = 0; l < series.terms.size(); ++l) {
    json item{{"order", l}, {"term_norm", series.terms[l].norm()}};
    if (l >= 1) item["onshell_magnitude"] = series.onshell_magnitudes[l - 1];
    orders.push_back(item);
  }
  json report{
      {"reference", reference},
      {"reference_energy", series.reference_energy},
      {"first_order_energy", first_order_energy(series, v)},
      {"orders", orders},
  };
  emit_report(report, out);
  return 0;
}

int run_bethe_verify(const std::vector<double>& rapidities, double coupling, double box, int grid,
                     unsigned long seed, const std::string& out) {
  const BetheState state = BetheState::scattering(rapidities, coupling);
  const int n = state.size();
  if (grid == 0) grid = (n == 2) ? 201 : 61;  // N^grid points; keep three-body runs desk-sized
  const int fine_grid = (n == 2) ? 2 * grid - 1 : grid + grid / 2;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xdist(-box / 15.0, box / 15.0);
  std::vector<double> xs(n);
  for (double& x : xs) x = xdist(rng);

  json cusps = json::array();
  json phases = json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      cusps.push_back(json{{"pair", {i, j}}, {"residual", check_cusp(state, i, j, xs)}});
      const auto s = s_matrix_phase(state.rapidity(i).real(), state.rapidity(j).real(), coupling);
      phases.push_back(json{{"pair", {i, j}}, {"re", s.real()}, {"im", s.imag()}});
    }
  }

  const FdVerification coarse = verify_eigenstate_fd(state, box, grid);
  const FdVerification fine = verify_eigenstate_fd(state, box, fine_grid);
  json report{
      {"rapidities", rapidities},
      {"coupling", coupling},
      {"energy", state.energy().real()},
      {"s_matrix_phases", phases},
      {"cusp_residuals", cusps},
      {"fd", json::array({json{{"points", coarse.points_per_dim},
                               {"h", coarse.grid_spacing},
                               {"residual", coarse.residual}},
                          json{{"points", fine.points_per_dim},
                               {"h", fine.grid_spacing},
                               {"residual", fine.residual}}})},
      {"fd_refinement_ratio", coarse.residual / fine.residual},
  };
  emit_report(report, out);
  return 0;
}

int run_ring_bethe(double length, double coupling, const std::vector<int>& quantum_numbers,
                   const std::string& out) {
  const RingBetheResult result = solve_ring_bethe(length, coupling, quantum_numbers);
  json ks = json::array();
  for (int i = 0; i < result.state.size(); ++i) ks.push_back(result.state.rapidity(i).real());
  json report{
      {"quantum_numbers", quantum_numbers},
      {"length", length},
      {"coupling", coupling},
      {"rapidities", ks},
      {"energy", result.state.energy().real()},
      {"momentum", result.state.momentum().real()},
      {"residual", result.residual},
      {"iterations", result.iterations},
  };
  emit_report(report, out);
  return 0;
}

int run_bound_state(double length, double coupling, const std::vector<int>& cutoffs, double box,
                    int grid, const std::string& out) {
  if (!(coupling < 0.0)) throw std::invalid_argument("bound-state requires attractive coupling");
  const auto rows = convergence_sweep(length, 2, {coupling}, 0, cutoffs, 1);
  const double target = -coupling * coupling / 2.0;

  json sweep = json::array();
  for (const SweepRow& row : rows) {
    sweep.push_back(json{{"mode_cutoff", row.mode_cutoff},
                         {"ground_energy", row.lowest[0]},
                         {"gap", std::abs(row.lowest[0] - target)}});
  }
  const BetheState bound = BetheState::bound_pair(0.0, coupling);
  const FdVerification coarse = verify_eigenstate_fd(bound, box, grid);
  const FdVerification fine = verify_eigenstate_fd(bound, box, 2 * grid - 1);
  json report{
      {"coupling", coupling},
      {"target_energy", target},
      {"sweep", sweep},
      {"fd", json::array({json{{"points", coarse.points_per_dim}, {"residual", coarse.residual}},
                          json{{"points", fine.points_per_dim}, {"residual", fine.residual}}})},
  };
  emit_report(report, out);
  return 0;
}

int run_evolve(double length, int sites, double coupling, double dt, int steps, int stride,
               const std::string& initial, double amplitude, double center, double width,
               int wavenumber, const std::string& out, const std::string& snapshots) {
  auto grid = std::make_shared<PositionGrid>(length, sites);
  ClassicalField field = (initial == "plane")
                             ? make_plane_wave(grid, amplitude, wavenumber)
                             : make_gaussian_field(grid, amplitude, center, width, wavenumber);
  if (initial != "plane" && initial != "gaussian") {
    throw std::invalid_argument("unknown --initial " + initial);
  }
  if (stride < 1) throw std::invalid_argument("--stride must be >= 1");

  std::ofstream snap;
  if (!snapshots.empty()) snap = open_output(snapshots);

  std::vector<ChargeTriple> trajectory;
  trajectory.push_back(charges(field, {coupling}));
  if (snap.is_open()) write_field_csv(snap, field);
  for (int done = 0; done < steps;) {
    const int chunk = std::min(stride, steps - done);
    field = evolve(field, {coupling}, dt, chunk);
    done += chunk;
    trajectory.push_back(charges(field, {coupling}));
    if (snap.is_open()) write_field_csv(snap, field);
  }

  auto os = open_output(out);
  write_trajectory_csv(os, trajectory);
  const auto& first = trajectory.front();
  const auto& last = trajectory.back();
  std::cout << "evolved to t = " << format_full(last.time) << ", |N drift| = "
            << format_full(std::abs(last.n - first.n)) << ", wrote " << out << '\n';
  return 0;
}

int run_sweep(const SectorParams& sector, const std::vector<int>& cutoffs, int n_lowest,
              const std::string& out) {
  const auto rows =
      convergence_sweep(sector.length, sector.particles, {sector.coupling}, sector.block,
                        std::span<const int>(cutoffs.data(), cutoffs.size()), n_lowest);
  auto os = open_output(out);
  write_sweep_csv(os, rows);
  std::cout << "wrote " << rows.size() << " cutoffs to " << out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum nonlocal NLSE workbench: sector spectra, inner-product pairings, "
               "Bethe-state verification, classical evolution"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON run configuration (flags override it)")
      ->expected(1);

  // spectrum ----------------------------------------------------------------
  auto* spectrum = app.add_subcommand("spectrum", "diagonalize a sector Hamiltonian");
  spectrum->fallthrough();
  SectorParams sp_sector;
  SectorFlags sp_flags;
  add_sector_options(spectrum, sp_sector, sp_flags);
  std::string sp_out = "spectrum.csv", sp_dump, sp_dump_format = "dense", sp_method = "auto";
  auto* sp_out_f = spectrum->add_option("--out", sp_out, "spectrum CSV path");
  auto* sp_dump_f = spectrum->add_option("--dump-operator", sp_dump, "also export H");
  auto* sp_dumpfmt_f = spectrum->add_option("--dump-format", sp_dump_format, "dense|triplet");
  auto* sp_method_f = spectrum->add_option("--method", sp_method, "auto|general|self-adjoint");

  // gram --------------------------------------------------------------------
  auto* gram_cmd = app.add_subcommand("gram", "assemble a Dirac or parity Gram matrix");
  gram_cmd->fallthrough();
  SectorParams gr_sector;
  SectorFlags gr_flags;
  add_sector_options(gram_cmd, gr_sector, gr_flags);
  std::string gr_kind = "dirac", gr_out = "gram.csv", gr_spec_out;
  auto* gr_kind_f = gram_cmd->add_option("--kind", gr_kind, "dirac|parity");
  auto* gr_out_f = gram_cmd->add_option("--out", gr_out, "Gram CSV path");
  auto* gr_spec_f = gram_cmd->add_option("--spectrum-out", gr_spec_out, "Gram eigenvalues JSON");

  // hermiticity ---------------------------------------------------------------
  auto* herm = app.add_subcommand("hermiticity", "pseudo-Hermiticity and charge-commutator report");
  herm->fallthrough();
  SectorParams hm_sector;
  SectorFlags hm_flags;
  add_sector_options(herm, hm_sector, hm_flags);
  std::string hm_out;
  auto* hm_out_f = herm->add_option("--out", hm_out, "JSON report path (stdout if absent)");

  // ls-series -----------------------------------------------------------------
  auto* ls = app.add_subcommand("ls-series", "Lippmann-Schwinger perturbation series diagnostics");
  ls->fallthrough();
  SectorParams ls_sector;
  SectorFlags ls_flags;
  add_sector_options(ls, ls_sector, ls_flags);
  std::vector<int> ls_reference{0, 1};
  int ls_order = 4;
  std::string ls_out;
  auto* ls_ref_f = ls->add_option("--reference", ls_reference, "occupied modes of the reference")
                       ->delimiter(',');
  auto* ls_order_f = ls->add_option("--order", ls_order, "series truncation order");
  auto* ls_out_f = ls->add_option("--out", ls_out, "JSON report path");

  // bethe-verify ----------------------------------------------------------------
  auto* bv = app.add_subcommand("bethe-verify", "cusp and finite-difference eigenstate residuals");
  bv->fallthrough();
  std::vector<double> bv_k{-1.0, 2.0};
  double bv_coupling = 1.5, bv_box = 30.0;
  int bv_grid = 0;
  unsigned long bv_seed = 12345;
  std::string bv_out;
  auto* bv_k_f = bv->add_option("--k", bv_k, "rapidities")->delimiter(',');
  auto* bv_c_f = bv->add_option("--coupling", bv_coupling, "interaction strength");
  auto* bv_box_f = bv->add_option("--box", bv_box, "finite-difference box size");
  auto* bv_grid_f = bv->add_option("--grid", bv_grid, "points per dimension (default 201 for N=2, 61 for N=3)");
  auto* bv_seed_f = bv->add_option("--seed", bv_seed, "seed for the transverse sample point");
  auto* bv_out_f = bv->add_option("--out", bv_out, "JSON report path");

  // ring-bethe ---------------------------------------------------------------
  auto* rb = app.add_subcommand("ring-bethe", "solve the periodic-box quantization conditions");
  rb->fallthrough();
  double rb_length = kTwoPi, rb_coupling = 1.0;
  std::vector<int> rb_qn{0, 1};
  std::string rb_out;
  auto* rb_len_f = rb->add_option("--length", rb_length, "ring circumference");
  auto* rb_c_f = rb->add_option("--coupling", rb_coupling, "repulsive coupling");
  auto* rb_qn_f = rb->add_option("--quantum-numbers", rb_qn, "distinct integers")->delimiter(',');
  auto* rb_out_f = rb->add_option("--out", rb_out, "JSON report path");

  // bound-state ---------------------------------------------------------------
  auto* bs = app.add_subcommand("bound-state", "attractive pair: lattice sweep plus FD oracle");
  bs->fallthrough();
  double bs_length = 20.0, bs_coupling = -2.0, bs_box = 30.0;
  std::vector<int> bs_cutoffs{8, 16, 24, 32};
  int bs_grid = 401;
  std::string bs_out;
  auto* bs_len_f = bs->add_option("--length", bs_length, "lattice ring circumference");
  auto* bs_c_f = bs->add_option("--coupling", bs_coupling, "attractive coupling (c < 0)");
  auto* bs_cut_f = bs->add_option("--cutoffs", bs_cutoffs, "ascending mode cutoffs")->delimiter(',');
  auto* bs_box_f = bs->add_option("--box", bs_box, "finite-difference box size");
  auto* bs_grid_f = bs->add_option("--grid", bs_grid, "FD points per dimension");
  auto* bs_out_f = bs->add_option("--out", bs_out, "JSON report path");

  // evolve ---------------------------------------------------------------------
  auto* ev = app.add_subcommand("evolve", "integrate the classical nonlocal field");
  ev->fallthrough();
  double ev_length = 40.0, ev_dt = 1e-4, ev_amplitude = 1.0, ev_center = 2.0, ev_width = 2.5;
  double ev_coupling = 1.0;
  int ev_sites = 512, ev_steps = 10000, ev_stride = 100, ev_wavenumber = 2;
  std::string ev_initial = "gaussian", ev_out = "trajectory.csv", ev_snapshots;
  auto* ev_len_f = ev->add_option("--length", ev_length, "ring circumference");
  auto* ev_sites_f = ev->add_option("--sites", ev_sites, "grid sites");
  auto* ev_c_f = ev->add_option("--coupling", ev_coupling, "interaction strength");
  auto* ev_dt_f = ev->add_option("--dt", ev_dt, "time step");
  auto* ev_steps_f = ev->add_option("--steps", ev_steps, "number of steps");
  auto* ev_stride_f = ev->add_option("--stride", ev_stride, "charge sampling stride");
  auto* ev_init_f = ev->add_option("--initial", ev_initial, "gaussian|plane");
  auto* ev_amp_f = ev->add_option("--amplitude", ev_amplitude, "initial amplitude");
  auto* ev_center_f = ev->add_option("--center", ev_center, "gaussian center");
  auto* ev_width_f = ev->add_option("--width", ev_width, "gaussian width");
  auto* ev_wave_f = ev->add_option("--wavenumber", ev_wavenumber, "integer mode of phase kick");
  auto* ev_out_f = ev->add_option("--out", ev_out, "trajectory CSV path");
  auto* ev_snap_f = ev->add_option("--snapshots", ev_snapshots, "field snapshot CSV path");

  // sweep ------------------------------------------------------------------------
  auto* sw = app.add_subcommand("sweep", "lowest eigenvalues against the mode cutoff");
  sw->fallthrough();
  SectorParams sw_sector;
  SectorFlags sw_flags;
  add_sector_options(sw, sw_sector, sw_flags);
  std::vector<int> sw_cutoffs{4, 8, 12, 16};
  int sw_lowest = 4;
  std::string sw_out = "sweep.csv";
  auto* sw_cut_f = sw->add_option("--cutoffs", sw_cutoffs, "ascending mode cutoffs")->delimiter(',');
  auto* sw_low_f = sw->add_option("--n-lowest", sw_lowest, "eigenvalues kept per cutoff");
  auto* sw_out_f = sw->add_option("--out", sw_out, "sweep CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << '\n';
    return 1;
  }

  try {
    if (spectrum->parsed()) {
      RunConfig cfg(config_path, with_sector_keys({"out", "dump_operator", "dump_format",
                                                   "method"}));
      merge_sector(cfg, sp_flags, sp_sector);
      cfg.merge(sp_out_f, "out", sp_out);
      cfg.merge(sp_dump_f, "dump_operator", sp_dump);
      cfg.merge(sp_dumpfmt_f, "dump_format", sp_dump_format);
      cfg.merge(sp_method_f, "method", sp_method);
      return run_spectrum(sp_sector, sp_out, sp_dump, sp_dump_format, sp_method);
    }
    if (gram_cmd->parsed()) {
      RunConfig cfg(config_path, with_sector_keys({"kind", "out", "spectrum_out"}));
      merge_sector(cfg, gr_flags, gr_sector);
      cfg.merge(gr_kind_f, "kind", gr_kind);
      cfg.merge(gr_out_f, "out", gr_out);
      cfg.merge(gr_spec_f, "spectrum_out", gr_spec_out);
      return run_gram(gr_sector, gr_kind, gr_out, gr_spec_out);
    }
    if (herm->parsed()) {
      RunConfig cfg(config_path, with_sector_keys({"out"}));
      merge_sector(cfg, hm_flags, hm_sector);
      cfg.merge(hm_out_f, "out", hm_out);
      return run_hermiticity(hm_sector, hm_out);
    }
    if (ls->parsed()) {
      RunConfig cfg(config_path, with_sector_keys({"reference", "order", "out"}));
      merge_sector(cfg, ls_flags, ls_sector);
      cfg.merge(ls_ref_f, "reference", ls_reference);
      cfg.merge(ls_order_f, "order", ls_order);
      cfg.merge(ls_out_f, "out", ls_out);
      return run_ls_series(ls_sector, ls_reference, ls_order, ls_out);
    }
    if (bv->parsed()) {
      RunConfig cfg(config_path,
                    {"rapidities", "coupling", "box", "grid", "seed", "out"});
      cfg.merge(bv_k_f, "rapidities", bv_k);
      cfg.merge(bv_c_f, "coupling", bv_coupling);
      cfg.merge(bv_box_f, "box", bv_box);
      cfg.merge(bv_grid_f, "grid", bv_grid);
      cfg.merge(bv_seed_f, "seed", bv_seed);
      cfg.merge(bv_out_f, "out", bv_out);
      return run_bethe_verify(bv_k, bv_coupling, bv_box, bv_grid, bv_seed, bv_out);
    }
    if (rb->parsed()) {
      RunConfig cfg(config_path, {"length", "coupling", "quantum_numbers", "out"});
      cfg.merge(rb_len_f, "length", rb_length);
      cfg.merge(rb_c_f, "coupling", rb_coupling);
      cfg.merge(rb_qn_f, "quantum_numbers", rb_qn);
      cfg.merge(rb_out_f, "out", rb_out);
      return run_ring_bethe(rb_length, rb_coupling, rb_qn, rb_out);
    }
    if (bs->parsed()) {
      RunConfig cfg(config_path, {"length", "coupling", "cutoffs", "box", "grid", "out"});
      cfg.merge(bs_len_f, "length", bs_length);
      cfg.merge(bs_c_f, "coupling", bs_coupling);
      cfg.merge(bs_cut_f, "cutoffs", bs_cutoffs);
      cfg.merge(bs_box_f, "box", bs_box);
      cfg.merge(bs_grid_f, "grid", bs_grid);
      cfg.merge(bs_out_f, "out", bs_out);
      return run_bound_state(bs_length, bs_coupling, bs_cutoffs, bs_box, bs_grid, bs_out);
    }
    if (ev->parsed()) {
      RunConfig cfg(config_path,
                    {"length", "sites", "coupling", "dt", "steps", "stride", "initial",
                     "amplitude", "center", "width", "wavenumber", "out", "snapshots"});
      cfg.merge(ev_len_f, "length", ev_length);
      cfg.merge(ev_sites_f, "sites", ev_sites);
      cfg.merge(ev_c_f, "coupling", ev_coupling);
      cfg.merge(ev_dt_f, "dt", ev_dt);
      cfg.merge(ev_steps_f, "steps", ev_steps);
      cfg.merge(ev_stride_f, "stride", ev_stride);
      cfg.merge(ev_init_f, "initial", ev_initial);
      cfg.merge(ev_amp_f, "amplitude", ev_amplitude);
      cfg.merge(ev_center_f, "center", ev_center);
      cfg.merge(ev_width_f, "width", ev_width);
      cfg.merge(ev_wave_f, "wavenumber", ev_wavenumber);
      cfg.merge(ev_out_f, "out", ev_out);
      cfg.merge(ev_snap_f, "snapshots", ev_snapshots);
      return run_evolve(ev_length, ev_sites, ev_coupling, ev_dt, ev_steps, ev_stride, ev_initial,
                        ev_amplitude, ev_center, ev_width, ev_wavenumber, ev_out, ev_snapshots);
    }
    if (sw->parsed()) {
      RunConfig cfg(config_path, with_sector_keys({"cutoffs", "n_lowest", "out"}));
      merge_sector(cfg, sw_flags, sw_sector);
      cfg.merge(sw_cut_f, "cutoffs", sw_cutoffs);
      cfg.merge(sw_low_f, "n_lowest", sw_lowest);
      cfg.merge(sw_out_f, "out", sw_out);
      return run_sweep(sw_sector, sw_cutoffs, sw_lowest, sw_out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
