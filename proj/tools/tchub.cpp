// Copyright 2026 The tchub Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tchub/config.hpp"
#include "tchub/exact.hpp"
#include "tchub/jastrow.hpp"
#include "tchub/output.hpp"
#include "tchub/recipes.hpp"
#include "tchub/sampling.hpp"

namespace {

using nlohmann::json;
using namespace tchub;

constexpr int kExitValidation = 2;
constexpr int kExitDiverged = 3;

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON configuration file (omitted: all defaults)");
  cmd->add_option("--seed", opts.seed, "Overrides the configured RNG seed");
  cmd->add_option("--out", opts.out, "Overrides the output directory");
}

ExperimentConfig resolve(const CommonOptions& opts) {
  ExperimentConfig cfg = opts.config_path.empty() ? parse_config(json::object()) : load_config(opts.config_path);
  if (opts.seed) cfg.qite.shots.seed = *opts.seed;
  if (opts.out) cfg.out_dir = *opts.out;
  return cfg;
}

std::string out_path(const ExperimentConfig& cfg, const std::string& suffix) {
  return (std::filesystem::path(cfg.out_dir) / (cfg.label + suffix)).string();
}

int cmd_ed(const ExperimentConfig& cfg) {
  const QiteConfig& q = cfg.qite;
  q.hamiltonian.validate();
  const Problem p = build_problem(q.hamiltonian, q.ansatz, q.initial_state, false);

  const CVector& amp = p.reference.amplitudes();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(amp.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return std::norm(amp[a]) > std::norm(amp[b]); });
  json configurations = json::array();
  for (std::size_t k = 0; k < std::min<std::size_t>(order.size(), 8); ++k) {
    const double w = std::norm(amp[order[k]]);
    if (w < 1e-8) break;
    configurations.push_back({{"bitstring", bitstring(static_cast<std::uint64_t>(order[k]), p.reference.n_qubits())},
                              {"weight", w}});
  }
  RunMetadata meta = RunMetadata::from(cfg);
  meta.extra = {{"variant", q.hamiltonian.variant()}, {"J", format_double(q.hamiltonian.params().J)}};
  json doc = {{"metadata", meta.to_json()},
              {"e0", p.e_exact},
              {"degeneracy", p.degeneracy},
              {"right_eigenvector", q.hamiltonian.transcorrelated},
              {"dominant_configurations", configurations}};
  write_atomic(out_path(cfg, "_ed.json"), dump_json(doc));
  std::cout << dump_json(doc);
  return 0;
}

int cmd_optimize_j(const ExperimentConfig& cfg) {
  const HamiltonianSpec& h = cfg.qite.hamiltonian;
  h.validate();
  const Lattice lat = h.lattice();
  const ProjectionEquation eq(lat, h.t, h.U);
  const JOptimization opt = optimize_j(eq, cfg.j_bracket, cfg.j_tolerance);

  std::vector<std::vector<double>> rows;
  for (double J : cfg.j_grid.values()) rows.push_back({J, eq.residual(J)});
  RunMetadata meta = RunMetadata::from(cfg, "projection residual over the J grid");
  meta.extra = {{"n_sites", std::to_string(lat.n_sites())}, {"J_proj", format_double(opt.J)}};
  write_atomic(out_path(cfg, "_optimize_j.csv"), table_csv({"J", "residual"}, rows, meta));
  json doc = {{"metadata", meta.to_json()},
              {"J_proj", opt.J},
              {"residual", opt.residual},
              {"iterations", opt.iterations},
              {"reference", bitstring(eq.reference().as_basis_index, eq.reference().n_qubits)}};
  write_atomic(out_path(cfg, "_optimize_j.json"), dump_json(doc));
  std::cout << dump_json(doc);
  return 0;
}

int cmd_sweep_j(const ExperimentConfig& cfg) {
  const HamiltonianSpec& h = cfg.qite.hamiltonian;
  h.validate();
  const auto sweep = hf_weight_sweep(h.lattice(), h.t, h.U, cfg.j_grid.values());
  std::vector<std::vector<double>> rows;
  std::size_t best = 0;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    rows.push_back({sweep[i].J, sweep[i].hf_weight});
    if (sweep[i].hf_weight > sweep[best].hf_weight) best = i;
  }
  RunMetadata meta = RunMetadata::from(cfg, "Fermi-sea determinant weight of the momentum TC right eigenvector");
  meta.extra = {{"n_sites", std::to_string(h.lattice().n_sites())}};
  write_atomic(out_path(cfg, "_sweep_j.csv"), table_csv({"J", "hf_weight"}, rows, meta));
  json doc = {{"metadata", meta.to_json()}};
  if (!sweep.empty()) doc["argmax_J"] = sweep[best].J, doc["max_hf_weight"] = sweep[best].hf_weight;
  std::cout << dump_json(doc);
  return 0;
}

int cmd_qite(const ExperimentConfig& cfg) {
  const RunOutput out = run_and_write(cfg, cfg.label);
  json shown = out.summary;
  shown.erase("theta");
  std::cout << dump_json(shown);
  return out.trajectory.status == RunStatus::diverged ? kExitDiverged : 0;
}

int cmd_vqe(const ExperimentConfig& cfg) {
  if (cfg.qite.hamiltonian.transcorrelated)
    throw ConfigError(std::vector<ConfigIssue>{
        {"/hamiltonian/tc", "vqe requires a Hermitian Hamiltonian; set tc to false"}});
  cfg.qite.validate();
  const QiteConfig& q = cfg.qite;
  const Problem p = build_problem(q.hamiltonian, q.ansatz, q.initial_state, false);
  const VqeResult r = run_vqe(p, cfg.vqe);
  RunMetadata meta = RunMetadata::from(cfg, p.circuit.ordering());
  meta.extra = {{"variant", q.hamiltonian.variant()}};
  json doc = {{"metadata", meta.to_json()},
              {"config", to_json(cfg)},
              {"energy", r.energy},
              {"e_exact", p.e_exact},
              {"abs_err", std::abs(r.energy - p.e_exact)},
              {"grad_norm", r.grad_norm},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"theta", std::vector<double>(r.theta.data(), r.theta.data() + r.theta.size())}};
  write_atomic(out_path(cfg, "_vqe.json"), dump_json(doc));
  doc.erase("theta");
  doc.erase("config");
  std::cout << dump_json(doc);
  return 0;
}

int cmd_recipe(ExperimentConfig cfg, const std::string& id_arg) {
  const std::string id = id_arg.empty() ? cfg.recipe : id_arg;
  if (id.empty()) throw ConfigError(std::vector<ConfigIssue>{{"/recipe", "no recipe id given"}});
  const RecipeResult r = run_recipe(id, cfg);
  for (const auto& f : r.files) std::cout << f << "\n";
  return r.any_diverged ? kExitDiverged : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transcorrelated Hubbard QITE driver"};
  app.require_subcommand(1);
  CommonOptions opts;
  std::string recipe_id;

  auto* ed = app.add_subcommand("ed", "Exact ground state and dominant configurations");
  auto* oj = app.add_subcommand("optimize-j", "Solve the projection equation for J");
  auto* sj = app.add_subcommand("sweep-j", "Fermi-sea weight of the TC right eigenvector over a J grid");
  auto* qite = app.add_subcommand("qite", "Ansatz-based imaginary time evolution");
  auto* vqe = app.add_subcommand("vqe", "Variational minimisation for Hermitian Hamiltonians");
  auto* recipe = app.add_subcommand("recipe", "Run a fixed experiment bundle");
  recipe->add_option("id", recipe_id, "fig3a|fig3b|fig3c|fig4|fig1b|fig5-qasm");
  for (auto* cmd : {ed, oj, sj, qite, vqe, recipe}) add_common(cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    const ExperimentConfig cfg = resolve(opts);
    if (ed->parsed()) return cmd_ed(cfg);
    if (oj->parsed()) return cmd_optimize_j(cfg);
    if (sj->parsed()) return cmd_sweep_j(cfg);
    if (qite->parsed()) return cmd_qite(cfg);
    if (vqe->parsed()) return cmd_vqe(cfg);
    if (recipe->parsed()) return cmd_recipe(cfg, recipe_id);
  } catch (const ConfigError& e) {
    std::cerr << "invalid configuration:\n";
    for (const auto& issue : e.issues()) std::cerr << "  " << (issue.path.empty() ? "/" : issue.path) << ": " << issue.reason << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
