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
#include "tchub/recipes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tchub/exact.hpp"
#include "tchub/jastrow.hpp"
#include "tchub/sampling.hpp"
#include "tchub/simulator.hpp"

namespace tchub {

using nlohmann::json;

namespace {

std::string join_path(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

RunMetadata metadata_for(const ExperimentConfig& cfg, const Problem& problem) {
  RunMetadata meta = RunMetadata::from(cfg, problem.circuit.ordering());
  const HamiltonianSpec& h = cfg.qite.hamiltonian;
  meta.extra = {{"variant", h.variant()},
                {"n_sites", std::to_string(h.nx * h.ny)},
                {"J", format_double(h.params().J)},
                {"ansatz", to_string(cfg.qite.ansatz.kind) + " x" + std::to_string(cfg.qite.ansatz.layers)},
                {"n_parameters", std::to_string(problem.circuit.n_parameters())},
                {"e_exact", format_double(problem.e_exact)}};
  return meta;
}

}  // namespace

RunOutput run_and_write(const ExperimentConfig& cfg, const std::string& stem) {
  const QiteConfig& q = cfg.qite;
  q.validate();
  const Problem problem = build_problem(q.hamiltonian, q.ansatz, q.initial_state, q.global_phase);

  RunOutput out;
  out.trajectory = run_qite(problem, q);
  RunMetadata meta = metadata_for(cfg, problem);
  out.csv_path = join_path(cfg.out_dir, stem + ".csv");
  out.summary_path = join_path(cfg.out_dir, stem + ".json");
  write_atomic(out.csv_path, trajectory_csv(out.trajectory, meta));

  out.summary = trajectory_summary(out.trajectory);
  json doc = {{"metadata", meta.to_json()}, {"config", to_json(cfg)}, {"result", out.summary}};
  write_atomic(out.summary_path, dump_json(doc));
  return out;
}

const std::vector<std::string>& recipe_ids() {
  static const std::vector<std::string> ids{"fig3a", "fig3b", "fig3c", "fig4", "fig1b", "fig5-qasm"};
  return ids;
}

ExperimentConfig recipe_member(const ExperimentConfig& base, const std::string& id, int n_sites,
                               const std::string& variant, AnsatzKind kind, int layers) {
  ExperimentConfig cfg = base;
  cfg.recipe = id;
  QiteConfig& q = cfg.qite;
  q.hamiltonian = HamiltonianSpec{};
  q.hamiltonian.nx = n_sites;
  q.hamiltonian.ny = 1;
  apply_variant(q.hamiltonian, variant);
  q.ansatz = AnsatzSpec{kind, layers};
  q.initial_state = "auto";
  q.dt = 0.1;
  return cfg;
}

namespace {

struct Member {
  std::string key;
  std::string stem;
  ExperimentConfig cfg;
};

const std::vector<std::string> kVariants{"r", "r-tc", "m", "m-tc"};

RecipeResult run_members(const std::string& id, const ExperimentConfig& base, const std::vector<Member>& members,
                         json extra = json::object(), std::vector<RunOutput>* keep = nullptr) {
  std::vector<RunOutput> outputs(members.size());
  parallel_for(members.size(), [&](std::size_t i) { outputs[i] = run_and_write(members[i].cfg, members[i].stem); });

  RecipeResult result;
  json runs = json::object();
  for (std::size_t i = 0; i < members.size(); ++i) {
    result.files.push_back(outputs[i].csv_path);
    result.files.push_back(outputs[i].summary_path);
    json entry = outputs[i].summary;
    entry.erase("theta");
    entry["config_hash"] = config_hash(members[i].cfg);
    runs[members[i].key] = entry;
    if (outputs[i].trajectory.status == RunStatus::diverged) result.any_diverged = true;
  }
  ExperimentConfig root = base;
  root.recipe = id;
  result.summary = {{"metadata", RunMetadata::from(root).to_json()}, {"recipe", id}, {"runs", runs}};
  for (auto& [k, v] : extra.items()) result.summary[k] = v;
  const std::string path = join_path(base.out_dir, id + "_summary.json");
  write_atomic(path, dump_json(result.summary));
  result.files.push_back(path);
  if (keep) *keep = std::move(outputs);
  return result;
}

RecipeResult fig3(const std::string& id, const ExperimentConfig& base, int n_sites) {
  std::vector<Member> members;
  for (const auto& v : kVariants)
    members.push_back({v, id + "_" + v, recipe_member(base, id, n_sites, v, AnsatzKind::quccsd, 1)});
  ExperimentConfig sv = base;
  sv.qite.mode = EvalMode::sv;
  for (auto& m : members) m.cfg.qite.mode = EvalMode::sv;
  return run_members(id, sv, members);
}

RecipeResult fig4(const ExperimentConfig& base) {
  const std::string id = "fig4";
  std::vector<Member> members;
  struct VqeJob {
    std::string key;
    ExperimentConfig cfg;
  };
  std::vector<VqeJob> vqe_jobs;
  for (int n : {2, 4, 6})
    for (int layers : {1, 2})
      for (const auto& v : kVariants) {
        const std::string key = "N" + std::to_string(n) + "/" + v + "/n" + std::to_string(layers);
        ExperimentConfig cfg = recipe_member(base, id, n, v, AnsatzKind::quccsd, layers);
        cfg.qite.mode = EvalMode::sv;
        members.push_back({key, id + "_N" + std::to_string(n) + "_" + v + "_n" + std::to_string(layers), cfg});
        if (v == "r" || v == "m") vqe_jobs.push_back({key, cfg});
      }

  std::vector<VqeResult> vqe(vqe_jobs.size());
  parallel_for(vqe_jobs.size(), [&](std::size_t i) { vqe[i] = run_vqe(vqe_jobs[i].cfg.qite, vqe_jobs[i].cfg.vqe); });
  json vqe_json = json::object();
  for (std::size_t i = 0; i < vqe_jobs.size(); ++i) {
    const QiteConfig& q = vqe_jobs[i].cfg.qite;
    const Problem p = build_problem(q.hamiltonian, q.ansatz, q.initial_state, false);
    vqe_json[vqe_jobs[i].key] = {{"energy", vqe[i].energy},
                                 {"abs_err", std::abs(vqe[i].energy - p.e_exact)},
                                 {"iterations", vqe[i].iterations},
                                 {"converged", vqe[i].converged}};
  }
  ExperimentConfig sv = base;
  sv.qite.mode = EvalMode::sv;
  return run_members(id, sv, std::move(members), json{{"vqe", vqe_json}});
}

RecipeResult fig1b(const ExperimentConfig& base) {
  const std::string id = "fig1b";
  const Lattice lat(6, 1);
  const std::vector<double> grid = base.j_grid.values();
  const auto sweep = hf_weight_sweep(lat, 1.0, 4.0, grid);
  const JOptimization proj = optimize_j(lat, 1.0, 4.0, base.j_bracket, base.j_tolerance);

  ExperimentConfig cfg = base;
  cfg.recipe = id;
  RunMetadata meta = RunMetadata::from(cfg, "Fermi-sea determinant weight of the momentum TC right eigenvector");
  meta.extra = {{"n_sites", "6"}, {"U", format_double(4.0)}, {"J_proj", format_double(proj.J)}};
  std::vector<std::vector<double>> rows;
  std::size_t best = 0;
  double weight_at_zero = std::nan("");
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    rows.push_back({sweep[i].J, sweep[i].hf_weight});
    if (sweep[i].hf_weight > sweep[best].hf_weight) best = i;
    if (std::abs(sweep[i].J) < 1e-12) weight_at_zero = sweep[i].hf_weight;
  }
  RecipeResult result;
  const std::string csv = join_path(base.out_dir, "fig1b_compactness.csv");
  write_atomic(csv, table_csv({"J", "hf_weight"}, rows, meta));
  result.files.push_back(csv);
  result.summary = {{"metadata", meta.to_json()},
                    {"recipe", id},
                    {"J_proj", proj.J},
                    {"argmax_J", sweep.empty() ? 0.0 : sweep[best].J},
                    {"max_hf_weight", sweep.empty() ? 0.0 : sweep[best].hf_weight},
                    {"hf_weight_at_J0", std::isfinite(weight_at_zero) ? json(weight_at_zero) : json(nullptr)}};
  const std::string path = join_path(base.out_dir, "fig1b_summary.json");
  write_atomic(path, dump_json(result.summary));
  result.files.push_back(path);
  return result;
}

RecipeResult fig5(const ExperimentConfig& base) {
  const std::string id = "fig5-qasm";
  std::vector<Member> members;
  for (const std::string v : {"r", "r-tc"}) {
    ExperimentConfig cfg = recipe_member(base, id, 2, v, AnsatzKind::ry, 1);
    cfg.qite.mode = EvalMode::shots;
    if (cfg.qite.shots.readout_flip <= 0.0) cfg.qite.shots.readout_flip = 0.02;
    members.push_back({v, id + "_" + v, cfg});
  }
  std::vector<RunOutput> outputs;
  RecipeResult result = run_members(id, members.front().cfg, members, json::object(), &outputs);

  for (std::size_t i = 0; i < members.size(); ++i) {
    const Member& m = members[i];
    const QiteConfig& q = m.cfg.qite;
    const Problem p = build_problem(q.hamiltonian, q.ansatz, q.initial_state, q.global_phase);
    const StateVector psi = evolve(p.circuit, outputs[i].trajectory.final().theta);
    const std::uint64_t seed = derive_seed(q.shots.seed, {0xC0FFEEu});
    const Counts ideal = sample(psi, q.shots.shots, seed);
    const ReadoutModel model = ReadoutModel::symmetric_flip(psi.n_qubits(), q.shots.readout_flip);
    const Counts noisy = apply_readout_error(ideal, model, derive_seed(seed, {1}));
    const Distribution mitigated = mitigate_readout(noisy, model);

    RunMetadata meta = metadata_for(m.cfg, p);
    json doc = {{"metadata", meta.to_json()},
                {"shots", q.shots.shots},
                {"readout_flip", q.shots.readout_flip},
                {"counts", json::parse(to_json(noisy))},
                {"ideal_counts", json::parse(to_json(ideal))},
                {"mitigated", mitigated}};
    const std::string path = join_path(m.cfg.out_dir, m.stem + "_counts.json");
    write_atomic(path, dump_json(doc));
    result.files.push_back(path);
  }
  return result;
}

}  // namespace

RecipeResult run_recipe(const std::string& id, const ExperimentConfig& base) {
  if (id == "fig3a") return fig3(id, base, 2);
  if (id == "fig3b") return fig3(id, base, 4);
  if (id == "fig3c") return fig3(id, base, 6);
  if (id == "fig4") return fig4(base);
  if (id == "fig1b") return fig1b(base);
  if (id == "fig5-qasm") return fig5(base);
  throw ConfigError(std::vector<ConfigIssue>{{"/recipe", "unknown recipe id '" + id + "'"}});
}

}  // namespace tchub
