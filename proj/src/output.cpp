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
#include "tchub/output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tchub/version.hpp"

namespace tchub {

using nlohmann::json;

RunMetadata RunMetadata::from(const ExperimentConfig& cfg, std::string ordering) {
  RunMetadata m;
  m.config_hash = tchub::config_hash(cfg);
  m.seed = cfg.qite.shots.seed;
  m.ordering = std::move(ordering);
  return m;
}

namespace {

std::string versions_line() {
  std::string out;
  for (const auto& [name, version] : kModuleVersions) {
    if (!out.empty()) out += ';';
    out += std::string(name) + "=" + std::string(version);
  }
  return out;
}

}  // namespace

std::string RunMetadata::csv_header() const {
  std::ostringstream os;
  os << "# tchub " << kVersion << "\n";
  os << "# config_hash: " << config_hash << "\n";
  os << "# seed: " << seed << "\n";
  os << "# module_versions: " << versions_line() << "\n";
  os << "# generator_ordering: " << (ordering.empty() ? "n/a" : ordering) << "\n";
  for (const auto& [k, v] : extra) os << "# " << k << ": " << v << "\n";
  return os.str();
}

json RunMetadata::to_json() const {
  json versions = json::object();
  for (const auto& [name, version] : kModuleVersions) versions[std::string(name)] = std::string(version);
  json j = {{"tchub", std::string(kVersion)},
            {"config_hash", config_hash},
            {"seed", seed},
            {"module_versions", versions},
            {"generator_ordering", ordering.empty() ? "n/a" : ordering}};
  for (const auto& [k, v] : extra) j[k] = v;
  return j;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string trajectory_csv(const QiteTrajectory& traj, const RunMetadata& meta) {
  std::ostringstream os;
  os << meta.csv_header();
  os << "step,tau,energy,abs_err,infidelity,grad_norm,lambda_opt\n";
  for (const StepRecord& r : traj.steps)
    os << r.step << ',' << format_double(r.tau) << ',' << format_double(r.energy) << ',' << format_double(r.abs_err)
       << ',' << format_double(r.infidelity) << ',' << format_double(r.grad_norm) << ','
       << format_double(r.lambda_opt) << '\n';
  return os.str();
}

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json trajectory_summary(const QiteTrajectory& traj) {
  json j;
  j["status"] = to_string(traj.status);
  if (!traj.diagnostic.empty()) j["diagnostic"] = traj.diagnostic;
  j["e_exact"] = traj.e_exact;
  j["steps"] = traj.steps.empty() ? 0 : traj.final().step;
  if (!traj.steps.empty()) {
    const StepRecord& f = traj.final();
    j["final_energy"] = finite_or_null(f.energy);
    j["abs_err"] = finite_or_null(f.abs_err);
    j["infidelity"] = finite_or_null(f.infidelity);
    j["infidelity_unsquared"] = finite_or_null(f.infidelity_abs);
    j["grad_norm"] = finite_or_null(f.grad_norm);
    j["tau"] = f.tau;
    j["theta"] = std::vector<double>(f.theta.data(), f.theta.data() + f.theta.size());
  }
  return j;
}

std::string table_csv(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows,
                      const RunMetadata& meta) {
  std::ostringstream os;
  os << meta.csv_header();
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_double(row[c]);
    os << '\n';
  }
  return os.str();
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tchub
