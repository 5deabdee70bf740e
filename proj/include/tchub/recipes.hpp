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
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tchub/config.hpp"
#include "tchub/output.hpp"

namespace tchub {

struct RunOutput {
  QiteTrajectory trajectory;
  std::string csv_path;
  std::string summary_path;
  nlohmann::json summary;
};

/// Runs one QITE configuration and writes `<out_dir>/<stem>.csv` and `<stem>.json`.
RunOutput run_and_write(const ExperimentConfig& cfg, const std::string& stem);

struct RecipeResult {
  std::vector<std::string> files;
  nlohmann::json summary;
  bool any_diverged = false;
};

const std::vector<std::string>& recipe_ids();

/// Expands a recipe id into its fixed run bundle, executes the runs
/// concurrently and writes one trajectory per run plus `<id>_summary.json`.
/// Numerical settings (max_steps, thresholds, shots, seed) come from `base`.
RecipeResult run_recipe(const std::string& id, const ExperimentConfig& base);

/// Configuration of a single recipe member, useful for re-running it alone.
ExperimentConfig recipe_member(const ExperimentConfig& base, const std::string& id, int n_sites,
                               const std::string& variant, AnsatzKind kind, int layers);

}  // namespace tchub
