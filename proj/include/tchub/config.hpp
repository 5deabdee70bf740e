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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tchub/qite.hpp"

namespace tchub {

/// One invalid field: JSON-pointer style path and the reason.
struct ConfigIssue {
  std::string path;
  std::string reason;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

struct JGrid {
  double min = -1.2;
  double max = 0.0;
  double step = 0.05;
  std::vector<double> values() const;
};

struct ExperimentConfig {
  QiteConfig qite;
  std::string out_dir = "out";
  std::string label = "run";
  std::string recipe;
  /// Bisection bracket for the projection equation.
  std::pair<double, double> j_bracket{-3.0, 0.0};
  double j_tolerance = 1e-6;
  /// Grid for the residual curve and the compactness sweep.
  JGrid j_grid;
  VqeOptions vqe;
};

/// Schema check with defaults filled in; throws ConfigError listing every invalid field.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

/// Normalized form of a config (every field explicit), used for hashing and metadata.
nlohmann::json to_json(const ExperimentConfig& cfg);

/// FNV-1a 64-bit hash of the normalized config, as 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

}  // namespace tchub
