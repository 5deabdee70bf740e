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
#include <utility>
#include <vector>

#include <json.hpp>

#include "tchub/config.hpp"

namespace tchub {

/// Provenance attached to every output file.
struct RunMetadata {
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string ordering;
  /// Additional key/value lines (variant, exact energy, status, ...).
  std::vector<std::pair<std::string, std::string>> extra;

  static RunMetadata from(const ExperimentConfig& cfg, std::string ordering = "");
  std::string csv_header() const;
  nlohmann::json to_json() const;
};

std::string format_double(double v);

/// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

std::string trajectory_csv(const QiteTrajectory& traj, const RunMetadata& meta);
nlohmann::json trajectory_summary(const QiteTrajectory& traj);

/// Generic two-or-more column CSV with the metadata header.
std::string table_csv(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows,
                      const RunMetadata& meta);

std::string dump_json(const nlohmann::json& j);

}  // namespace tchub
