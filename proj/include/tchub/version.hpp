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

#include <array>
#include <string_view>
#include <utility>

namespace tchub {

inline constexpr std::string_view kVersion = "1.0.0";

inline constexpr std::array<std::pair<std::string_view, std::string_view>, 9> kModuleVersions{{
    {"pauli_algebra", "1.0.0"},
    {"lattice_hamiltonians", "1.0.0"},
    {"jastrow", "1.0.0"},
    {"circuits", "1.0.0"},
    {"simulator", "1.0.0"},
    {"gradient_circuits", "1.0.0"},
    {"qite_engine", "1.0.0"},
    {"reference_oracle", "1.0.0"},
    {"cli_runner", "1.0.0"},
}};

}  // namespace tchub
