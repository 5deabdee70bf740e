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

#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tchub/pauli.hpp"

namespace tchub {

/// Bitstrings are written with character k holding qubit k.
using Counts = std::map<std::string, std::int64_t>;
using Distribution = std::map<std::string, double>;

std::string bitstring(std::uint64_t index, int n_qubits);
std::uint64_t parse_bitstring(const std::string& bits);

/// Mixes a base seed with integer labels (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> labels);

/// Multinomial draw by conditional binomials, in index order.
std::vector<std::int64_t> multinomial(const RVector& probabilities, std::int64_t shots, std::mt19937_64& rng);

Counts sample(const StateVector& psi, std::int64_t shots, std::uint64_t seed);

/// Column-stochastic readout matrix, M(i, j) = P(read i | prepared j).
class ReadoutModel {
 public:
  explicit ReadoutModel(RMatrix m);
  static ReadoutModel identity(int n_qubits);
  /// Independent qubits with P(1|0) = flips[q].first and P(0|1) = flips[q].second.
  static ReadoutModel from_qubit_flips(const std::vector<std::pair<double, double>>& flips);
  static ReadoutModel symmetric_flip(int n_qubits, double p);

  const RMatrix& matrix() const { return m_; }
  int n_qubits() const { return n_qubits_; }

 private:
  RMatrix m_;
  int n_qubits_ = 0;
};

/// Each recorded shot is re-read through column M(:, j).
Counts apply_readout_error(const Counts& counts, const ReadoutModel& model, std::uint64_t seed);

/// argmin ||M x - f|| over the probability simplex, scaled back to the shot total.
Distribution mitigate_readout(const Counts& counts, const ReadoutModel& model);

/// Euclidean projection onto {x >= 0, sum x = 1}.
RVector project_to_simplex(const RVector& v);

std::string to_json(const Counts& counts);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Shot estimate of a Hermitian PauliSum, one measurement setting per
/// non-identity string with `shots` repetitions each. With a readout model
/// the records pass through M and are mitigated before averaging.
Estimate estimate_observable(const StateVector& psi, const PauliSum& hermitian, std::int64_t shots, std::uint64_t seed,
                             const ReadoutModel* readout = nullptr);

/// Shot estimate of a single Pauli string's expectation value.
Estimate estimate_string(const StateVector& psi, const PauliString& s, std::int64_t shots, std::uint64_t seed,
                         const ReadoutModel* readout = nullptr);

}  // namespace tchub
