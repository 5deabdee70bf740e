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

#include <optional>
#include <string>

#include "tchub/circuit.hpp"
#include "tchub/exact.hpp"
#include "tchub/gradient.hpp"

namespace tchub {

struct HamiltonianSpec {
  int nx = 2;
  int ny = 1;
  Representation representation = Representation::momentum;
  bool transcorrelated = true;
  double t = 1.0;
  double U = 4.0;
  /// Unset means the tabulated QITE value for the ring length.
  std::optional<double> J;

  Lattice lattice() const { return Lattice(nx, ny); }
  HubbardParams params() const;
  /// Short variant tag: "r", "r-tc", "m" or "m-tc".
  std::string variant() const;
  void validate() const;
};

/// Parses "r", "r-tc", "m", "m-tc" into representation and tc flag.
void apply_variant(HamiltonianSpec& spec, const std::string& variant);

enum class AnsatzKind { quccsd, ry };

std::string to_string(AnsatzKind k);
AnsatzKind parse_ansatz_kind(const std::string& s);

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::quccsd;
  int layers = 1;
};

/// Everything a run needs: the mapped operator, its exact reference and the circuit.
struct Problem {
  HamiltonianSpec spec;
  PauliSum hamiltonian;
  SparseCMatrix hamiltonian_sparse;
  HermitianSplit parts;
  double e_exact = 0.0;
  /// Unit-norm ground state; the right eigenvector for transcorrelated operators.
  StateVector reference;
  int degeneracy = 1;
  ParametrizedCircuit circuit;
};

/// The momentum Fermi sea written in the site basis (a U = 0 ground state).
StateVector noninteracting_real_space_state(const Lattice& lat);

/// initial_state: "auto", "fermi-sea", "u0" or an explicit bitstring (character k is qubit k).
Problem build_problem(const HamiltonianSpec& h, const AnsatzSpec& a, const std::string& initial_state = "auto",
                      bool global_phase = true);

}  // namespace tchub
