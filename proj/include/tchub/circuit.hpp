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
#include <vector>

#include "tchub/gates.hpp"
#include "tchub/jastrow.hpp"

namespace tchub {

/// A spin-conserving excitation: creators on `to`, annihilators on `from` (mode indices).
struct Excitation {
  std::vector<int> from;
  std::vector<int> to;
  std::string label() const;
};

/// Consecutive gates that together realize exp(theta (T - T^dag)) for one excitation.
struct ExcitationBlock {
  std::size_t first_gate = 0;
  std::size_t n_gates = 0;
  int param = -1;
  Excitation excitation;
};

/// Ordered gate list over named parameters. The optional global-phase
/// parameter is always the last one and multiplies the output by e^{i theta_g}.
class ParametrizedCircuit {
 public:
  ParametrizedCircuit() = default;
  explicit ParametrizedCircuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::string>& parameter_names() const { return names_; }
  int n_parameters() const { return static_cast<int>(names_.size()); }
  /// Parameters excluding the global phase.
  int n_gate_parameters() const { return n_parameters() - (global_phase_ ? 1 : 0); }

  int add_parameter(std::string name);
  /// Appends a gate; a bound parameter index must already exist.
  void add(Gate g);
  /// Fixed gates that prepare the input state; counted separately so they can be replaced.
  void add_preparation(Gate g);
  int n_preparation_gates() const { return n_preparation_; }

  int enable_global_phase();
  std::optional<int> global_phase_index() const;

  /// Replaces the preparation gates by an explicit input vector.
  void set_initial_state(StateVector psi);
  const std::optional<StateVector>& initial_state() const { return initial_; }
  StateVector input_state() const;

  /// Free-form description of how the parameters were generated (run metadata).
  const std::string& ordering() const { return ordering_; }
  void set_ordering(std::string text) { ordering_ = std::move(text); }

  /// Declares that gates [first, first + n) compile one excitation, which lets
  /// the simulator apply them as a single fermionic rotation.
  void add_excitation_block(ExcitationBlock block);
  const std::vector<ExcitationBlock>& excitation_blocks() const { return blocks_; }

  /// Copy on a larger register (ancilla qubits appended above the system).
  ParametrizedCircuit widened(int n_qubits) const;

  std::string summary() const;

 private:
  int n_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::string> names_;
  int n_preparation_ = 0;
  bool global_phase_ = false;
  std::optional<StateVector> initial_;
  std::string ordering_;
  std::vector<ExcitationBlock> blocks_;
};

/// Singles then doubles from the reference occupation, each in lexicographic
/// (occupied, virtual) order.
std::vector<Excitation> quccsd_excitations(const Lattice& lat, const ReferenceDeterminant& reference);

/// n-layer Trotterized UCCSD; each exp(theta (T - T^dag)) is compiled into
/// commuting Pauli rotations after the Jordan-Wigner mapping. The reference
/// is prepared by X gates.
ParametrizedCircuit build_quccsd(const Lattice& lat, const ReferenceDeterminant& reference, int n_layers);
/// Same construction over an explicit excitation list, applied in list order.
ParametrizedCircuit build_quccsd(const Lattice& lat, const ReferenceDeterminant& reference,
                                 const std::vector<Excitation>& excitations, int n_layers);

/// Layers of R_y on every qubit, a CNOT chain (i, i+1), and a closing R_y layer.
/// `input` bits set to one are prepared by U(pi, 0, pi) gates.
ParametrizedCircuit build_ry_ansatz(int n_qubits, int n_layers, std::uint64_t input = 0);

}  // namespace tchub
