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
#include "tchub/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace tchub {

ParametrizedCircuit::ParametrizedCircuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits <= 0 || n_qubits > 62) throw std::invalid_argument("circuit register size out of range");
}

int ParametrizedCircuit::add_parameter(std::string name) {
  if (global_phase_) throw std::logic_error("parameters must be added before the global phase");
  names_.push_back(std::move(name));
  return n_parameters() - 1;
}

void ParametrizedCircuit::add(Gate g) {
  for (int q : g.qubits)
    if (q < 0 || q >= n_qubits_) throw std::out_of_range("gate acts outside the circuit register");
  if (g.param >= n_gate_parameters()) throw std::out_of_range("gate bound to an undeclared parameter");
  gates_.push_back(std::move(g));
}

void ParametrizedCircuit::add_preparation(Gate g) {
  if (g.parameterized()) throw std::invalid_argument("preparation gates must be fixed");
  if (static_cast<int>(gates_.size()) != n_preparation_)
    throw std::logic_error("preparation gates must precede the ansatz");
  add(std::move(g));
  ++n_preparation_;
}

int ParametrizedCircuit::enable_global_phase() {
  if (!global_phase_) {
    names_.push_back("global_phase");
    global_phase_ = true;
  }
  return n_parameters() - 1;
}

std::optional<int> ParametrizedCircuit::global_phase_index() const {
  if (!global_phase_) return std::nullopt;
  return n_parameters() - 1;
}

void ParametrizedCircuit::add_excitation_block(ExcitationBlock block) {
  if (block.n_gates == 0 || block.first_gate + block.n_gates > gates_.size())
    throw std::out_of_range("excitation block outside the gate list");
  for (std::size_t g = block.first_gate; g < block.first_gate + block.n_gates; ++g)
    if (gates_[g].param != block.param || gates_[g].angles[0] != 0.0 || gates_[g].kind != GateKind::pauli_rotation)
      throw std::invalid_argument("excitation block gates must be unshifted Pauli rotations of one parameter");
  if (!blocks_.empty() && blocks_.back().first_gate + blocks_.back().n_gates > block.first_gate)
    throw std::invalid_argument("excitation blocks must not overlap");
  blocks_.push_back(std::move(block));
}

void ParametrizedCircuit::set_initial_state(StateVector psi) {
  if (psi.n_qubits() != n_qubits_) throw std::invalid_argument("initial state has the wrong register size");
  gates_.erase(gates_.begin(), gates_.begin() + n_preparation_);
  for (ExcitationBlock& b : blocks_) b.first_gate -= static_cast<std::size_t>(n_preparation_);
  n_preparation_ = 0;
  initial_ = std::move(psi);
}

StateVector ParametrizedCircuit::input_state() const {
  if (initial_) return *initial_;
  return StateVector::basis(n_qubits_, 0);
}

ParametrizedCircuit ParametrizedCircuit::widened(int n_qubits) const {
  if (n_qubits < n_qubits_) throw std::invalid_argument("widened: cannot shrink a circuit");
  ParametrizedCircuit out = *this;
  out.n_qubits_ = n_qubits;
  if (initial_) {
    CVector v = CVector::Zero(Eigen::Index{1} << n_qubits);
    v.head(initial_->dim()) = initial_->amplitudes();
    out.initial_ = StateVector(n_qubits, std::move(v));
  }
  return out;
}

std::string ParametrizedCircuit::summary() const {
  std::ostringstream os;
  os << "circuit qubits=" << n_qubits_ << " gates=" << gates_.size() << " parameters=" << n_parameters()
     << (initial_ ? " input=vector" : " input=basis") << '\n';
  for (const Gate& g : gates_) {
    os << to_string(g.kind);
    for (int q : g.qubits) os << ' ' << q;
    if (g.kind == GateKind::pauli_rotation || g.kind == GateKind::controlled_pauli)
      os << " [" << PauliTerm(n_qubits_, g.pauli, 1.0).letters() << ']';
    if (g.parameterized())
      os << " (" << names_[static_cast<std::size_t>(g.param)] << " * " << g.scale << ')';
    else if (g.kind != GateKind::x && g.kind != GateKind::h && g.kind != GateKind::cnot &&
             g.kind != GateKind::controlled_pauli)
      os << " (" << g.angles[0] << ')';
    os << '\n';
  }
  return os.str();
}

}  // namespace tchub
