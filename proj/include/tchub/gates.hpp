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
#include <string>
#include <utility>
#include <vector>

#include "tchub/pauli.hpp"

namespace tchub {

enum class GateKind {
  u3,
  rx,
  ry,
  rz,
  x,
  h,
  phase,             // diag(1, e^{i lambda})
  cnot,
  controlled_pauli,  // Pauli string applied when qubits[0] reads control_value
  pauli_rotation,    // exp(-i angle P / 2)
};

std::string to_string(GateKind k);

/// A gate with at most one free parameter. The bound angle is
/// angles[0] + scale * theta[param]; for u3 only theta is parameterizable.
struct Gate {
  GateKind kind = GateKind::x;
  std::vector<int> qubits;
  std::array<double, 3> angles{};
  int param = -1;
  double scale = 1.0;
  PauliString pauli;
  int control_value = 1;

  bool parameterized() const { return param >= 0; }
  /// Bound first angle; throws when the parameter is missing from theta.
  double angle(const RVector& theta) const;

  static Gate u3(int q, double theta, double phi, double lambda);
  static Gate rx(int q, double angle);
  static Gate ry(int q, double angle);
  static Gate rz(int q, double angle);
  static Gate x(int q);
  static Gate h(int q);
  static Gate phase(int q, double lambda);
  static Gate cnot(int control, int target);
  static Gate controlled_pauli(int control, PauliString p, int control_value = 1);
  static Gate pauli_rotation(PauliString p, double angle);

  /// Binds the first angle to theta[index] * scale (plus the stored offset).
  Gate& bind(int index, double s = 1.0);
};

CMatrix u3_matrix(double theta, double phi, double lambda);

/// Matrix on the gate's own qubits (qubits[0] is the least significant bit).
/// Pauli rotations and controlled Paulis are realized on their full support.
CMatrix gate_matrix(const Gate& g, const RVector& theta = RVector());

/// In-place application to a register; qubit indices are absolute.
void apply_gate(const Gate& g, const RVector& theta, CVector& psi);

/// exp(-i angle P / 2) |psi> in place.
void apply_pauli_rotation(const PauliString& p, double angle, CVector& psi);

/// dG/dtheta = scale * G * sum_k w_k Q_k with Pauli strings Q_k. For every
/// rotation this is a single term, e.g. R_y: scale -i/2, Q = Y.
struct GateDerivativeLCU {
  cplx scale = 0.0;
  std::vector<std::pair<double, PauliString>> unitaries;
};

GateDerivativeLCU lcu_gate_derivative(const Gate& g);

}  // namespace tchub
