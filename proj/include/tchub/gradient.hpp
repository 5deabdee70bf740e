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
#include <limits>

#include "tchub/sampling.hpp"
#include "tchub/simulator.hpp"

namespace tchub {

/// h_plus = H + H^dag (Hermitian), h_minus = H - H^dag (anti-Hermitian).
struct HermitianSplit {
  PauliSum h_plus;
  PauliSum h_minus;
};

HermitianSplit split(const PauliSum& h);

enum class EvalMode { sv, shots };

struct ShotSettings {
  std::int64_t shots = 100000;
  std::uint64_t seed = 0;
  /// Symmetric per-qubit readout flip probability; 0 disables the readout model.
  double readout_flip = 0.0;
};

/// Second ancilla gate of the derivative circuit: H for the Hermitian part,
/// R_x(pi/2) for the anti-Hermitian part.
enum class AncillaBasis { hadamard, rx_half_pi };

inline constexpr std::size_t kGlobalPhaseGate = std::numeric_limits<std::size_t>::max();

/// Derivative circuit on n+1 qubits (ancilla = qubit n): ancilla H, a phase
/// carrying arg(scale), the controlled Pauli term `term` of the gate's LCU
/// inserted just before that gate, the rest of the ansatz, then V. With
/// gate_index = kGlobalPhaseGate the branch carries i |Phi> instead.
ParametrizedCircuit gradient_circuit(const ParametrizedCircuit& c, std::size_t gate_index, std::size_t term,
                                     AncillaBasis v);

/// <Z_a (x) O> on the derivative circuit; O must be Hermitian for the
/// H basis and is i * h_minus (h_minus anti-Hermitian) for the R_x basis.
double ancilla_expectation(const ParametrizedCircuit& circuit, const RVector& theta, const PauliSum& observable);

struct CElement {
  double value = 0.0;      // (C+ + C-) / 4
  double c_plus = 0.0;     // 2 Re <dPhi|h_plus|Phi>
  double c_minus = 0.0;    // 2 Re <dPhi|h_minus|Phi>
  double std_error = 0.0;  // shots mode only
};

/// C_i = Re <d_i Phi|H|Phi> from the ancilla circuits of both split parts.
CElement c_element(const ParametrizedCircuit& c, const RVector& theta, int i, const HermitianSplit& parts, EvalMode mode,
                   const ShotSettings& shots = {});
double c_element(const ParametrizedCircuit& c, const RVector& theta, int i, const PauliSum& h, EvalMode mode,
                 const ShotSettings& shots = {});

/// Hadamard-test circuit for Re <d_i Phi|d_j Phi> between two LCU terms.
ParametrizedCircuit metric_circuit(const ParametrizedCircuit& c, std::size_t gate_i, std::size_t term_i,
                                   std::size_t gate_j, std::size_t term_j);

/// A_ij = Re <d_i Phi|d_j Phi>; SV mode contracts derivative states.
Estimate a_element_estimate(const ParametrizedCircuit& c, const RVector& theta, int i, int j, EvalMode mode,
                            const ShotSettings& shots = {});
double a_element(const ParametrizedCircuit& c, const RVector& theta, int i, int j, EvalMode mode,
                 const ShotSettings& shots = {});

/// <d_i Phi|P|Phi> for one Pauli string from controlled-P circuits; small
/// reference only, every Hamiltonian term would need its own pair of circuits.
cplx controlled_hamiltonian_term(const ParametrizedCircuit& c, const RVector& theta, int i, const PauliString& p);

}  // namespace tchub
