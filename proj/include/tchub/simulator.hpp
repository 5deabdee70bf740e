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

#include <vector>

#include "tchub/circuit.hpp"

namespace tchub {

inline constexpr double kDefaultFdStep = 1e-9;

/// U(theta) applied to the circuit's own input state.
StateVector evolve(const ParametrizedCircuit& c, const RVector& theta);
/// U(theta) applied to psi0, ignoring the circuit's input specification.
StateVector evolve(const ParametrizedCircuit& c, const RVector& theta, const StateVector& psi0);

/// <psi|O|psi>; complex for non-Hermitian O.
cplx expectation(const StateVector& psi, const PauliSum& op);
cplx expectation(const StateVector& psi, const SparseCMatrix& op);

enum class DerivativeMethod { analytic, finite_difference };

/// d|Phi(theta)>/d theta_i; the finite-difference variant is a forward difference.
StateVector derivative_state(const ParametrizedCircuit& c, const RVector& theta, int i,
                             DerivativeMethod method = DerivativeMethod::analytic, double fd_step = kDefaultFdStep);

/// The state together with all of its first derivatives.
struct CircuitJet {
  StateVector state;
  std::vector<CVector> derivatives;
};

/// Forward-mode propagation: one sweep through the gate list carries every
/// derivative state along.
CircuitJet circuit_jet(const ParametrizedCircuit& c, const RVector& theta,
                       DerivativeMethod method = DerivativeMethod::analytic, double fd_step = kDefaultFdStep);

}  // namespace tchub
