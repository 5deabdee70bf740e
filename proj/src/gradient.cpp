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
#include "tchub/gradient.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace tchub {

HermitianSplit split(const PauliSum& h) {
  const PauliSum dag = h.adjoint();
  return {h + dag, h - dag};
}

namespace {

constexpr cplx kI{0.0, 1.0};

/// One LCU contribution to d_i |Phi>: weight * e^{i phase} * (circuit with Q inserted).
struct DerivativeTerm {
  std::size_t gate = kGlobalPhaseGate;
  std::size_t term = 0;
  double weight = 1.0;
  double phase = std::numbers::pi / 2;
};

std::vector<DerivativeTerm> derivative_terms(const ParametrizedCircuit& c, int i) {
  if (i < 0 || i >= c.n_parameters()) throw std::out_of_range("parameter index out of range");
  if (c.global_phase_index() == i) return {DerivativeTerm{}};
  std::vector<DerivativeTerm> out;
  for (std::size_t g = 0; g < c.gates().size(); ++g) {
    if (c.gates()[g].param != i) continue;
    const GateDerivativeLCU lcu = lcu_gate_derivative(c.gates()[g]);
    for (std::size_t k = 0; k < lcu.unitaries.size(); ++k)
      out.push_back({g, k, std::abs(lcu.scale) * lcu.unitaries[k].first, std::arg(lcu.scale)});
  }
  return out;
}

PauliString lcu_string(const ParametrizedCircuit& c, std::size_t gate, std::size_t term) {
  const GateDerivativeLCU lcu = lcu_gate_derivative(c.gates().at(gate));
  return lcu.unitaries.at(term).second;
}

/// Same parameters, preparation and input as c, on one more qubit, no ansatz gates yet.
ParametrizedCircuit skeleton(const ParametrizedCircuit& c) {
  ParametrizedCircuit w(c.n_qubits() + 1);
  for (int k = 0; k < c.n_gate_parameters(); ++k) w.add_parameter(c.parameter_names()[static_cast<std::size_t>(k)]);
  if (c.global_phase_index()) w.enable_global_phase();
  for (int g = 0; g < c.n_preparation_gates(); ++g) w.add_preparation(c.gates()[static_cast<std::size_t>(g)]);
  if (c.initial_state()) {
    CVector v = CVector::Zero(Eigen::Index{1} << w.n_qubits());
    v.head(c.initial_state()->dim()) = c.initial_state()->amplitudes();
    w.set_initial_state(StateVector(w.n_qubits(), std::move(v)));
  }
  return w;
}

struct Insertion {
  std::size_t before = kGlobalPhaseGate;
  Gate gate;
};

void copy_ansatz(const ParametrizedCircuit& c, ParametrizedCircuit& w, const std::vector<Insertion>& inserts) {
  for (std::size_t g = static_cast<std::size_t>(c.n_preparation_gates()); g < c.gates().size(); ++g) {
    for (const Insertion& ins : inserts)
      if (ins.before == g) w.add(ins.gate);
    w.add(c.gates()[g]);
  }
}

PauliSum with_ancilla_z(const PauliSum& op, int ancilla) {
  PauliSum out(ancilla + 1);
  for (const auto& [s, coef] : op.terms()) out.accumulate({s.x, s.z | (std::uint64_t{1} << ancilla)}, coef);
  out.prune();
  return out;
}

double measure(const StateVector& psi, const PauliSum& observable, EvalMode mode, const ShotSettings& shots,
               std::uint64_t seed, double& std_error) {
  std_error = 0.0;
  if (mode == EvalMode::sv) return expectation(psi, observable).real();
  std::optional<ReadoutModel> readout;
  if (shots.readout_flip > 0) readout = ReadoutModel::symmetric_flip(psi.n_qubits(), shots.readout_flip);
  const Estimate e = estimate_observable(psi, observable, shots.shots, seed, readout ? &*readout : nullptr);
  std_error = e.std_error;
  return e.mean;
}

}  // namespace

ParametrizedCircuit gradient_circuit(const ParametrizedCircuit& c, std::size_t gate_index, std::size_t term,
                                     AncillaBasis v) {
  const int a = c.n_qubits();
  ParametrizedCircuit w = skeleton(c);
  double phase = std::numbers::pi / 2;
  std::vector<Insertion> inserts;
  if (gate_index != kGlobalPhaseGate) {
    if (gate_index >= c.gates().size() || !c.gates()[gate_index].parameterized())
      throw std::invalid_argument("gradient_circuit: gate is not parameterized");
    const GateDerivativeLCU lcu = lcu_gate_derivative(c.gates()[gate_index]);
    phase = std::arg(lcu.scale);
    inserts.push_back({gate_index, Gate::controlled_pauli(a, lcu.unitaries.at(term).second)});
  }
  w.add(Gate::h(a));
  w.add(Gate::phase(a, phase));
  copy_ansatz(c, w, inserts);
  w.add(v == AncillaBasis::hadamard ? Gate::h(a) : Gate::rx(a, std::numbers::pi / 2));
  w.set_ordering(c.ordering());
  return w;
}

double ancilla_expectation(const ParametrizedCircuit& circuit, const RVector& theta, const PauliSum& observable) {
  if (!observable.is_hermitian()) throw std::logic_error("ancilla_expectation: observable must be Hermitian");
  const int a = circuit.n_qubits() - 1;
  return expectation(evolve(circuit, theta), with_ancilla_z(observable, a)).real();
}

CElement c_element(const ParametrizedCircuit& c, const RVector& theta, int i, const HermitianSplit& parts,
                   EvalMode mode, const ShotSettings& shots) {
  if (!parts.h_plus.empty() && !parts.h_plus.is_hermitian())
    throw std::logic_error("c_element: Hermitian branch received a non-Hermitian operator");
  if (!parts.h_minus.empty() && !parts.h_minus.is_anti_hermitian())
    throw std::logic_error("c_element: anti-Hermitian branch received a non-anti-Hermitian operator");
  const int a = c.n_qubits();
  const PauliSum plus_obs = with_ancilla_z(parts.h_plus, a);
  const PauliSum minus_obs = with_ancilla_z(parts.h_minus * kI, a);

  CElement out;
  double variance = 0;
  std::uint64_t label = 0;
  for (const DerivativeTerm& d : derivative_terms(c, i)) {
    double se = 0;
    if (!parts.h_plus.empty()) {
      const ParametrizedCircuit w = gradient_circuit(c, d.gate, d.term, AncillaBasis::hadamard);
      const double e = measure(evolve(w, theta), plus_obs, mode, shots, derive_seed(shots.seed, {std::uint64_t(i), label++}), se);
      out.c_plus += 2.0 * d.weight * e;
      variance += std::pow(2.0 * d.weight * se / 4.0, 2);
    }
    if (!parts.h_minus.empty()) {
      const ParametrizedCircuit w = gradient_circuit(c, d.gate, d.term, AncillaBasis::rx_half_pi);
      const double e = measure(evolve(w, theta), minus_obs, mode, shots, derive_seed(shots.seed, {std::uint64_t(i), label++}), se);
      out.c_minus -= 2.0 * d.weight * e;
      variance += std::pow(2.0 * d.weight * se / 4.0, 2);
    }
  }
  out.value = (out.c_plus + out.c_minus) / 4.0;
  out.std_error = std::sqrt(variance);
  return out;
}

double c_element(const ParametrizedCircuit& c, const RVector& theta, int i, const PauliSum& h, EvalMode mode,
                 const ShotSettings& shots) {
  return c_element(c, theta, i, split(h), mode, shots).value;
}

ParametrizedCircuit metric_circuit(const ParametrizedCircuit& c, std::size_t gate_i, std::size_t term_i,
                                   std::size_t gate_j, std::size_t term_j) {
  const int a = c.n_qubits();
  ParametrizedCircuit w = skeleton(c);
  auto phase_of = [&](std::size_t gate) {
    return gate == kGlobalPhaseGate ? std::numbers::pi / 2 : std::arg(lcu_gate_derivative(c.gates().at(gate)).scale);
  };
  std::vector<Insertion> inserts;
  if (gate_i != kGlobalPhaseGate) inserts.push_back({gate_i, Gate::controlled_pauli(a, lcu_string(c, gate_i, term_i), 0)});
  if (gate_j != kGlobalPhaseGate) inserts.push_back({gate_j, Gate::controlled_pauli(a, lcu_string(c, gate_j, term_j), 1)});
  w.add(Gate::h(a));
  w.add(Gate::x(a));
  w.add(Gate::phase(a, phase_of(gate_i)));
  w.add(Gate::x(a));
  w.add(Gate::phase(a, phase_of(gate_j)));
  copy_ansatz(c, w, inserts);
  w.add(Gate::h(a));
  return w;
}

Estimate a_element_estimate(const ParametrizedCircuit& c, const RVector& theta, int i, int j, EvalMode mode,
                            const ShotSettings& shots) {
  if (i < 0 || j < 0 || i >= c.n_parameters() || j >= c.n_parameters())
    throw std::out_of_range("a_element: parameter index out of range");
  if (mode == EvalMode::sv) {
    const CircuitJet jet = circuit_jet(c, theta);
    return {jet.derivatives[static_cast<std::size_t>(i)].dot(jet.derivatives[static_cast<std::size_t>(j)]).real(), 0.0};
  }
  Estimate out;
  double variance = 0;
  std::uint64_t label = 0;
  const PauliSum z_a = with_ancilla_z(PauliSum::identity(c.n_qubits()), c.n_qubits());
  for (const DerivativeTerm& di : derivative_terms(c, i))
    for (const DerivativeTerm& dj : derivative_terms(c, j)) {
      const ParametrizedCircuit w = metric_circuit(c, di.gate, di.term, dj.gate, dj.term);
      double se = 0;
      const double e = measure(evolve(w, theta), z_a, mode, shots,
                               derive_seed(shots.seed, {std::uint64_t(i), std::uint64_t(j), label++}), se);
      out.mean += di.weight * dj.weight * e;
      variance += std::pow(di.weight * dj.weight * se, 2);
    }
  out.std_error = std::sqrt(variance);
  return out;
}

double a_element(const ParametrizedCircuit& c, const RVector& theta, int i, int j, EvalMode mode,
                 const ShotSettings& shots) {
  return a_element_estimate(c, theta, i, j, mode, shots).mean;
}

cplx controlled_hamiltonian_term(const ParametrizedCircuit& c, const RVector& theta, int i, const PauliString& p) {
  const int a = c.n_qubits();
  const PauliSum z_a = with_ancilla_z(PauliSum::identity(a), a);
  cplx total = 0;
  for (const DerivativeTerm& d : derivative_terms(c, i)) {
    double parts[2];
    for (int part = 0; part < 2; ++part) {
      ParametrizedCircuit w = skeleton(c);
      std::vector<Insertion> inserts;
      if (d.gate != kGlobalPhaseGate)
        inserts.push_back({d.gate, Gate::controlled_pauli(a, lcu_string(c, d.gate, d.term), 1)});
      w.add(Gate::h(a));
      w.add(Gate::phase(a, d.phase - part * std::numbers::pi / 2));
      copy_ansatz(c, w, inserts);
      if (!p.is_identity()) w.add(Gate::controlled_pauli(a, p, 0));
      w.add(Gate::h(a));
      parts[part] = expectation(evolve(w, theta), z_a).real();
    }
    total += d.weight * cplx(parts[0], -parts[1]);
  }
  return total;
}

}  // namespace tchub
