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
#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>

#include "tchub/simulator.hpp"

namespace tchub {

namespace {

void check_theta(const ParametrizedCircuit& c, const RVector& theta) {
  if (theta.size() != c.n_parameters())
    throw std::invalid_argument("expected " + std::to_string(c.n_parameters()) + " parameters, got " +
                                std::to_string(theta.size()));
}

cplx global_phase(const ParametrizedCircuit& c, const RVector& theta) {
  const auto g = c.global_phase_index();
  return g ? std::exp(cplx(0.0, theta[*g])) : cplx(1.0);
}

// Pairs (D, D', s) with T|D> = s|D'>, T = a^dag_{to...} a_{from reversed}.
struct ExcitationPairs {
  std::vector<std::uint64_t> source;
  std::vector<std::uint64_t> target;
  std::vector<double> sign;
};

ExcitationPairs excitation_pairs(const Excitation& e, int n_qubits) {
  std::uint64_t from_mask = 0, to_mask = 0;
  for (int m : e.from) from_mask |= std::uint64_t{1} << m;
  for (int m : e.to) to_mask |= std::uint64_t{1} << m;
  ExcitationPairs out;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t j = 0; j < dim; ++j) {
    if ((j & from_mask) != from_mask || (j & to_mask) != 0) continue;
    std::uint64_t state = j;
    int parity = 0;
    auto flip = [&](int mode) {
      parity += std::popcount(state & ((std::uint64_t{1} << mode) - 1));
      state ^= std::uint64_t{1} << mode;
    };
    for (int m : e.from) flip(m);
    for (auto it = e.to.rbegin(); it != e.to.rend(); ++it) flip(*it);
    out.source.push_back(j);
    out.target.push_back(state);
    out.sign.push_back(parity % 2 ? -1.0 : 1.0);
  }
  return out;
}

void apply_excitation(const ExcitationPairs& p, double angle, CVector& v) {
  const double c = std::cos(angle), s = std::sin(angle);
  for (std::size_t k = 0; k < p.source.size(); ++k) {
    const auto a = static_cast<Eigen::Index>(p.source[k]);
    const auto b = static_cast<Eigen::Index>(p.target[k]);
    const cplx va = v[a], vb = v[b];
    v[a] = c * va - p.sign[k] * s * vb;
    v[b] = c * vb + p.sign[k] * s * va;
  }
}

// (T - T^dag) v restricted to the coupled pairs; other amplitudes map to zero.
CVector apply_excitation_generator(const ExcitationPairs& p, const CVector& v) {
  CVector out = CVector::Zero(v.size());
  for (std::size_t k = 0; k < p.source.size(); ++k) {
    const auto a = static_cast<Eigen::Index>(p.source[k]);
    const auto b = static_cast<Eigen::Index>(p.target[k]);
    out[a] = -p.sign[k] * v[b];
    out[b] = p.sign[k] * v[a];
  }
  return out;
}

// One step of the gate sequence: either a single gate or a fused excitation block.
struct Op {
  std::size_t gate = 0;
  const ExcitationBlock* block = nullptr;
  std::shared_ptr<ExcitationPairs> pairs;
};

std::vector<Op> schedule(const ParametrizedCircuit& c) {
  std::vector<Op> ops;
  const auto& blocks = c.excitation_blocks();
  std::size_t b = 0;
  for (std::size_t g = 0; g < c.gates().size();) {
    while (b < blocks.size() && blocks[b].first_gate < g) ++b;
    if (b < blocks.size() && blocks[b].first_gate == g) {
      ops.push_back({g, &blocks[b], std::make_shared<ExcitationPairs>(excitation_pairs(blocks[b].excitation, c.n_qubits()))});
      g += blocks[b].n_gates;
    } else {
      ops.push_back({g, nullptr, nullptr});
      ++g;
    }
  }
  return ops;
}

void apply_op(const ParametrizedCircuit& c, const Op& op, const RVector& theta, CVector& v) {
  if (op.block) apply_excitation(*op.pairs, theta[op.block->param], v);
  else apply_gate(c.gates()[op.gate], theta, v);
}

}  // namespace

StateVector evolve(const ParametrizedCircuit& c, const RVector& theta, const StateVector& psi0) {
  check_theta(c, theta);
  if (psi0.n_qubits() != c.n_qubits()) throw std::invalid_argument("evolve: input state has the wrong register size");
  CVector v = psi0.amplitudes();
  for (const Op& op : schedule(c)) apply_op(c, op, theta, v);
  v *= global_phase(c, theta);
  return StateVector(c.n_qubits(), std::move(v));
}

StateVector evolve(const ParametrizedCircuit& c, const RVector& theta) { return evolve(c, theta, c.input_state()); }

cplx expectation(const StateVector& psi, const PauliSum& op) {
  if (op.n_qubits() != psi.n_qubits()) throw std::invalid_argument("expectation: register size mismatch");
  return psi.amplitudes().dot(apply(op, psi).amplitudes());
}

cplx expectation(const StateVector& psi, const SparseCMatrix& op) {
  if (op.rows() != psi.dim()) throw std::invalid_argument("expectation: register size mismatch");
  return psi.amplitudes().dot(op * psi.amplitudes());
}

CircuitJet circuit_jet(const ParametrizedCircuit& c, const RVector& theta, DerivativeMethod method, double fd_step) {
  check_theta(c, theta);
  const int np = c.n_parameters();
  CircuitJet jet;
  if (method == DerivativeMethod::finite_difference) {
    jet.state = evolve(c, theta);
    for (int i = 0; i < np; ++i) {
      RVector shifted = theta;
      shifted[i] += fd_step;
      jet.derivatives.push_back((evolve(c, shifted).amplitudes() - jet.state.amplitudes()) / fd_step);
    }
    return jet;
  }

  CVector psi = c.input_state().amplitudes();
  std::vector<CVector> d(static_cast<std::size_t>(np));
  std::vector<bool> started(static_cast<std::size_t>(np), false);
  CVector scratch(psi.size()), local(psi.size());
  for (const Op& op : schedule(c)) {
    const Gate& g = c.gates()[op.gate];
    const int param = op.block ? op.block->param : g.param;
    if (op.block) {
      apply_op(c, op, theta, psi);
      local = apply_excitation_generator(*op.pairs, psi);
    } else {
      if (g.parameterized()) {
        // dG/dtheta |psi> = G * scale * sum_k w_k Q_k |psi>.
        const GateDerivativeLCU lcu = lcu_gate_derivative(g);
        local.setZero();
        for (const auto& [w, q] : lcu.unitaries) {
          apply_string(q, psi, scratch);
          local += (lcu.scale * w) * scratch;
        }
        apply_gate(g, theta, local);
      }
      apply_gate(g, theta, psi);
    }
    for (int k = 0; k < np; ++k)
      if (started[static_cast<std::size_t>(k)]) apply_op(c, op, theta, d[static_cast<std::size_t>(k)]);
    if (param < 0) continue;
    auto& target = d[static_cast<std::size_t>(param)];
    if (!started[static_cast<std::size_t>(param)]) {
      target = local;
      started[static_cast<std::size_t>(param)] = true;
    } else {
      target += local;
    }
  }
  const cplx phase = global_phase(c, theta);
  psi *= phase;
  for (int k = 0; k < np; ++k) {
    auto& v = d[static_cast<std::size_t>(k)];
    if (!started[static_cast<std::size_t>(k)]) v = CVector::Zero(psi.size());
    else v *= phase;
  }
  if (const auto gi = c.global_phase_index()) d[static_cast<std::size_t>(*gi)] = cplx(0.0, 1.0) * psi;
  jet.state = StateVector(c.n_qubits(), std::move(psi));
  jet.derivatives = std::move(d);
  return jet;
}

StateVector derivative_state(const ParametrizedCircuit& c, const RVector& theta, int i, DerivativeMethod method,
                             double fd_step) {
  if (i < 0 || i >= c.n_parameters()) throw std::out_of_range("derivative_state: parameter index out of range");
  if (method == DerivativeMethod::finite_difference) {
    RVector shifted = theta;
    shifted[i] += fd_step;
    return StateVector(c.n_qubits(), (evolve(c, shifted).amplitudes() - evolve(c, theta).amplitudes()) / fd_step);
  }
  return StateVector(c.n_qubits(), circuit_jet(c, theta).derivatives[static_cast<std::size_t>(i)]);
}

}  // namespace tchub
