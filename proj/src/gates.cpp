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
#include "tchub/gates.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tchub {

namespace {

constexpr cplx kI{0.0, 1.0};

PauliString single(int q, char letter) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  switch (letter) {
    case 'X': return {bit, 0};
    case 'Y': return {bit, bit};
    default: return {0, bit};
  }
}

cplx string_phase(const PauliString& p, std::uint64_t j) {
  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx base = kIPow[std::popcount(p.x & p.z) % 4];
  return (std::popcount(p.z & j) & 1) ? -base : base;
}

std::vector<int> support_qubits(const PauliString& p) {
  std::vector<int> qs;
  for (std::uint64_t s = p.support(); s; s &= s - 1) qs.push_back(std::countr_zero(s));
  return qs;
}

/// Re-expresses p on the local register formed by `qubits`.
PauliString localize(const PauliString& p, const std::vector<int>& qubits) {
  PauliString out;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    const std::uint64_t src = std::uint64_t{1} << qubits[k];
    if (p.x & src) out.x |= std::uint64_t{1} << k;
    if (p.z & src) out.z |= std::uint64_t{1} << k;
  }
  return out;
}

CMatrix string_matrix(const PauliString& p, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    m(static_cast<Eigen::Index>(static_cast<std::uint64_t>(j) ^ p.x), j) = string_phase(p, static_cast<std::uint64_t>(j));
  return m;
}

void apply_single(const Eigen::Matrix2cd& m, int q, CVector& psi) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  const auto dim = static_cast<std::uint64_t>(psi.size());
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (j & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(j), i1 = static_cast<Eigen::Index>(j | bit);
    const cplx a = psi[i0], b = psi[i1];
    psi[i0] = m(0, 0) * a + m(0, 1) * b;
    psi[i1] = m(1, 0) * a + m(1, 1) * b;
  }
}

void require_qubits(const Gate& g, std::size_t count) {
  if (g.qubits.size() != count) throw std::invalid_argument(to_string(g.kind) + " gate has the wrong number of qubits");
}

}  // namespace

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::u3: return "u3";
    case GateKind::rx: return "rx";
    case GateKind::ry: return "ry";
    case GateKind::rz: return "rz";
    case GateKind::x: return "x";
    case GateKind::h: return "h";
    case GateKind::phase: return "p";
    case GateKind::cnot: return "cx";
    case GateKind::controlled_pauli: return "cpauli";
    case GateKind::pauli_rotation: return "rpauli";
  }
  return "?";
}

double Gate::angle(const RVector& theta) const {
  if (param < 0) return angles[0];
  if (param >= theta.size())
    throw std::out_of_range("gate " + to_string(kind) + " refers to unbound parameter " + std::to_string(param));
  return angles[0] + scale * theta[param];
}

Gate Gate::u3(int q, double theta, double phi, double lambda) {
  Gate g;
  g.kind = GateKind::u3;
  g.qubits = {q};
  g.angles = {theta, phi, lambda};
  return g;
}

Gate Gate::rx(int q, double a) {
  Gate g;
  g.kind = GateKind::rx;
  g.qubits = {q};
  g.angles[0] = a;
  return g;
}

Gate Gate::ry(int q, double a) {
  Gate g = rx(q, a);
  g.kind = GateKind::ry;
  return g;
}

Gate Gate::rz(int q, double a) {
  Gate g = rx(q, a);
  g.kind = GateKind::rz;
  return g;
}

Gate Gate::x(int q) {
  Gate g;
  g.kind = GateKind::x;
  g.qubits = {q};
  return g;
}

Gate Gate::h(int q) {
  Gate g = x(q);
  g.kind = GateKind::h;
  return g;
}

Gate Gate::phase(int q, double lambda) {
  Gate g = rx(q, lambda);
  g.kind = GateKind::phase;
  return g;
}

Gate Gate::cnot(int control, int target) {
  if (control == target) throw std::invalid_argument("cnot: control equals target");
  Gate g;
  g.kind = GateKind::cnot;
  g.qubits = {control, target};
  return g;
}

Gate Gate::controlled_pauli(int control, PauliString p, int control_value) {
  if (p.support() & (std::uint64_t{1} << control))
    throw std::invalid_argument("controlled_pauli: control qubit inside the Pauli support");
  Gate g;
  g.kind = GateKind::controlled_pauli;
  g.qubits = {control};
  for (int q : support_qubits(p)) g.qubits.push_back(q);
  g.pauli = p;
  g.control_value = control_value;
  return g;
}

Gate Gate::pauli_rotation(PauliString p, double a) {
  Gate g;
  g.kind = GateKind::pauli_rotation;
  g.qubits = support_qubits(p);
  g.pauli = p;
  g.angles[0] = a;
  return g;
}

Gate& Gate::bind(int index, double s) {
  param = index;
  scale = s;
  return *this;
}

CMatrix u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  CMatrix m(2, 2);
  m << c, -std::exp(kI * lambda) * s, std::exp(kI * phi) * s, std::exp(kI * (phi + lambda)) * c;
  return m;
}

CMatrix gate_matrix(const Gate& g, const RVector& theta) {
  using std::numbers::pi;
  const double a = g.angle(theta);
  switch (g.kind) {
    case GateKind::u3: return u3_matrix(a, g.angles[1], g.angles[2]);
    case GateKind::rx: return u3_matrix(a, -pi / 2, pi / 2);
    case GateKind::ry: return u3_matrix(a, 0, 0);
    case GateKind::rz: return std::exp(-kI * a / 2.0) * u3_matrix(0, 0, a);
    case GateKind::x: return u3_matrix(pi, 0, pi);
    case GateKind::h: {
      CMatrix m(2, 2);
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    }
    case GateKind::phase: return u3_matrix(0, 0, a);
    case GateKind::cnot: {
      CMatrix m = CMatrix::Zero(4, 4);
      m(0, 0) = m(2, 2) = m(3, 1) = m(1, 3) = 1;
      return m;
    }
    case GateKind::controlled_pauli: {
      const std::vector<int> targets(g.qubits.begin() + 1, g.qubits.end());
      const CMatrix p = string_matrix(localize(g.pauli, targets), static_cast<int>(targets.size()));
      const Eigen::Index d = p.rows();
      CMatrix m = CMatrix::Zero(2 * d, 2 * d);
      // Local index = control bit + 2 * target index.
      for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) {
          m(2 * r + g.control_value, 2 * c + g.control_value) = p(r, c);
          m(2 * r + 1 - g.control_value, 2 * c + 1 - g.control_value) = r == c ? 1.0 : 0.0;
        }
      return m;
    }
    case GateKind::pauli_rotation: {
      const int n = static_cast<int>(g.qubits.size());
      const CMatrix p = string_matrix(localize(g.pauli, g.qubits), n);
      return std::cos(a / 2) * CMatrix::Identity(p.rows(), p.cols()) - kI * std::sin(a / 2) * p;
    }
  }
  throw std::logic_error("gate_matrix: unknown gate kind");
}

void apply_pauli_rotation(const PauliString& p, double a, CVector& psi) {
  const double c = std::cos(a / 2), s = std::sin(a / 2);
  const auto dim = static_cast<std::uint64_t>(psi.size());
  if (p.x == 0) {
    for (std::uint64_t j = 0; j < dim; ++j) psi[static_cast<Eigen::Index>(j)] *= c - kI * s * string_phase(p, j);
    return;
  }
  for (std::uint64_t j = 0; j < dim; ++j) {
    const std::uint64_t k = j ^ p.x;
    if (k < j) continue;
    const auto ij = static_cast<Eigen::Index>(j), ik = static_cast<Eigen::Index>(k);
    const cplx a0 = psi[ij], b0 = psi[ik];
    psi[ij] = c * a0 - kI * s * string_phase(p, k) * b0;
    psi[ik] = c * b0 - kI * s * string_phase(p, j) * a0;
  }
}

void apply_gate(const Gate& g, const RVector& theta, CVector& psi) {
  const auto dim = static_cast<std::uint64_t>(psi.size());
  for (int q : g.qubits)
    if (q < 0 || (std::uint64_t{1} << q) >= dim) throw std::out_of_range("gate qubit outside the register");
  switch (g.kind) {
    case GateKind::cnot: {
      require_qubits(g, 2);
      const std::uint64_t cb = std::uint64_t{1} << g.qubits[0], tb = std::uint64_t{1} << g.qubits[1];
      for (std::uint64_t j = 0; j < dim; ++j)
        if ((j & cb) && !(j & tb)) std::swap(psi[static_cast<Eigen::Index>(j)], psi[static_cast<Eigen::Index>(j | tb)]);
      return;
    }
    case GateKind::controlled_pauli: {
      const std::uint64_t cb = std::uint64_t{1} << g.qubits[0];
      const std::uint64_t want = g.control_value ? cb : 0;
      const CVector in = psi;
      for (std::uint64_t j = 0; j < dim; ++j)
        if ((j & cb) == want) psi[static_cast<Eigen::Index>(j ^ g.pauli.x)] = string_phase(g.pauli, j) * in[static_cast<Eigen::Index>(j)];
      return;
    }
    case GateKind::pauli_rotation: apply_pauli_rotation(g.pauli, g.angle(theta), psi); return;
    case GateKind::rx: apply_pauli_rotation(single(g.qubits[0], 'X'), g.angle(theta), psi); return;
    case GateKind::ry: apply_pauli_rotation(single(g.qubits[0], 'Y'), g.angle(theta), psi); return;
    case GateKind::rz: apply_pauli_rotation(single(g.qubits[0], 'Z'), g.angle(theta), psi); return;
    default: {
      require_qubits(g, 1);
      apply_single(gate_matrix(g, theta), g.qubits[0], psi);
    }
  }
}

GateDerivativeLCU lcu_gate_derivative(const Gate& g) {
  const cplx half = -0.5 * kI * g.scale;
  switch (g.kind) {
    case GateKind::rx: return {half, {{1.0, single(g.qubits[0], 'X')}}};
    case GateKind::ry: return {half, {{1.0, single(g.qubits[0], 'Y')}}};
    case GateKind::rz: return {half, {{1.0, single(g.qubits[0], 'Z')}}};
    case GateKind::pauli_rotation: return {half, {{1.0, g.pauli}}};
    case GateKind::u3: {
      // dU3/dtheta = U3 Rz(l)^dag (-i Y / 2) Rz(l).
      const double l = g.angles[2];
      return {half, {{std::cos(l), single(g.qubits[0], 'Y')}, {std::sin(l), single(g.qubits[0], 'X')}}};
    }
    default: throw std::invalid_argument("lcu_gate_derivative: gate " + to_string(g.kind) + " has no parameter");
  }
}

}  // namespace tchub
