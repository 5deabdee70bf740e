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
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tchub/circuit.hpp"
#include "tchub/fermion.hpp"

namespace tchub {

std::string Excitation::label() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < from.size(); ++k) os << (k ? "," : "") << from[k];
  os << "->";
  for (std::size_t k = 0; k < to.size(); ++k) os << (k ? "," : "") << to[k];
  return os.str();
}

std::vector<Excitation> quccsd_excitations(const Lattice& lat, const ReferenceDeterminant& reference) {
  const int n = lat.n_sites();
  std::vector<int> occ[2], vir[2];
  for (int s = 0; s < 2; ++s)
    for (int o = 0; o < n; ++o) {
      const int m = lat.mode(o, static_cast<Spin>(s));
      const bool occupied = std::binary_search(reference.occupied_modes.begin(), reference.occupied_modes.end(), m);
      (occupied ? occ[s] : vir[s]).push_back(m);
    }

  std::vector<Excitation> singles, doubles;
  for (int s = 0; s < 2; ++s)
    for (int i : occ[s])
      for (int a : vir[s]) singles.push_back({{i}, {a}});

  // All occupied pairs and virtual pairs whose total S_z matches.
  std::vector<int> all_occ(occ[0]), all_vir(vir[0]);
  all_occ.insert(all_occ.end(), occ[1].begin(), occ[1].end());
  all_vir.insert(all_vir.end(), vir[1].begin(), vir[1].end());
  auto spin_of = [&](int m) { return m >= n ? 1 : 0; };
  for (std::size_t x = 0; x < all_occ.size(); ++x)
    for (std::size_t y = x + 1; y < all_occ.size(); ++y)
      for (std::size_t u = 0; u < all_vir.size(); ++u)
        for (std::size_t w = u + 1; w < all_vir.size(); ++w) {
          const int i = all_occ[x], j = all_occ[y], a = all_vir[u], b = all_vir[w];
          if (spin_of(i) + spin_of(j) != spin_of(a) + spin_of(b)) continue;
          doubles.push_back({{i, j}, {a, b}});
        }

  auto lex = [](const Excitation& l, const Excitation& r) {
    return std::tie(l.from, l.to) < std::tie(r.from, r.to);
  };
  std::sort(singles.begin(), singles.end(), lex);
  std::sort(doubles.begin(), doubles.end(), lex);
  singles.insert(singles.end(), doubles.begin(), doubles.end());
  return singles;
}

namespace {

/// JW image of T - T^dag as i * sum_j c_j P_j with real c_j.
std::vector<std::pair<double, PauliString>> excitation_generator(const Excitation& e, int n_modes) {
  LadderProduct t;
  for (auto it = e.to.begin(); it != e.to.end(); ++it) t.push_back(cr(*it));
  for (auto it = e.from.rbegin(); it != e.from.rend(); ++it) t.push_back(an(*it));
  FermionOperator op(n_modes);
  op.add(t, 1.0);
  op -= op.adjoint();
  const PauliSum p = jordan_wigner(op);
  std::vector<std::pair<double, PauliString>> out;
  for (const auto& [s, c] : p.terms())
    for (const auto& [s2, c2] : p.terms()) {
      PauliString ab, ba;
      if (pauli_product(s, s2, ab) != pauli_product(s2, s, ba)) throw std::logic_error("excitation terms do not commute");
    }
  for (const auto& [s, c] : p.terms()) {
    if (std::abs(c.real()) > 1e-12) throw std::logic_error("excitation generator is not anti-Hermitian");
    out.emplace_back(c.imag(), s);
  }
  return out;
}

}  // namespace

ParametrizedCircuit build_quccsd(const Lattice& lat, const ReferenceDeterminant& reference, int n_layers) {
  ParametrizedCircuit c = build_quccsd(lat, reference, quccsd_excitations(lat, reference), n_layers);
  c.set_ordering("singles then doubles, lexicographic by (occupied, virtual) spin-orbital indices; " +
                 std::to_string(n_layers) + " layer(s)");
  return c;
}

ParametrizedCircuit build_quccsd(const Lattice& lat, const ReferenceDeterminant& reference,
                                 const std::vector<Excitation>& excitations, int n_layers) {
  if (n_layers < 1) throw std::invalid_argument("build_quccsd: at least one layer is required");
  if (reference.n_qubits != lat.n_modes()) throw std::invalid_argument("build_quccsd: reference size mismatch");
  ParametrizedCircuit c(lat.n_modes());
  for (int m : reference.occupied_modes) c.add_preparation(Gate::u3(m, std::numbers::pi, 0, std::numbers::pi));

  std::vector<std::vector<std::pair<double, PauliString>>> generators;
  for (const Excitation& e : excitations) generators.push_back(excitation_generator(e, lat.n_modes()));

  for (int layer = 0; layer < n_layers; ++layer)
    for (std::size_t k = 0; k < excitations.size(); ++k) {
      const int idx = c.add_parameter("t" + std::to_string(layer) + "[" + excitations[k].label() + "]");
      // exp(theta i c P) = exp(-i (-2 c theta) P / 2); the terms commute.
      const std::size_t first = c.gates().size();
      for (const auto& [coef, s] : generators[k]) c.add(Gate::pauli_rotation(s, 0.0).bind(idx, -2.0 * coef));
      c.add_excitation_block({first, generators[k].size(), idx, excitations[k]});
    }
  c.set_ordering("custom excitation list; " + std::to_string(n_layers) + " layer(s)");
  return c;
}

ParametrizedCircuit build_ry_ansatz(int n_qubits, int n_layers, std::uint64_t input) {
  if (n_qubits < 2) throw std::invalid_argument("build_ry_ansatz: at least two qubits are required");
  if (n_layers < 1) throw std::invalid_argument("build_ry_ansatz: at least one layer is required");
  ParametrizedCircuit c(n_qubits);
  for (int q = 0; q < n_qubits; ++q)
    if (input & (std::uint64_t{1} << q)) c.add_preparation(Gate::u3(q, std::numbers::pi, 0, std::numbers::pi));
  auto rotations = [&](int block) {
    for (int q = 0; q < n_qubits; ++q)
      c.add(Gate::ry(q, 0.0).bind(c.add_parameter("y" + std::to_string(block) + "_" + std::to_string(q))));
  };
  rotations(0);
  for (int layer = 0; layer < n_layers; ++layer) {
    for (int q = 0; q + 1 < n_qubits; ++q) c.add(Gate::cnot(q, q + 1));
    rotations(layer + 1);
  }
  c.set_ordering("R_y blocks by layer then qubit");
  return c;
}

}  // namespace tchub
