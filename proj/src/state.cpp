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
#include "tchub/state.hpp"

#include <string>

namespace tchub {

StateVector::StateVector(int n_qubits)
    : n_qubits_(n_qubits), amplitudes_(CVector::Zero(Eigen::Index{1} << n_qubits)) {
  if (n_qubits < 0 || n_qubits > 30) throw std::invalid_argument("unsupported register size");
}

StateVector::StateVector(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != (Eigen::Index{1} << n_qubits))
    throw std::invalid_argument("amplitude count does not match 2^" + std::to_string(n_qubits));
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= static_cast<std::uint64_t>(s.dim())) throw std::out_of_range("basis index");
  s.amplitudes_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

void StateVector::normalize() {
  const double n = amplitudes_.norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  amplitudes_ /= n;
}

cplx inner(const StateVector& a, const StateVector& b) {
  require_same_size(a, b);
  return a.amplitudes().dot(b.amplitudes());
}

void require_same_size(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("register size mismatch: " + std::to_string(a.n_qubits()) +
                                " vs " + std::to_string(b.n_qubits()));
}

}  // namespace tchub
