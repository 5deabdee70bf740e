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

#include <complex>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

namespace tchub {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Dense register of 2^n amplitudes. Bit q of a basis index is the
/// occupation of qubit q.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, CVector amplitudes);

  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

  const CVector& amplitudes() const { return amplitudes_; }
  CVector& amplitudes() { return amplitudes_; }

  cplx operator[](Eigen::Index i) const { return amplitudes_[i]; }
  cplx& operator[](Eigen::Index i) { return amplitudes_[i]; }

  double norm() const { return amplitudes_.norm(); }
  void normalize();

 private:
  int n_qubits_ = 0;
  CVector amplitudes_;
};

/// <a|b>
cplx inner(const StateVector& a, const StateVector& b);

void require_same_size(const StateVector& a, const StateVector& b);

}  // namespace tchub
