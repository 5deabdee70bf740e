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

// Independent reference implementations used only by the tests.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "tchub/fermion.hpp"
#include "tchub/lattice.hpp"
#include "tchub/state.hpp"

namespace oracle {

using tchub::CMatrix;
using tchub::CVector;
using tchub::cplx;

/// Applies a_p or a_p^dag to a Fock index; returns the sign or nothing when it vanishes.
inline std::optional<double> ladder(std::uint64_t& index, int mode, bool dagger) {
  const std::uint64_t bit = std::uint64_t{1} << mode;
  const bool occupied = (index & bit) != 0;
  if (occupied == dagger) return std::nullopt;
  const int below = std::popcount(index & (bit - 1));
  index ^= bit;
  return (below % 2) ? -1.0 : 1.0;
}

/// Dense matrix of a ladder-operator polynomial acting on the full Fock space.
inline CMatrix fock_matrix(const tchub::FermionOperator& op) {
  const int n = op.n_modes();
  const std::uint64_t dim = std::uint64_t{1} << n;
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [product, c] : op.terms()) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      std::uint64_t idx = col;
      double sign = 1.0;
      bool alive = true;
      for (auto it = product.rbegin(); it != product.rend() && alive; ++it) {
        const auto s = ladder(idx, it->mode, it->dagger);
        if (!s) alive = false;
        else sign *= *s;
      }
      if (alive) m(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(col)) += c * sign;
    }
  }
  return m;
}

/// Real-space Hubbard ring written directly from its definition.
inline CMatrix hubbard_ring(int n, double t, double U) {
  const int modes = 2 * n;
  const std::uint64_t dim = std::uint64_t{1} << modes;
  CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (int i = 0; i < n; ++i) {
      const bool up = col >> i & 1, dn = col >> (n + i) & 1;
      if (up && dn) h(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) += U;
    }
    for (int spin = 0; spin < 2; ++spin)
      for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
          std::uint64_t idx = col;
          auto s1 = ladder(idx, b + spin * n, false);
          if (!s1) continue;
          auto s2 = ladder(idx, a + spin * n, true);
          if (!s2) continue;
          h(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(col)) += -t * *s1 * *s2;
        }
      }
  }
  return h;
}

/// Indices of the half-filled, zero-magnetisation sector.
inline std::vector<std::uint64_t> half_filling(int n) {
  std::vector<std::uint64_t> out;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << (2 * n)); ++i)
    if (std::popcount(i & mask) == n / 2 && std::popcount(i >> n) == n / 2) out.push_back(i);
  return out;
}

inline CMatrix restrict(const CMatrix& m, const std::vector<std::uint64_t>& idx) {
  const auto d = static_cast<Eigen::Index>(idx.size());
  CMatrix r(d, d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b)
      r(a, b) = m(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(a)]),
                  static_cast<Eigen::Index>(idx[static_cast<std::size_t>(b)]));
  return r;
}

inline CMatrix expm(const CMatrix& m) { return m.exp(); }

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline CMatrix pauli(char c) {
  CMatrix m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m = CMatrix::Identity(2, 2);
  }
  return m;
}

/// Dense Pauli string where letter k acts on qubit k (bit k of the index).
inline CMatrix pauli_string(const std::string& letters) {
  CMatrix m = CMatrix::Identity(1, 1);
  for (char c : letters) m = kron(pauli(c), m);
  return m;
}

/// Central finite difference of a state-valued function.
inline CVector central_difference(const std::function<CVector(double)>& f, double h = 1e-5) {
  return (f(h) - f(-h)) / (2.0 * h);
}

}  // namespace oracle
