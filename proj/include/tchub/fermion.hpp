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

#include <map>
#include <string>
#include <vector>

#include "tchub/pauli.hpp"

namespace tchub {

struct Ladder {
  int mode = 0;
  bool dagger = false;
  auto operator<=>(const Ladder&) const = default;
};

inline Ladder cr(int mode) { return {mode, true}; }
inline Ladder an(int mode) { return {mode, false}; }

using LadderProduct = std::vector<Ladder>;

/// Sum of products of creation/annihilation operators. Every stored product
/// is normal ordered: creators left of annihilators, ascending mode index in
/// each group. Anticommutation signs and contraction terms are generated
/// exactly when a product is inserted.
class FermionOperator {
 public:
  using TermMap = std::map<LadderProduct, cplx>;

  FermionOperator() = default;
  explicit FermionOperator(int n_modes);

  static FermionOperator identity(int n_modes, cplx c = 1.0);

  int n_modes() const { return n_modes_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  cplx coefficient(const LadderProduct& p) const;

  /// Adds c * product (any order); the product is normal ordered first.
  void add(const LadderProduct& product, cplx c);
  void prune(double tol = kPruneTolerance);

  FermionOperator adjoint() const;
  /// Largest body count among terms (number of creators in the widest term).
  int max_body() const;

  FermionOperator& operator+=(const FermionOperator& rhs);
  FermionOperator& operator-=(const FermionOperator& rhs);
  FermionOperator& operator*=(cplx s);
  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
  friend FermionOperator operator-(FermionOperator a, const FermionOperator& b) { return a -= b; }
  friend FermionOperator operator*(FermionOperator a, cplx s) { return a *= s; }
  friend FermionOperator operator*(cplx s, FermionOperator a) { return a *= s; }
  friend FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

  bool operator==(const FermionOperator&) const = default;

 private:
  void add_ordered(const LadderProduct& product, cplx c, int depth);

  int n_modes_ = 0;
  TermMap terms_;
};

/// Normal-ordered expansion of c * product as (product, coefficient) pairs.
std::vector<std::pair<LadderProduct, cplx>> normal_order(const LadderProduct& product, cplx c = 1.0);

std::string to_string(const LadderProduct& p);

/// Jordan-Wigner image on n_modes qubits: mode p -> qubit p,
/// a_p^dagger = Z_0 ... Z_{p-1} (X_p - i Y_p) / 2.
PauliSum jordan_wigner(const FermionOperator& op);
PauliSum jordan_wigner(const LadderProduct& product, int n_modes, cplx c = 1.0);

}  // namespace tchub
