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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Sparse>

#include "tchub/state.hpp"

namespace tchub {

inline constexpr double kPruneTolerance = 1e-14;
inline constexpr int kMaxDenseQubits = 14;

/// Pauli string in symplectic form. Qubit q carries X^x Z^z times i^(x z),
/// so (1,1) is Y.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  auto operator<=>(const PauliString&) const = default;

  bool is_identity() const { return x == 0 && z == 0; }
  /// Qubits on which the string acts non-trivially.
  std::uint64_t support() const { return x | z; }
};

class PauliTerm {
 public:
  PauliTerm() = default;
  PauliTerm(int n_qubits, PauliString string, cplx coefficient);

  /// Character k of `letters` is the Pauli acting on qubit k.
  static PauliTerm from_letters(std::string_view letters, cplx coefficient = 1.0);

  int n_qubits() const { return n_qubits_; }
  const PauliString& string() const { return string_; }
  cplx coefficient() const { return coefficient_; }
  char letter(int qubit) const;
  std::string letters() const;

 private:
  int n_qubits_ = 0;
  PauliString string_;
  cplx coefficient_ = 0.0;
};

/// Product of two Pauli strings; returns the phase and writes the product string.
cplx pauli_product(const PauliString& a, const PauliString& b, PauliString& out);

PauliTerm multiply_terms(const PauliTerm& a, const PauliTerm& b);

/// Complex-weighted sum of Pauli strings in canonical (merged, pruned) form.
class PauliSum {
 public:
  using TermMap = std::map<PauliString, cplx>;

  PauliSum() = default;
  explicit PauliSum(int n_qubits);
  PauliSum(const PauliTerm& term);  // NOLINT(google-explicit-constructor)

  static PauliSum identity(int n_qubits, cplx coefficient = 1.0);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::vector<PauliTerm> to_terms() const;
  cplx coefficient(const PauliString& s) const;

  /// Accumulates without pruning; call prune() once a batch is complete.
  void accumulate(const PauliString& s, cplx c);
  void prune(double tol = kPruneTolerance);

  PauliSum adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;
  bool is_anti_hermitian(double tol = 1e-12) const;
  double max_abs_coefficient() const;

  PauliSum& operator+=(const PauliSum& rhs);
  PauliSum& operator-=(const PauliSum& rhs);
  PauliSum& operator*=(cplx s);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, cplx s) { return a *= s; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  bool operator==(const PauliSum& other) const = default;

 private:
  int n_qubits_ = 0;
  TermMap terms_;
};

using SparseCMatrix = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

CMatrix to_matrix(const PauliSum& op);
SparseCMatrix to_sparse(const PauliSum& op);

/// op |psi>, evaluated term by term.
StateVector apply(const PauliSum& op, const StateVector& psi);
/// P |psi> for a bare string (unit coefficient).
void apply_string(const PauliString& s, const CVector& in, CVector& out);

/// Text form: one term per line, "+a+bi LETTERS".
std::string to_text(const PauliSum& op);
PauliSum parse_pauli_sum(std::string_view text);

}  // namespace tchub
