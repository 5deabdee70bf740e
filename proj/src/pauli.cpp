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
#include "tchub/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tchub {
namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int popcount(std::uint64_t v) { return std::popcount(v); }

void check_qubits(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("register size must be in [0, 64]");
}

std::uint64_t mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

PauliTerm::PauliTerm(int n_qubits, PauliString string, cplx coefficient)
    : n_qubits_(n_qubits), string_(string), coefficient_(coefficient) {
  check_qubits(n_qubits);
  if ((string.support() & ~mask(n_qubits)) != 0)
    throw std::invalid_argument("Pauli string acts outside the register");
}

PauliTerm PauliTerm::from_letters(std::string_view letters, cplx coefficient) {
  PauliString s;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (letters[q]) {
      case 'I': break;
      case 'X': s.x |= bit; break;
      case 'Y': s.x |= bit; s.z |= bit; break;
      case 'Z': s.z |= bit; break;
      default: throw std::invalid_argument(std::string("invalid Pauli letter '") + letters[q] + "'");
    }
  }
  return PauliTerm(static_cast<int>(letters.size()), s, coefficient);
}

char PauliTerm::letter(int qubit) const {
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const bool x = string_.x & bit, z = string_.z & bit;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

std::string PauliTerm::letters() const {
  std::string out(static_cast<std::size_t>(n_qubits_), 'I');
  for (int q = 0; q < n_qubits_; ++q) out[static_cast<std::size_t>(q)] = letter(q);
  return out;
}

cplx pauli_product(const PauliString& a, const PauliString& b, PauliString& out) {
  out.x = a.x ^ b.x;
  out.z = a.z ^ b.z;
  // X^x1 Z^z1 X^x2 Z^z2 = (-1)^(z1.x2) X^(x1^x2) Z^(z1^z2), plus the i^(xz) Y phases.
  const int k = popcount(a.x & a.z) + popcount(b.x & b.z) - popcount(out.x & out.z) +
                2 * popcount(a.z & b.x);
  return kIPow[((k % 4) + 4) % 4];
}

PauliTerm multiply_terms(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("multiply_terms: register size mismatch");
  PauliString s;
  const cplx phase = pauli_product(a.string(), b.string(), s);
  return PauliTerm(a.n_qubits(), s, phase * a.coefficient() * b.coefficient());
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) { check_qubits(n_qubits); }

PauliSum::PauliSum(const PauliTerm& term) : n_qubits_(term.n_qubits()) {
  accumulate(term.string(), term.coefficient());
  prune();
}

PauliSum PauliSum::identity(int n_qubits, cplx coefficient) {
  PauliSum s(n_qubits);
  s.accumulate({}, coefficient);
  s.prune();
  return s;
}

std::vector<PauliTerm> PauliSum::to_terms() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& [s, c] : terms_) out.emplace_back(n_qubits_, s, c);
  return out;
}

cplx PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? cplx{0.0} : it->second;
}

void PauliSum::accumulate(const PauliString& s, cplx c) {
  if ((s.support() & ~mask(n_qubits_)) != 0) throw std::invalid_argument("Pauli string acts outside the register");
  terms_[s] += c;
}

void PauliSum::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(*this);
  for (auto& [s, c] : out.terms_) c = std::conj(c);
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

bool PauliSum::is_anti_hermitian(double tol) const {
  for (const auto& [s, c] : terms_)
    if (std::abs(c.real()) > tol) return false;
  return true;
}

double PauliSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

PauliSum& PauliSum::operator+=(const PauliSum& rhs) {
  if (n_qubits_ != rhs.n_qubits_) throw std::invalid_argument("PauliSum: register size mismatch");
  for (const auto& [s, c] : rhs.terms_) terms_[s] += c;
  prune();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& rhs) {
  if (n_qubits_ != rhs.n_qubits_) throw std::invalid_argument("PauliSum: register size mismatch");
  for (const auto& [s, c] : rhs.terms_) terms_[s] -= c;
  prune();
  return *this;
}

PauliSum& PauliSum::operator*=(cplx s) {
  for (auto& [k, c] : terms_) c *= s;
  prune();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("PauliSum: register size mismatch");
  PauliSum out(a.n_qubits());
  PauliString s;
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) {
      const cplx phase = pauli_product(sa, sb, s);
      out.accumulate(s, phase * ca * cb);
    }
  out.prune();
  return out;
}

void apply_string(const PauliString& s, const CVector& in, CVector& out) {
  const cplx base = kIPow[popcount(s.x & s.z) % 4];
  const auto dim = static_cast<std::uint64_t>(in.size());
  for (std::uint64_t j = 0; j < dim; ++j) {
    const double sign = (popcount(s.z & j) & 1) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(j ^ s.x)] = base * sign * in[static_cast<Eigen::Index>(j)];
  }
}

StateVector apply(const PauliSum& op, const StateVector& psi) {
  if (op.n_qubits() != psi.n_qubits()) throw std::invalid_argument("apply: register size mismatch");
  StateVector out(psi.n_qubits());
  CVector& o = out.amplitudes();
  const CVector& in = psi.amplitudes();
  const auto dim = static_cast<std::uint64_t>(in.size());
  for (const auto& [s, c] : op.terms()) {
    const cplx base = c * kIPow[popcount(s.x & s.z) % 4];
    for (std::uint64_t j = 0; j < dim; ++j) {
      const cplx v = (popcount(s.z & j) & 1) ? -base : base;
      o[static_cast<Eigen::Index>(j ^ s.x)] += v * in[static_cast<Eigen::Index>(j)];
    }
  }
  return out;
}

CMatrix to_matrix(const PauliSum& op) {
  if (op.n_qubits() > kMaxDenseQubits)
    throw std::length_error("to_matrix: register of " + std::to_string(op.n_qubits()) +
                            " qubits exceeds the dense limit of " + std::to_string(kMaxDenseQubits));
  return CMatrix(to_sparse(op));
}

SparseCMatrix to_sparse(const PauliSum& op) {
  const int n = op.n_qubits();
  if (n > 24) throw std::length_error("to_sparse: register too large");
  const auto dim = std::uint64_t{1} << n;

  // Group by X part: all strings in a group map column j to the same row j ^ x.
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, cplx>>> groups;
  for (const auto& [s, c] : op.terms())
    groups[s.x].emplace_back(s.z, c * kIPow[popcount(s.x & s.z) % 4]);

  std::vector<Eigen::Triplet<cplx>> triplets;
  for (const auto& [x, zs] : groups) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      cplx v = 0.0;
      for (const auto& [z, c] : zs) v += (popcount(z & j) & 1) ? -c : c;
      if (std::abs(v) > kPruneTolerance)
        triplets.emplace_back(static_cast<int>(j ^ x), static_cast<int>(j), v);
    }
  }
  SparseCMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

std::string to_text(const PauliSum& op) {
  std::ostringstream os;
  char buf[96];
  for (const auto& term : op.to_terms()) {
    std::snprintf(buf, sizeof buf, "%+.17g%+.17gi ", term.coefficient().real(), term.coefficient().imag());
    os << buf << term.letters() << '\n';
  }
  return os.str();
}

PauliSum parse_pauli_sum(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n_qubits = -1;
  PauliSum out;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string compact;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.empty()) continue;
    const auto i_pos = compact.find('i');
    if (i_pos == std::string::npos) throw std::invalid_argument("line " + std::to_string(line_no) + ": missing imaginary unit");
    const std::string number = compact.substr(0, i_pos);
    const std::string letters = compact.substr(i_pos + 1);
    // Split "a+b" / "a-b" at the sign that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < number.size(); ++k)
      if ((number[k] == '+' || number[k] == '-') && number[k - 1] != 'e' && number[k - 1] != 'E') split = k;
    if (split == std::string::npos) throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed coefficient");
    double re = 0, im = 0;
    try {
      re = std::stod(number.substr(0, split));
      im = std::stod(number.substr(split));
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed coefficient");
    }
    const PauliTerm term = PauliTerm::from_letters(letters, {re, im});
    if (n_qubits < 0) {
      n_qubits = term.n_qubits();
      out = PauliSum(n_qubits);
    } else if (term.n_qubits() != n_qubits) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": inconsistent register size");
    }
    out.accumulate(term.string(), term.coefficient());
  }
  out.prune();
  return out;
}

}  // namespace tchub
