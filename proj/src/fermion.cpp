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
#include "tchub/fermion.hpp"

#include <sstream>

namespace tchub {
namespace {

// True when a should stand to the right of b in canonical order.
bool out_of_order(const Ladder& left, const Ladder& right) {
  if (left.dagger != right.dagger) return !left.dagger;  // annihilator before creator
  return left.mode > right.mode;
}

}  // namespace

std::vector<std::pair<LadderProduct, cplx>> normal_order(const LadderProduct& product, cplx c) {
  std::vector<std::pair<LadderProduct, cplx>> done;
  std::vector<std::pair<LadderProduct, cplx>> work{{product, c}};
  while (!work.empty()) {
    auto [p, coeff] = std::move(work.back());
    work.pop_back();
    bool zero = false, swapped = true;
    while (swapped && !zero) {
      swapped = false;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        const Ladder a = p[k], b = p[k + 1];
        if (a.mode == b.mode && a.dagger == b.dagger) {
          zero = true;
          break;
        }
        if (!out_of_order(a, b)) continue;
        if (a.mode == b.mode) {
          // a_p a_p^dagger = 1 - a_p^dagger a_p
          LadderProduct contracted;
          contracted.reserve(p.size() - 2);
          contracted.insert(contracted.end(), p.begin(), p.begin() + static_cast<long>(k));
          contracted.insert(contracted.end(), p.begin() + static_cast<long>(k) + 2, p.end());
          work.emplace_back(std::move(contracted), coeff);
        }
        std::swap(p[k], p[k + 1]);
        coeff = -coeff;
        swapped = true;
      }
    }
    if (!zero) done.emplace_back(std::move(p), coeff);
  }
  return done;
}

std::string to_string(const LadderProduct& p) {
  std::ostringstream os;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) os << ' ';
    os << p[k].mode << (p[k].dagger ? "^" : "");
  }
  return os.str();
}

FermionOperator::FermionOperator(int n_modes) : n_modes_(n_modes) {
  if (n_modes < 0 || n_modes > 64) throw std::invalid_argument("mode count must be in [0, 64]");
}

FermionOperator FermionOperator::identity(int n_modes, cplx c) {
  FermionOperator op(n_modes);
  op.add({}, c);
  return op;
}

cplx FermionOperator::coefficient(const LadderProduct& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? cplx{0.0} : it->second;
}

void FermionOperator::add(const LadderProduct& product, cplx c) {
  for (const Ladder& l : product)
    if (l.mode < 0 || l.mode >= n_modes_)
      throw std::out_of_range("mode index " + std::to_string(l.mode) + " outside [0, " + std::to_string(n_modes_) + ")");
  // Fast path for products that are already canonical.
  bool canonical = true;
  for (std::size_t k = 0; k + 1 < product.size() && canonical; ++k)
    canonical = product[k] != product[k + 1] && !out_of_order(product[k], product[k + 1]);
  if (canonical) {
    terms_[product] += c;
    return;
  }
  for (auto& [p, coeff] : normal_order(product, c)) terms_[p] += coeff;
}

void FermionOperator::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(n_modes_);
  for (const auto& [p, c] : terms_) {
    LadderProduct r(p.rbegin(), p.rend());
    for (Ladder& l : r) l.dagger = !l.dagger;
    out.add(r, std::conj(c));
  }
  out.prune();
  return out;
}

int FermionOperator::max_body() const {
  int m = 0;
  for (const auto& [p, c] : terms_) {
    int creators = 0;
    for (const Ladder& l : p) creators += l.dagger;
    m = std::max(m, creators);
  }
  return m;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& rhs) {
  if (n_modes_ != rhs.n_modes_) throw std::invalid_argument("FermionOperator: mode count mismatch");
  for (const auto& [p, c] : rhs.terms_) terms_[p] += c;
  prune();
  return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& rhs) {
  if (n_modes_ != rhs.n_modes_) throw std::invalid_argument("FermionOperator: mode count mismatch");
  for (const auto& [p, c] : rhs.terms_) terms_[p] -= c;
  prune();
  return *this;
}

FermionOperator& FermionOperator::operator*=(cplx s) {
  for (auto& [p, c] : terms_) c *= s;
  prune();
  return *this;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  if (a.n_modes() != b.n_modes()) throw std::invalid_argument("FermionOperator: mode count mismatch");
  FermionOperator out(a.n_modes());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      LadderProduct p(pa);
      p.insert(p.end(), pb.begin(), pb.end());
      out.add(p, ca * cb);
    }
  out.prune();
  return out;
}

namespace {

PauliSum ladder_image(const Ladder& l, int n_modes) {
  PauliString zstring;
  zstring.z = (std::uint64_t{1} << l.mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << l.mode;
  PauliSum out(n_modes);
  out.accumulate({zstring.x | bit, zstring.z}, 0.5);
  // Y = (x=1, z=1); creator carries -i/2, annihilator +i/2.
  out.accumulate({bit, zstring.z | bit}, l.dagger ? cplx(0, -0.5) : cplx(0, 0.5));
  return out;
}

}  // namespace

PauliSum jordan_wigner(const LadderProduct& product, int n_modes, cplx c) {
  PauliSum acc = PauliSum::identity(n_modes, c);
  for (const Ladder& l : product) acc = acc * ladder_image(l, n_modes);
  return acc;
}

PauliSum jordan_wigner(const FermionOperator& op) {
  const int n = op.n_modes();
  std::vector<PauliSum> images;
  images.reserve(2 * static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    images.push_back(ladder_image(an(m), n));
    images.push_back(ladder_image(cr(m), n));
  }
  PauliSum out(n);
  std::vector<std::pair<PauliString, cplx>> cur, next;
  PauliString prod;
  for (const auto& [p, c] : op.terms()) {
    cur.assign(1, {PauliString{}, c});
    for (const Ladder& l : p) {
      const PauliSum& img = images[2 * static_cast<std::size_t>(l.mode) + (l.dagger ? 1 : 0)];
      next.clear();
      for (const auto& [s, cs] : cur)
        for (const auto& [t, ct] : img.terms()) {
          const cplx phase = pauli_product(s, t, prod);
          next.emplace_back(prod, phase * cs * ct);
        }
      std::swap(cur, next);
    }
    for (const auto& [s, cs] : cur) out.accumulate(s, cs);
  }
  out.prune();
  return out;
}

}  // namespace tchub
