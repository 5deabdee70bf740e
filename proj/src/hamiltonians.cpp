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
#include "tchub/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace tchub {

void HubbardParams::validate() const {
  if (!(t >= 0.0)) throw std::invalid_argument("hopping t must be non-negative");
  if (!(U >= 0.0)) throw std::invalid_argument("interaction U must be non-negative");
  if (!std::isfinite(J)) throw std::invalid_argument("Gutzwiller J must be finite");
}

std::string to_string(Representation r) { return r == Representation::real_space ? "real" : "momentum"; }

Representation parse_representation(const std::string& s) {
  if (s == "real" || s == "r") return Representation::real_space;
  if (s == "momentum" || s == "m") return Representation::momentum;
  throw std::invalid_argument("unknown representation '" + s + "'");
}

namespace {

constexpr Spin kSpins[2] = {Spin::up, Spin::down};

void add_interaction(const Lattice& lat, double U, FermionOperator& h) {
  for (int i = 0; i < lat.n_sites(); ++i) {
    const int u = lat.mode(i, Spin::up), d = lat.mode(i, Spin::down);
    h.add({cr(u), an(u), cr(d), an(d)}, U);
  }
}

// Sum over (p, q, k, sigma) of coeff(p, q, k) * kernel.
template <class Coeff>
void add_pair_sum(const Lattice& lat, FermionOperator& h, Coeff&& coeff) {
  const int n = lat.n_sites();
  for (Spin s : kSpins)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int k = 0; k < n; ++k) {
          const double c = coeff(p, q, k);
          if (c != 0.0) h.add(momentum_pair_kernel(lat, p, q, k, s), c);
        }
}

}  // namespace

LadderProduct momentum_pair_kernel(const Lattice& lat, int p, int q, int k, Spin s) {
  const Spin sb = opposite(s);
  return {cr(lat.mode(lat.sub_momenta(p, k), s)), cr(lat.mode(lat.add_momenta(q, k), sb)),
          an(lat.mode(q, sb)), an(lat.mode(p, s))};
}

FermionOperator build_real_space(const Lattice& lat, const HubbardParams& p) {
  p.validate();
  FermionOperator h(lat.n_modes());
  for (const auto& [i, j] : lat.bonds())
    for (Spin s : kSpins) {
      h.add({cr(lat.mode(i, s)), an(lat.mode(j, s))}, -p.t);
      h.add({cr(lat.mode(j, s)), an(lat.mode(i, s))}, -p.t);
    }
  add_interaction(lat, p.U, h);
  h.prune();
  return h;
}

FermionOperator build_momentum_space(const Lattice& lat, const HubbardParams& p) {
  p.validate();
  const int n = lat.n_sites();
  FermionOperator h(lat.n_modes());
  for (int k = 0; k < n; ++k)
    for (Spin s : kSpins) h.add({cr(lat.mode(k, s)), an(lat.mode(k, s))}, lat.dispersion(k, p.t));
  const double w = p.U / (2.0 * n);
  add_pair_sum(lat, h, [w](int, int, int) { return w; });
  h.prune();
  return h;
}

FermionOperator build_gutzwiller(const Lattice& lat, double J, Representation rep) {
  FermionOperator g(lat.n_modes());
  if (rep == Representation::real_space) {
    add_interaction(lat, J, g);
  } else {
    const double w = J / (2.0 * lat.n_sites());
    add_pair_sum(lat, g, [w](int, int, int) { return w; });
  }
  g.prune();
  return g;
}

FermionOperator build_tc_real(const Lattice& lat, const HubbardParams& p) {
  FermionOperator h = build_real_space(lat, p);
  const double a = std::expm1(p.J);              // e^J - 1
  const double b = std::expm1(-p.J);             // e^-J - 1
  const double c = -2.0 * (std::cosh(p.J) - 1.0);
  auto dressed_hop = [&](int i, int j) {
    for (Spin s : kSpins) {
      const int ci = lat.mode(i, s), aj = lat.mode(j, s);
      const int ni = lat.mode(i, opposite(s)), nj = lat.mode(j, opposite(s));
      h.add({cr(ci), an(aj), cr(nj), an(nj)}, -p.t * a);
      h.add({cr(ci), an(aj), cr(ni), an(ni)}, -p.t * b);
      h.add({cr(ci), an(aj), cr(ni), an(ni), cr(nj), an(nj)}, -p.t * c);
    }
  };
  for (const auto& [i, j] : lat.bonds()) {
    dressed_hop(i, j);
    dressed_hop(j, i);
  }
  h.prune();
  return h;
}

TcMomentumParts tc_momentum_parts(const Lattice& lat, double t, double U) {
  HubbardParams p{t, U, 0.0};
  p.validate();
  const int n = lat.n_sites();
  TcMomentumParts parts{build_momentum_space(lat, p), FermionOperator(lat.n_modes()), FermionOperator(lat.n_modes()),
                        FermionOperator(lat.n_modes())};
  // D_{p,q,k} = (t/N) [(e^J - 1) w_{p-k} + (e^-J - 1) w_p] and T = 2t (cosh J - 1) / N^2
  // with the dimensionless band factor w_k = -eps_k / t = 2 cos k.
  auto w = [&](int k) { return -lat.dispersion(k, 1.0); };
  add_pair_sum(lat, parts.hop_plus, [&](int pp, int, int k) { return -t / n * w(lat.sub_momenta(pp, k)); });
  add_pair_sum(lat, parts.hop_minus, [&](int pp, int, int) { return -t / n * w(pp); });
  const double scale = t / (static_cast<double>(n) * n);
  for (Spin s : kSpins) {
    const Spin sb = opposite(s);
    for (int pp = 0; pp < n; ++pp)
      for (int q = 0; q < n; ++q)
        for (int sm = 0; sm < n; ++sm)
          for (int k = 0; k < n; ++k)
            for (int kp = 0; kp < n; ++kp) {
              const int pk = lat.sub_momenta(pp, k);
              const double c = scale * w(lat.add_momenta(pk, kp));
              if (std::abs(c) < kPruneTolerance) continue;
              parts.three_body.add({cr(lat.mode(pk, s)), cr(lat.mode(lat.add_momenta(q, kp), sb)),
                                    cr(lat.mode(lat.sub_momenta(lat.add_momenta(sm, k), kp), sb)),
                                    an(lat.mode(sm, sb)), an(lat.mode(q, sb)), an(lat.mode(pp, s))},
                                   c);
            }
  }
  parts.hop_plus.prune();
  parts.hop_minus.prune();
  parts.three_body.prune();
  return parts;
}

FermionOperator TcMomentumParts::combine(double J) const {
  FermionOperator h = base;
  h += hop_plus * cplx(std::expm1(J));
  h += hop_minus * cplx(std::expm1(-J));
  h += three_body * cplx(2.0 * (std::cosh(J) - 1.0));
  return h;
}

FermionOperator build_tc_momentum(const Lattice& lat, const HubbardParams& p) {
  p.validate();
  return tc_momentum_parts(lat, p.t, p.U).combine(p.J);
}

FermionOperator build_hamiltonian(const Lattice& lat, const HubbardParams& p, Representation rep, bool transcorrelated) {
  if (rep == Representation::real_space) return transcorrelated ? build_tc_real(lat, p) : build_real_space(lat, p);
  return transcorrelated ? build_tc_momentum(lat, p) : build_momentum_space(lat, p);
}

}  // namespace tchub
