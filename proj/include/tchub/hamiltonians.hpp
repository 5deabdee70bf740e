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

#include <string>

#include "tchub/fermion.hpp"
#include "tchub/lattice.hpp"

namespace tchub {

/// Hubbard parameters in units of the hopping; J is the Gutzwiller exponent.
struct HubbardParams {
  double t = 1.0;
  double U = 4.0;
  double J = 0.0;

  void validate() const;
};

enum class Representation { real_space, momentum };

std::string to_string(Representation r);
Representation parse_representation(const std::string& s);

FermionOperator build_real_space(const Lattice& lat, const HubbardParams& p);
FermionOperator build_momentum_space(const Lattice& lat, const HubbardParams& p);

/// g = J sum_i n_i,up n_i,down, or its Fourier image
/// (J / 2N) sum_{p,q,k,sigma} c+_{p-k,s} c+_{q+k,s'} c_{q,s'} c_{p,s}.
FermionOperator build_gutzwiller(const Lattice& lat, double J, Representation rep);

/// exp(-g) H exp(g) in closed form (real space).
FermionOperator build_tc_real(const Lattice& lat, const HubbardParams& p);
/// exp(-g) H exp(g) in closed form (momentum space), with up to three-body terms.
FermionOperator build_tc_momentum(const Lattice& lat, const HubbardParams& p);

/// J-independent pieces of the momentum-space TC Hamiltonian:
/// H_tc(J) = base + (e^J - 1) hop_plus + (e^-J - 1) hop_minus + 2 (cosh J - 1) three_body.
struct TcMomentumParts {
  FermionOperator base;
  FermionOperator hop_plus;
  FermionOperator hop_minus;
  FermionOperator three_body;

  FermionOperator combine(double J) const;
};

TcMomentumParts tc_momentum_parts(const Lattice& lat, double t, double U);

/// Dispatches to the four builders above.
FermionOperator build_hamiltonian(const Lattice& lat, const HubbardParams& p, Representation rep, bool transcorrelated);

/// Momentum-space pair kernel c+_{p-k,s} c+_{q+k,s'} c_{q,s'} c_{p,s}.
LadderProduct momentum_pair_kernel(const Lattice& lat, int p, int q, int k, Spin s);

}  // namespace tchub
