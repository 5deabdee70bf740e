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

#include <cstdint>
#include <vector>

#include "tchub/jastrow.hpp"
#include "tchub/pauli.hpp"

namespace tchub {

/// Fock states with fixed (n_up, n_down) in the block spin-orbital ordering.
class SectorBasis {
 public:
  SectorBasis(int n_sites, int n_up, int n_down);
  static SectorBasis half_filling(int n_sites);

  int n_sites() const { return n_sites_; }
  int n_qubits() const { return 2 * n_sites_; }
  int n_up() const { return n_up_; }
  int n_down() const { return n_down_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(indices_.size()); }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  /// Position of a Fock index in the sector, or -1.
  Eigen::Index position(std::uint64_t index) const;
  bool contains(std::uint64_t index) const { return position(index) >= 0; }

  CMatrix restrict(const SparseCMatrix& op) const;
  CMatrix restrict(const PauliSum& op) const;
  CVector restrict(const StateVector& psi) const;
  StateVector embed(const CVector& v) const;

 private:
  int n_sites_, n_up_, n_down_;
  std::vector<std::uint64_t> indices_;
};

struct GroundState {
  double energy = 0.0;
  StateVector state;
  int degeneracy = 1;
};

/// Lowest sector eigenpair of a Hermitian operator. The phase is fixed by
/// making the largest-magnitude amplitude real and positive.
GroundState exact_ground_state(const PauliSum& h, const SectorBasis& sector);

/// Right eigenvector exp(-g) |Psi0> of exp(-g) H exp(g), normalized, with the
/// eigen-relation checked against the supplied closed-form h_tc.
GroundState tc_right_eigenvector(const PauliSum& h, const PauliSum& g, const PauliSum& h_tc, const SectorBasis& sector,
                                 double residual_tol = 1e-8);
/// Variant reusing a ground state that was already computed for h.
GroundState tc_right_eigenvector(const GroundState& base, const PauliSum& g, const PauliSum& h_tc,
                                 const SectorBasis& sector, double residual_tol = 1e-8);

/// exp(s * g) restricted to the sector, g Hermitian.
CMatrix sector_exponential(const PauliSum& g, const SectorBasis& sector, double s);

/// |<psi|ref>|^2 for unit-norm inputs.
double fidelity(const StateVector& psi, const StateVector& ref);

/// Sorted eigenvalues of a sector matrix; complex for non-Hermitian input.
std::vector<cplx> sector_spectrum(const PauliSum& op, const SectorBasis& sector);

struct CompactnessPoint {
  double J = 0.0;
  double hf_weight = 0.0;
};

/// |<HF|Phi_R(J)>|^2 of the momentum-space TC right eigenvector along J_grid.
std::vector<CompactnessPoint> hf_weight_sweep(const Lattice& lat, double t, double U, const std::vector<double>& j_grid);

}  // namespace tchub
