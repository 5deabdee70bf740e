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
#include <utility>
#include <vector>

#include "tchub/hamiltonians.hpp"
#include "tchub/state.hpp"

namespace tchub {

/// Occupation of a single determinant over 2N spin-orbitals.
struct ReferenceDeterminant {
  int n_qubits = 0;
  std::vector<int> occupied_modes;  // ascending
  std::uint64_t as_basis_index = 0;

  int n_electrons() const { return static_cast<int>(occupied_modes.size()); }
  StateVector state() const { return StateVector::basis(n_qubits, as_basis_index); }
};

/// Which member of a partially filled degenerate shell is occupied first.
enum class ShellTieBreak { lowest_index, highest_index };

/// Lowest-eps_k occupation with n_electrons / 2 electrons per spin.
ReferenceDeterminant fermi_sea(const Lattice& lat, int n_electrons,
                               ShellTieBreak tie = ShellTieBreak::lowest_index);

/// Determinant occupying the given orbitals (site or momentum indices) for both spins.
ReferenceDeterminant determinant_from_orbitals(const Lattice& lat, const std::vector<int>& up,
                                               const std::vector<int>& down);

/// Left side of <Phi0| (G - <G>_0) H_tc(J) |Phi0> = 0 in the momentum
/// representation, with G the unit-J momentum-space correlator. The four
/// J-independent contractions are computed once by sparse application so
/// that each evaluation is O(1).
class ProjectionEquation {
 public:
  ProjectionEquation(const Lattice& lat, double t, double U, ShellTieBreak tie = ShellTieBreak::lowest_index);

  double residual(double J) const;
  const ReferenceDeterminant& reference() const { return reference_; }

 private:
  ReferenceDeterminant reference_;
  double base_ = 0, hop_plus_ = 0, hop_minus_ = 0, three_body_ = 0;
};

double projection_residual(const Lattice& lat, double t, double U, double J);

struct JOptimization {
  double J = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Bisection for the projection root inside `bracket` down to width `tol`.
JOptimization optimize_j(const Lattice& lat, double t, double U, std::pair<double, double> bracket = {-3.0, 0.0},
                         double tol = 1e-6, ShellTieBreak tie = ShellTieBreak::lowest_index);
JOptimization optimize_j(const ProjectionEquation& eq, std::pair<double, double> bracket, double tol);

/// Table values used for the imaginary-time runs (U/t = 4 half filling).
double qite_gutzwiller_j(int n_sites);

}  // namespace tchub
