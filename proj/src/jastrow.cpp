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
#include "tchub/jastrow.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tchub/pauli.hpp"

namespace tchub {

ReferenceDeterminant determinant_from_orbitals(const Lattice& lat, const std::vector<int>& up,
                                               const std::vector<int>& down) {
  ReferenceDeterminant det;
  det.n_qubits = lat.n_modes();
  for (int o : up) det.occupied_modes.push_back(lat.mode(o, Spin::up));
  for (int o : down) det.occupied_modes.push_back(lat.mode(o, Spin::down));
  std::sort(det.occupied_modes.begin(), det.occupied_modes.end());
  if (std::adjacent_find(det.occupied_modes.begin(), det.occupied_modes.end()) != det.occupied_modes.end())
    throw std::invalid_argument("orbital listed twice");
  for (int m : det.occupied_modes) det.as_basis_index |= std::uint64_t{1} << m;
  return det;
}

ReferenceDeterminant fermi_sea(const Lattice& lat, int n_electrons, ShellTieBreak tie) {
  const int n = lat.n_sites();
  if (n_electrons < 0 || n_electrons % 2 != 0)
    throw std::invalid_argument("fermi_sea: electron count must be even (S_z = 0), got " + std::to_string(n_electrons));
  if (n_electrons > 2 * n) throw std::invalid_argument("fermi_sea: more electrons than spin-orbitals");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  // Energies equal to within 1e-12 form one shell; the tie-break orders inside it.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double ea = lat.dispersion(a, 1.0), eb = lat.dispersion(b, 1.0);
    if (std::abs(ea - eb) > 1e-12) return ea < eb;
    return tie == ShellTieBreak::lowest_index ? a < b : a > b;
  });
  std::vector<int> occ(order.begin(), order.begin() + n_electrons / 2);
  return determinant_from_orbitals(lat, occ, occ);
}

namespace {

double contraction(const SparseCMatrix& g, const SparseCMatrix& op, const CVector& phi0, double g0) {
  const CVector h_phi = op * phi0;
  const CVector g_phi = g * phi0;
  return (g_phi.dot(h_phi) - g0 * phi0.dot(h_phi)).real();
}

}  // namespace

ProjectionEquation::ProjectionEquation(const Lattice& lat, double t, double U, ShellTieBreak tie)
    : reference_(fermi_sea(lat, lat.n_sites(), tie)) {
  const TcMomentumParts parts = tc_momentum_parts(lat, t, U);
  const SparseCMatrix g = to_sparse(jordan_wigner(build_gutzwiller(lat, 1.0, Representation::momentum)));
  const CVector phi0 = reference_.state().amplitudes();
  const double g0 = phi0.dot(g * phi0).real();
  base_ = contraction(g, to_sparse(jordan_wigner(parts.base)), phi0, g0);
  hop_plus_ = contraction(g, to_sparse(jordan_wigner(parts.hop_plus)), phi0, g0);
  hop_minus_ = contraction(g, to_sparse(jordan_wigner(parts.hop_minus)), phi0, g0);
  three_body_ = contraction(g, to_sparse(jordan_wigner(parts.three_body)), phi0, g0);
}

double ProjectionEquation::residual(double J) const {
  return base_ + std::expm1(J) * hop_plus_ + std::expm1(-J) * hop_minus_ + 2.0 * (std::cosh(J) - 1.0) * three_body_;
}

double projection_residual(const Lattice& lat, double t, double U, double J) {
  return ProjectionEquation(lat, t, U).residual(J);
}

JOptimization optimize_j(const ProjectionEquation& eq, std::pair<double, double> bracket, double tol) {
  auto [lo, hi] = bracket;
  if (!(lo < hi)) throw std::invalid_argument("optimize_j: bracket must satisfy lo < hi");
  double f_lo = eq.residual(lo), f_hi = eq.residual(hi);
  JOptimization out;
  if (f_lo == 0.0) return {lo, 0.0, 0};
  if (f_hi == 0.0) return {hi, 0.0, 0};
  if ((f_lo > 0) == (f_hi > 0))
    throw std::domain_error("optimize_j: residual has the same sign at J = " + std::to_string(lo) + " and J = " +
                            std::to_string(hi) + "; widen the bracket");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = eq.residual(mid);
    ++out.iterations;
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  out.J = 0.5 * (lo + hi);
  out.residual = eq.residual(out.J);
  return out;
}

JOptimization optimize_j(const Lattice& lat, double t, double U, std::pair<double, double> bracket, double tol,
                         ShellTieBreak tie) {
  return optimize_j(ProjectionEquation(lat, t, U, tie), bracket, tol);
}

double qite_gutzwiller_j(int n_sites) {
  switch (n_sites) {
    case 2: return -0.4812;
    case 4: return -0.73;
    case 6: return -0.59;
    default: throw std::invalid_argument("no tabulated Gutzwiller parameter for " + std::to_string(n_sites) + " sites");
  }
}

}  // namespace tchub
