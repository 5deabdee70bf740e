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
#include "tchub/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "tchub/fermion.hpp"

namespace tchub {

SectorBasis::SectorBasis(int n_sites, int n_up, int n_down) : n_sites_(n_sites), n_up_(n_up), n_down_(n_down) {
  if (n_sites < 1 || 2 * n_sites > 24) throw std::invalid_argument("sector: unsupported lattice size");
  if (n_up < 0 || n_up > n_sites || n_down < 0 || n_down > n_sites)
    throw std::invalid_argument("sector: electron counts out of range");
  const std::uint64_t low = (std::uint64_t{1} << n_sites) - 1;
  const std::uint64_t dim = std::uint64_t{1} << (2 * n_sites);
  for (std::uint64_t i = 0; i < dim; ++i)
    if (std::popcount(i & low) == n_up && std::popcount(i >> n_sites) == n_down) indices_.push_back(i);
}

SectorBasis SectorBasis::half_filling(int n_sites) {
  if (n_sites % 2 != 0) throw std::invalid_argument("half filling with S_z = 0 needs an even site count");
  return SectorBasis(n_sites, n_sites / 2, n_sites / 2);
}

Eigen::Index SectorBasis::position(std::uint64_t index) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
  if (it == indices_.end() || *it != index) return -1;
  return it - indices_.begin();
}

CMatrix SectorBasis::restrict(const SparseCMatrix& op) const {
  if (op.rows() != (Eigen::Index{1} << n_qubits())) throw std::invalid_argument("sector: operator size mismatch");
  CMatrix out = CMatrix::Zero(dim(), dim());
  for (Eigen::Index r = 0; r < dim(); ++r)
    for (SparseCMatrix::InnerIterator it(op, static_cast<Eigen::Index>(indices_[static_cast<std::size_t>(r)])); it; ++it) {
      const Eigen::Index c = position(static_cast<std::uint64_t>(it.col()));
      if (c >= 0) out(r, c) = it.value();
    }
  return out;
}

CMatrix SectorBasis::restrict(const PauliSum& op) const { return restrict(to_sparse(op)); }

CVector SectorBasis::restrict(const StateVector& psi) const {
  if (psi.n_qubits() != n_qubits()) throw std::invalid_argument("sector: state size mismatch");
  CVector v(dim());
  for (Eigen::Index r = 0; r < dim(); ++r) v[r] = psi[static_cast<Eigen::Index>(indices_[static_cast<std::size_t>(r)])];
  return v;
}

StateVector SectorBasis::embed(const CVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("sector: vector size mismatch");
  StateVector out(n_qubits());
  for (Eigen::Index r = 0; r < dim(); ++r) out[static_cast<Eigen::Index>(indices_[static_cast<std::size_t>(r)])] = v[r];
  return out;
}

namespace {

Eigen::Index dominant_index(const CVector& v) {
  Eigen::Index best = 0;
  double m = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > m + 1e-12) {
      m = std::abs(v[i]);
      best = i;
    }
  return best;
}

void fix_phase(CVector& v) {
  const cplx a = v[dominant_index(v)];
  v *= std::conj(a) / std::abs(a);
}

}  // namespace

GroundState exact_ground_state(const PauliSum& h, const SectorBasis& sector) {
  if (!h.is_hermitian())
    throw std::invalid_argument("exact_ground_state: operator is not Hermitian; use tc_right_eigenvector");
  const CMatrix m = sector.restrict(h);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("exact_ground_state: eigensolver failed");
  const RVector& evals = es.eigenvalues();
  int degeneracy = 1;
  while (degeneracy < evals.size() && evals[degeneracy] - evals[0] < 1e-10) ++degeneracy;
  // Degenerate ground space: take the eigenvector whose dominant configuration
  // has the smallest basis index.
  Eigen::Index pick = 0;
  Eigen::Index pick_dom = sector.dim();
  for (Eigen::Index c = 0; c < degeneracy; ++c) {
    const Eigen::Index d = dominant_index(es.eigenvectors().col(c));
    if (d < pick_dom) {
      pick_dom = d;
      pick = c;
    }
  }
  CVector v = es.eigenvectors().col(pick);
  fix_phase(v);
  return {evals[0], sector.embed(v), degeneracy};
}

CMatrix sector_exponential(const PauliSum& g, const SectorBasis& sector, double s) {
  if (!g.is_hermitian()) throw std::invalid_argument("sector_exponential: correlator must be Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sector.restrict(g));
  const RVector w = (s * es.eigenvalues().array()).exp();
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

GroundState tc_right_eigenvector(const GroundState& base, const PauliSum& g, const PauliSum& h_tc,
                                 const SectorBasis& sector, double residual_tol) {
  const CMatrix e = sector_exponential(g, sector, -1.0);
  CVector v = e * sector.restrict(base.state);
  v.normalize();
  fix_phase(v);
  const CVector r = sector.restrict(h_tc) * v - base.energy * v;
  if (r.norm() > residual_tol)
    throw std::runtime_error("tc_right_eigenvector: eigen-relation residual " + std::to_string(r.norm()) +
                             " exceeds tolerance; the transcorrelated operator is inconsistent with exp(-g) H exp(g)");
  return {base.energy, sector.embed(v), base.degeneracy};
}

GroundState tc_right_eigenvector(const PauliSum& h, const PauliSum& g, const PauliSum& h_tc, const SectorBasis& sector,
                                 double residual_tol) {
  return tc_right_eigenvector(exact_ground_state(h, sector), g, h_tc, sector, residual_tol);
}

double fidelity(const StateVector& psi, const StateVector& ref) {
  if (std::abs(psi.norm() - 1.0) > 1e-6 || std::abs(ref.norm() - 1.0) > 1e-6)
    throw std::invalid_argument("fidelity: inputs must have unit norm");
  return std::norm(inner(psi, ref));
}

std::vector<cplx> sector_spectrum(const PauliSum& op, const SectorBasis& sector) {
  const CMatrix m = sector.restrict(op);
  std::vector<cplx> out;
  if (op.is_hermitian()) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.emplace_back(es.eigenvalues()[i], 0.0);
  } else {
    Eigen::ComplexEigenSolver<CMatrix> es(m, false);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
  }
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<CompactnessPoint> hf_weight_sweep(const Lattice& lat, double t, double U, const std::vector<double>& j_grid) {
  const SectorBasis sector = SectorBasis::half_filling(lat.n_sites());
  const PauliSum h = jordan_wigner(build_momentum_space(lat, {t, U, 0.0}));
  const GroundState gs = exact_ground_state(h, sector);
  const PauliSum g_unit = jordan_wigner(build_gutzwiller(lat, 1.0, Representation::momentum));
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sector.restrict(g_unit));
  const CVector coeffs = es.eigenvectors().adjoint() * sector.restrict(gs.state);
  const Eigen::Index hf = sector.position(fermi_sea(lat, lat.n_sites()).as_basis_index);

  std::vector<CompactnessPoint> out;
  for (double J : j_grid) {
    const RVector w = (-J * es.eigenvalues().array()).exp();
    CVector v = es.eigenvectors() * (w.cast<cplx>().asDiagonal() * coeffs);
    v.normalize();
    out.push_back({J, std::norm(v[hf])});
  }
  return out;
}

}  // namespace tchub
