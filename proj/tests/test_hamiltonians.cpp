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
#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tchub/exact.hpp"
#include "tchub/hamiltonians.hpp"
#include "tchub/jastrow.hpp"

using namespace tchub;

namespace {

double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

std::vector<double> sorted_real(const Eigen::VectorXcd& v) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i].real());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> hermitian_spectrum(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

}  // namespace

TEST(Lattice, RingGeometry) {
  const Lattice lat(4);
  EXPECT_EQ(lat.n_modes(), 8);
  EXPECT_EQ(lat.mode(1, Spin::down), 5);
  EXPECT_EQ(lat.bonds().size(), 4u);
  EXPECT_EQ(Lattice(2).bonds().size(), 2u);
  EXPECT_NEAR(lat.dispersion(0, 1.0), -2.0, 1e-15);
  EXPECT_NEAR(lat.dispersion(2, 1.0), 2.0, 1e-15);
  EXPECT_EQ(lat.add_momenta(3, 2), 1);
  EXPECT_EQ(lat.negate_momentum(1), 3);
}

TEST(Lattice, TorusDispersion) {
  const Lattice lat(2, 2);
  EXPECT_EQ(lat.n_sites(), 4);
  EXPECT_FALSE(lat.is_chain());
  EXPECT_NEAR(lat.dispersion(0, 1.0), -4.0, 1e-15);
}

TEST(RealSpaceHubbard, MatchesDirectConstruction) {
  for (int n : {2, 3, 4}) {
    const FermionOperator h = build_real_space(Lattice(n), {1.0, 4.0, 0.0});
    EXPECT_LT(max_diff(to_matrix(jordan_wigner(h)), oracle::hubbard_ring(n, 1.0, 4.0)), 1e-13) << n;
  }
}

TEST(MomentumHubbard, IsUnitarilyEquivalentToRealSpace) {
  for (int n : {2, 4}) {
    const Lattice lat(n);
    const auto idx = oracle::half_filling(n);
    const CMatrix hr = oracle::restrict(to_matrix(jordan_wigner(build_real_space(lat, {1.0, 4.0, 0.0}))), idx);
    const CMatrix hk = oracle::restrict(to_matrix(jordan_wigner(build_momentum_space(lat, {1.0, 4.0, 0.0}))), idx);
    EXPECT_LT(max_diff(hk, hk.adjoint()), 1e-13);
    const auto a = hermitian_spectrum(hr), b = hermitian_spectrum(hk);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
  }
}

TEST(ExactDiagonalization, GroundEnergies) {
  const std::vector<std::pair<int, double>> cases{{2, -2.472}, {4, -2.103}, {6, -3.669}};
  for (auto [n, e] : cases) {
    const PauliSum h = jordan_wigner(build_real_space(Lattice(n), {1.0, 4.0, 0.0}));
    const GroundState gs = exact_ground_state(h, SectorBasis::half_filling(n));
    EXPECT_NEAR(gs.energy, e, 5e-4) << n;
  }
}

TEST(ExactDiagonalization, TwoSiteClosedForm) {
  const PauliSum h = jordan_wigner(build_real_space(Lattice(2), {1.0, 4.0, 0.0}));
  const GroundState gs = exact_ground_state(h, SectorBasis::half_filling(2));
  EXPECT_NEAR(gs.energy, 2.0 - std::sqrt(4.0 + 16.0), 1e-12);
}

TEST(SectorBasis, HalfFillingDimension) {
  EXPECT_EQ(SectorBasis::half_filling(2).dim(), 4);
  EXPECT_EQ(SectorBasis::half_filling(4).dim(), 36);
  EXPECT_EQ(SectorBasis::half_filling(6).dim(), 400);
  const SectorBasis s = SectorBasis::half_filling(4);
  for (auto i : s.indices()) EXPECT_EQ(s.indices()[static_cast<std::size_t>(s.position(i))], i);
}

TEST(Transcorrelated, SimilarityIdentity) {
  for (int n : {2, 4})
    for (Representation rep : {Representation::real_space, Representation::momentum}) {
      const Lattice lat(n);
      const HubbardParams p{1.0, 4.0, qite_gutzwiller_j(n)};
      const auto idx = oracle::half_filling(n);
      const CMatrix h = oracle::restrict(to_matrix(jordan_wigner(build_hamiltonian(lat, p, rep, false))), idx);
      const CMatrix g = oracle::restrict(to_matrix(jordan_wigner(build_gutzwiller(lat, p.J, rep))), idx);
      const CMatrix htc = oracle::restrict(to_matrix(jordan_wigner(build_hamiltonian(lat, p, rep, true))), idx);
      const CMatrix expected = oracle::expm(-g) * h * oracle::expm(g);
      EXPECT_LT(max_diff(htc, expected), 1e-9) << n << " " << to_string(rep);
    }
}

TEST(Transcorrelated, RealSpaceGutzwillerIsDoubleOccupancyCounter) {
  const Lattice lat(3);
  const CMatrix g = oracle::fock_matrix(build_gutzwiller(lat, -0.5, Representation::real_space));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    int doubles = 0;
    for (int s = 0; s < 3; ++s) doubles += ((i >> s) & 1) && ((i >> (s + 3)) & 1);
    EXPECT_NEAR(g(i, i).real(), -0.5 * doubles, 1e-14);
  }
}

TEST(Transcorrelated, MomentumGutzwillerMatchesRealSpaceSpectrum) {
  const Lattice lat(4);
  const auto idx = oracle::half_filling(4);
  const CMatrix gr = oracle::restrict(oracle::fock_matrix(build_gutzwiller(lat, 1.0, Representation::real_space)), idx);
  const CMatrix gk = oracle::restrict(oracle::fock_matrix(build_gutzwiller(lat, 1.0, Representation::momentum)), idx);
  const auto a = hermitian_spectrum(gr), b = hermitian_spectrum(gk);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
}

TEST(Transcorrelated, NonHermitianWithPreservedSpectrum) {
  for (int n : {2, 4, 6})
    for (Representation rep : {Representation::real_space, Representation::momentum}) {
      const Lattice lat(n);
      const HubbardParams p{1.0, 4.0, qite_gutzwiller_j(n)};
      const SectorBasis sector = SectorBasis::half_filling(n);
      const PauliSum htc = jordan_wigner(build_hamiltonian(lat, p, rep, true));
      const PauliSum h = jordan_wigner(build_hamiltonian(lat, p, rep, false));
      EXPECT_FALSE(htc.is_hermitian(1e-10));
      const auto tc = sector_spectrum(htc, sector);
      const auto base = sector_spectrum(h, sector);
      std::vector<double> a, b;
      for (auto z : tc) {
        EXPECT_LT(std::abs(z.imag()), 1e-8);
        a.push_back(z.real());
      }
      for (auto z : base) b.push_back(z.real());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-8);
    }
}

TEST(Transcorrelated, MomentumPartsCombine) {
  const Lattice lat(4);
  const TcMomentumParts parts = tc_momentum_parts(lat, 1.0, 4.0);
  const double J = -0.7;
  const CMatrix direct = oracle::fock_matrix(build_tc_momentum(lat, {1.0, 4.0, J}));
  EXPECT_LT(max_diff(oracle::fock_matrix(parts.combine(J)), direct), 1e-12);
  EXPECT_EQ(build_tc_momentum(lat, {1.0, 4.0, J}).max_body(), 3);
}

TEST(Transcorrelated, RightEigenvector) {
  const int n = 4;
  const Lattice lat(n);
  const HubbardParams p{1.0, 4.0, -0.73};
  const SectorBasis sector = SectorBasis::half_filling(n);
  const PauliSum h = jordan_wigner(build_momentum_space(lat, p));
  const PauliSum g = jordan_wigner(build_gutzwiller(lat, p.J, Representation::momentum));
  const PauliSum htc = jordan_wigner(build_tc_momentum(lat, p));
  const GroundState r = tc_right_eigenvector(h, g, htc, sector);
  const StateVector hr = apply(htc, r.state);
  EXPECT_LT((hr.amplitudes() - r.energy * r.state.amplitudes()).norm(), 1e-8);
  EXPECT_NEAR(r.state.norm(), 1.0, 1e-12);
  EXPECT_NEAR(r.energy, -2.10275, 1e-4);
}

TEST(HubbardParams, Validation) {
  EXPECT_THROW((HubbardParams{1.0, std::nan(""), 0.0}.validate()), std::invalid_argument);
  EXPECT_EQ(parse_representation(to_string(Representation::momentum)), Representation::momentum);
  EXPECT_THROW(parse_representation("sideways"), std::invalid_argument);
}
