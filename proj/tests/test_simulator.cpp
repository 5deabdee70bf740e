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

#include <random>

#include "oracles.hpp"
#include "tchub/circuit.hpp"
#include "tchub/experiment.hpp"
#include "tchub/simulator.hpp"

using namespace tchub;

namespace {

RVector random_theta(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  RVector t(n);
  for (auto& v : t) v = u(rng);
  return t;
}

CMatrix ry_on(int q, double a, int n) {
  CMatrix m = CMatrix::Identity(1, 1);
  for (int k = 0; k < n; ++k)
    m = oracle::kron(k == q ? oracle::expm(cplx(0, -0.5 * a) * oracle::pauli('Y')) : CMatrix::Identity(2, 2), m);
  return m;
}

CMatrix cnot_on(int control, int target, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) m((i >> control & 1) ? (i ^ (Eigen::Index{1} << target)) : i, i) = 1.0;
  return m;
}

}  // namespace

TEST(Statevector, RyAnsatzMatchesDenseProduct) {
  const int n = 3;
  const ParametrizedCircuit c = build_ry_ansatz(n, 2);
  const RVector theta = random_theta(c.n_parameters(), 1);
  CMatrix u = CMatrix::Identity(8, 8);
  int p = 0;
  auto layer = [&] {
    for (int q = 0; q < n; ++q) u = ry_on(q, theta[p++], n) * u;
  };
  layer();
  for (int l = 0; l < 2; ++l) {
    for (int q = 0; q + 1 < n; ++q) u = cnot_on(q, q + 1, n) * u;
    layer();
  }
  const StateVector psi = evolve(c, theta);
  EXPECT_LT((psi.amplitudes() - u.col(0)).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-13);
}

TEST(Statevector, ExpectationRoutesAgree) {
  const PauliSum h = PauliSum(PauliTerm::from_letters("XZY", 0.3)) + PauliSum(PauliTerm::from_letters("ZZI", -1.0));
  StateVector psi(3, CVector::Random(8));
  psi.normalize();
  const cplx dense = psi.amplitudes().dot(to_matrix(h) * psi.amplitudes());
  EXPECT_LT(std::abs(expectation(psi, h) - dense), 1e-13);
  EXPECT_LT(std::abs(expectation(psi, to_sparse(h)) - dense), 1e-13);
}

TEST(Statevector, AnalyticDerivativesMatchCentralDifferences) {
  HamiltonianSpec h;
  h.nx = 2;
  for (AnsatzKind kind : {AnsatzKind::ry, AnsatzKind::quccsd}) {
    const Problem p = build_problem(h, AnsatzSpec{kind, 1});
    const RVector theta = random_theta(p.circuit.n_parameters(), 5);
    const CircuitJet jet = circuit_jet(p.circuit, theta);
    for (int i = 0; i < p.circuit.n_parameters(); ++i) {
      const CVector fd = oracle::central_difference([&](double s) {
        RVector t = theta;
        t[i] += s;
        return evolve(p.circuit, t).amplitudes();
      });
      const StateVector d = derivative_state(p.circuit, theta, i);
      EXPECT_LT((d.amplitudes() - fd).cwiseAbs().maxCoeff(), 1e-8) << to_string(kind) << " " << i;
      EXPECT_LT((jet.derivatives[static_cast<std::size_t>(i)] - d.amplitudes()).cwiseAbs().maxCoeff(), 1e-13);
    }
    EXPECT_LT((jet.state.amplitudes() - evolve(p.circuit, theta).amplitudes()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Statevector, FiniteDifferenceMethodIsConsistent) {
  HamiltonianSpec h;
  h.nx = 4;
  const Problem p = build_problem(h, AnsatzSpec{});
  const RVector theta = random_theta(p.circuit.n_parameters(), 9) * 0.1;
  for (int i : {0, 7, 20}) {
    const StateVector a = derivative_state(p.circuit, theta, i);
    const StateVector f = derivative_state(p.circuit, theta, i, DerivativeMethod::finite_difference, 1e-7);
    EXPECT_LT((a.amplitudes() - f.amplitudes()).cwiseAbs().maxCoeff(), 1e-6) << i;
  }
}

TEST(Statevector, ParticleNumberConservedByQuccsd) {
  HamiltonianSpec h;
  h.nx = 4;
  const Problem p = build_problem(h, AnsatzSpec{});
  const StateVector psi = evolve(p.circuit, random_theta(p.circuit.n_parameters(), 2));
  double outside = 0.0;
  for (Eigen::Index i = 0; i < psi.dim(); ++i)
    if (std::popcount(static_cast<std::uint64_t>(i) & 0xF) != 2 || std::popcount(static_cast<std::uint64_t>(i) >> 4) != 2)
      outside += std::norm(psi[i]);
  EXPECT_LT(outside, 1e-24);
}

TEST(Problem, RealSpaceInitialStateIsNoninteracting) {
  for (int n : {2, 4}) {
    const StateVector psi = noninteracting_real_space_state(Lattice(n));
    EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    HamiltonianSpec h;
    h.nx = n;
    apply_variant(h, "r");
    h.U = 0.0;
    const Problem p = build_problem(h, AnsatzSpec{});
    EXPECT_NEAR(expectation(psi, p.hamiltonian).real(), p.e_exact, 1e-10) << n;
  }
}

TEST(Problem, VariantsAndInitialStates) {
  HamiltonianSpec h;
  apply_variant(h, "r-tc");
  EXPECT_EQ(h.representation, Representation::real_space);
  EXPECT_TRUE(h.transcorrelated);
  EXPECT_EQ(h.variant(), "r-tc");
  EXPECT_THROW(apply_variant(h, "x"), std::invalid_argument);

  h.nx = 2;
  const Problem ry = build_problem(h, AnsatzSpec{AnsatzKind::ry, 1}, "0101");
  const StateVector psi = evolve(ry.circuit, RVector::Zero(ry.circuit.n_parameters()));
  EXPECT_NEAR(std::abs(psi[0b0110]), 1.0, 1e-14);
  EXPECT_THROW(build_problem(h, AnsatzSpec{AnsatzKind::ry, 1}, "010"), std::invalid_argument);
}
