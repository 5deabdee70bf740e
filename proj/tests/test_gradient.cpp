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
#include "tchub/experiment.hpp"
#include "tchub/gradient.hpp"
#include "tchub/simulator.hpp"

using namespace tchub;

namespace {

RVector random_theta(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  RVector t(n);
  for (auto& v : t) v = u(rng);
  return t;
}

CVector fd_derivative(const ParametrizedCircuit& c, const RVector& theta, int i) {
  return oracle::central_difference([&](double s) {
    RVector t = theta;
    t[i] += s;
    return evolve(c, t).amplitudes();
  });
}

Problem two_site(const std::string& variant, AnsatzKind kind) {
  HamiltonianSpec h;
  h.nx = 2;
  apply_variant(h, variant);
  return build_problem(h, AnsatzSpec{kind, 1});
}

}  // namespace

TEST(HermitianSplit, Parts) {
  const Problem p = two_site("m-tc", AnsatzKind::quccsd);
  EXPECT_TRUE(p.parts.h_plus.is_hermitian());
  EXPECT_TRUE(p.parts.h_minus.is_anti_hermitian());
  const CMatrix sum = to_matrix(p.parts.h_plus + p.parts.h_minus) * 0.5;
  EXPECT_LT((sum - to_matrix(p.hamiltonian)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(AncillaCircuits, GradientMatchesFiniteDifference) {
  std::mt19937_64 rng(17);
  for (const char* variant : {"r-tc", "m-tc"})
    for (AnsatzKind kind : {AnsatzKind::ry, AnsatzKind::quccsd}) {
      const Problem p = two_site(variant, kind);
      for (int trial = 0; trial < 5; ++trial) {
        const RVector theta = random_theta(p.circuit.n_parameters(), rng);
        const StateVector phi = evolve(p.circuit, theta);
        const CVector hphi = to_matrix(p.hamiltonian) * phi.amplitudes();
        for (int i = 0; i < p.circuit.n_parameters(); ++i) {
          const double expected = fd_derivative(p.circuit, theta, i).dot(hphi).real();
          const CElement c = c_element(p.circuit, theta, i, p.parts, EvalMode::sv);
          EXPECT_NEAR(c.value, expected, 1e-6) << variant << " " << to_string(kind) << " " << i;
        }
      }
    }
}

TEST(AncillaCircuits, MetricMatchesFiniteDifference) {
  std::mt19937_64 rng(23);
  for (AnsatzKind kind : {AnsatzKind::ry, AnsatzKind::quccsd}) {
    const Problem p = two_site("m-tc", kind);
    const RVector theta = random_theta(p.circuit.n_parameters(), rng);
    const int n = p.circuit.n_parameters();
    std::vector<CVector> d;
    for (int i = 0; i < n; ++i) d.push_back(fd_derivative(p.circuit, theta, i));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        EXPECT_NEAR(a_element(p.circuit, theta, i, j, EvalMode::sv),
                    d[static_cast<std::size_t>(i)].dot(d[static_cast<std::size_t>(j)]).real(), 1e-6);
  }
}

TEST(AncillaCircuits, GradientCircuitAddsOneQubit) {
  const Problem p = two_site("r", AnsatzKind::ry);
  const ParametrizedCircuit g = gradient_circuit(p.circuit, p.circuit.n_preparation_gates(), 0, AncillaBasis::hadamard);
  EXPECT_EQ(g.n_qubits(), p.circuit.n_qubits() + 1);
}

TEST(AncillaCircuits, ControlledHamiltonianReference) {
  std::mt19937_64 rng(29);
  const Problem p = two_site("r", AnsatzKind::ry);
  const RVector theta = random_theta(p.circuit.n_parameters(), rng);
  const PauliString z = PauliTerm::from_letters("ZIXI").string();
  const StateVector phi = evolve(p.circuit, theta);
  StateVector zphi = apply(PauliSum(PauliTerm(4, z, 1.0)), phi);
  const cplx expected = fd_derivative(p.circuit, theta, 2).dot(zphi.amplitudes());
  EXPECT_LT(std::abs(controlled_hamiltonian_term(p.circuit, theta, 2, z) - expected), 1e-6);
}

TEST(ShotEstimates, AgreeWithStatevectorWithinErrors) {
  std::mt19937_64 rng(31);
  const Problem p = two_site("r-tc", AnsatzKind::ry);
  ShotSettings shots;
  shots.shots = 100000;
  const RVector theta = random_theta(p.circuit.n_parameters(), rng);
  for (int i = 0; i < 3; ++i) {
    shots.seed = 100 + static_cast<std::uint64_t>(i);
    const CElement sv = c_element(p.circuit, theta, i, p.parts, EvalMode::sv);
    const CElement est = c_element(p.circuit, theta, i, p.parts, EvalMode::shots, shots);
    EXPECT_GT(est.std_error, 0.0);
    EXPECT_LT(std::abs(est.value - sv.value), 5.0 * est.std_error);
  }
}
