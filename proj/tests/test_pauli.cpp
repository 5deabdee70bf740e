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
#include "tchub/fermion.hpp"
#include "tchub/pauli.hpp"

using namespace tchub;

namespace {

double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

std::string random_letters(std::mt19937_64& rng, int n) {
  static const char kLetters[] = "IXYZ";
  std::string s;
  for (int i = 0; i < n; ++i) s += kLetters[rng() % 4];
  return s;
}

}  // namespace

TEST(PauliAlgebra, SingleQubitProducts) {
  PauliTerm xy = multiply_terms(PauliTerm::from_letters("X"), PauliTerm::from_letters("Y"));
  EXPECT_EQ(xy.letters(), "Z");
  EXPECT_NEAR(std::abs(xy.coefficient() - cplx(0, 1)), 0.0, 1e-15);

  PauliTerm zx = multiply_terms(PauliTerm::from_letters("Z"), PauliTerm::from_letters("X"));
  EXPECT_EQ(zx.letters(), "Y");
  EXPECT_NEAR(std::abs(zx.coefficient() - cplx(0, 1)), 0.0, 1e-15);

  PauliTerm yy = multiply_terms(PauliTerm::from_letters("Y"), PauliTerm::from_letters("Y"));
  EXPECT_EQ(yy.letters(), "I");
  EXPECT_NEAR(std::abs(yy.coefficient() - 1.0), 0.0, 1e-15);
}

TEST(PauliAlgebra, LettersMapToQubits) {
  PauliTerm t = PauliTerm::from_letters("XIZY", 2.0);
  EXPECT_EQ(t.n_qubits(), 4);
  EXPECT_EQ(t.letter(0), 'X');
  EXPECT_EQ(t.letter(2), 'Z');
  EXPECT_EQ(t.letter(3), 'Y');
  EXPECT_EQ(t.string().x, 0b1001u);
  EXPECT_EQ(t.string().z, 0b1100u);
}

TEST(PauliAlgebra, DenseMatrixMatchesKroneckerProduct) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::string s = random_letters(rng, 3);
    const CMatrix m = to_matrix(PauliSum(PauliTerm::from_letters(s)));
    EXPECT_LT(max_diff(m, oracle::pauli_string(s)), 1e-14) << s;
  }
}

TEST(PauliAlgebra, ProductMatchesMatrixProduct) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    PauliSum a(3), b(3);
    for (int k = 0; k < 3; ++k) {
      a += PauliSum(PauliTerm::from_letters(random_letters(rng, 3), cplx(rng() % 5 - 2.0, rng() % 3 - 1.0)));
      b += PauliSum(PauliTerm::from_letters(random_letters(rng, 3), cplx(rng() % 4 - 1.5, 0.5)));
    }
    EXPECT_LT(max_diff(to_matrix(a * b), to_matrix(a) * to_matrix(b)), 1e-12);
  }
}

TEST(PauliAlgebra, AdjointAndHermiticity) {
  PauliSum h = PauliSum(PauliTerm::from_letters("XY", 1.5)) + PauliSum(PauliTerm::from_letters("ZI", -0.5));
  EXPECT_TRUE(h.is_hermitian());
  PauliSum a = h * cplx(0, 1);
  EXPECT_TRUE(a.is_anti_hermitian());
  EXPECT_FALSE(a.is_hermitian());
  EXPECT_LT(max_diff(to_matrix(a.adjoint()), to_matrix(a).adjoint()), 1e-14);
}

TEST(PauliAlgebra, SparseAndApplyAgreeWithDense) {
  PauliSum h = parse_pauli_sum(to_text(PauliSum(PauliTerm::from_letters("XYZ", 0.3)) +
                                       PauliSum(PauliTerm::from_letters("IZX", cplx(0.1, -0.2)))));
  const CMatrix dense = to_matrix(h);
  EXPECT_LT(max_diff(CMatrix(to_sparse(h)), dense), 1e-14);
  StateVector psi(3);
  for (Eigen::Index i = 0; i < psi.dim(); ++i) psi[i] = cplx(std::cos(0.3 * i), std::sin(0.7 * i));
  const StateVector out = apply(h, psi);
  EXPECT_LT((out.amplitudes() - dense * psi.amplitudes()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(PauliAlgebra, TextRoundTrip) {
  PauliSum h = PauliSum(PauliTerm::from_letters("XIZY", cplx(0.25, -1.0))) + PauliSum::identity(4, 2.0);
  EXPECT_LT(max_diff(to_matrix(parse_pauli_sum(to_text(h))), to_matrix(h)), 1e-14);
}

TEST(JordanWigner, MatchesFockSpaceAction) {
  FermionOperator op(4);
  op.add({cr(0), an(2)}, 0.7);
  op.add({cr(2), an(0)}, 0.7);
  op.add({cr(1), cr(3), an(3), an(1)}, -1.3);
  op.add({cr(3), an(0)}, cplx(0.2, 0.4));
  op.add({cr(0), cr(1), an(2)}, 0.5);
  EXPECT_LT(max_diff(to_matrix(jordan_wigner(op)), oracle::fock_matrix(op)), 1e-14);
}

TEST(JordanWigner, AnticommutationRelations) {
  const int n = 3;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const CMatrix ap = to_matrix(jordan_wigner({an(p)}, n));
      const CMatrix aq_dag = to_matrix(jordan_wigner({cr(q)}, n));
      const CMatrix anti = ap * aq_dag + aq_dag * ap;
      const CMatrix expected = (p == q ? 1.0 : 0.0) * CMatrix::Identity(8, 8);
      EXPECT_LT(max_diff(anti, expected), 1e-14);
    }
}

TEST(FermionOperator, NormalOrderingPreservesOperator) {
  FermionOperator op(3);
  op.add({an(1), cr(1)}, 1.0);
  op.add({an(0), cr(2), an(2), cr(0)}, 0.5);
  EXPECT_LT(max_diff(to_matrix(jordan_wigner(op)), oracle::fock_matrix(op)), 1e-14);
  for (const auto& [product, c] : op.terms()) {
    bool seen_annihilator = false;
    for (const Ladder& l : product) {
      if (!l.dagger) seen_annihilator = true;
      else EXPECT_FALSE(seen_annihilator);
    }
  }
}

TEST(FermionOperator, AdjointMatchesMatrixAdjoint) {
  FermionOperator op(3);
  op.add({cr(0), an(2)}, cplx(0.3, 0.9));
  op.add({cr(1), cr(2), an(0), an(1)}, cplx(-0.4, 0.1));
  EXPECT_LT(max_diff(oracle::fock_matrix(op.adjoint()), oracle::fock_matrix(op).adjoint()), 1e-14);
  EXPECT_EQ(op.max_body(), 2);
}
