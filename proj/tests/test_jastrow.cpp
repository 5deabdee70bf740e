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

#include <bit>

#include "tchub/exact.hpp"
#include "tchub/jastrow.hpp"

using namespace tchub;

TEST(FermiSea, HalfFilledRingOccupation) {
  const Lattice lat(4);
  const ReferenceDeterminant ref = fermi_sea(lat, 4);
  EXPECT_EQ(ref.n_electrons(), 4);
  EXPECT_EQ(std::popcount(ref.as_basis_index), 4);
  // k = 0 is always occupied in both spin sectors.
  EXPECT_TRUE(ref.as_basis_index & 1u);
  EXPECT_TRUE(ref.as_basis_index & (1u << 4));
  const ReferenceDeterminant two = fermi_sea(Lattice(2), 2);
  EXPECT_EQ(two.as_basis_index, 0b0101u);
}

TEST(FermiSea, TieBreakSelectsOtherShellMember) {
  const Lattice lat(4);
  EXPECT_NE(fermi_sea(lat, 4, ShellTieBreak::lowest_index).as_basis_index,
            fermi_sea(lat, 4, ShellTieBreak::highest_index).as_basis_index);
}

TEST(ProjectionEquation, TabulatedRoots) {
  const std::vector<std::pair<int, double>> cases{{2, -0.48}, {4, -0.88}, {6, -0.67}};
  for (auto [n, j] : cases) {
    const JOptimization opt = optimize_j(Lattice(n), 1.0, 4.0);
    EXPECT_NEAR(opt.J, j, 0.01) << n;
    EXPECT_LT(std::abs(opt.residual), 1e-5) << n;
  }
}

TEST(ProjectionEquation, ResidualChangesSignAcrossRoot) {
  const ProjectionEquation eq(Lattice(4), 1.0, 4.0);
  const JOptimization opt = optimize_j(eq, {-3.0, 0.0}, 1e-8);
  EXPECT_LT(eq.residual(opt.J - 0.1) * eq.residual(opt.J + 0.1), 0.0);
}

TEST(ProjectionEquation, RejectsBracketWithoutRoot) {
  const ProjectionEquation eq(Lattice(2), 1.0, 4.0);
  EXPECT_THROW(optimize_j(eq, {-0.2, 0.0}, 1e-6), std::domain_error);
}

TEST(GutzwillerTable, QiteValues) {
  EXPECT_NEAR(qite_gutzwiller_j(4), -0.73, 1e-12);
  EXPECT_NEAR(qite_gutzwiller_j(6), -0.59, 1e-12);
  EXPECT_NEAR(qite_gutzwiller_j(2), -0.48, 0.01);
  EXPECT_THROW(qite_gutzwiller_j(5), std::invalid_argument);
}

TEST(Compactness, WeightPeaksNearProjectionRoot) {
  std::vector<double> grid;
  for (int i = 0; i <= 24; ++i) grid.push_back(-1.2 + 0.05 * i);
  const auto sweep = hf_weight_sweep(Lattice(6), 1.0, 4.0, grid);
  ASSERT_EQ(sweep.size(), grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < sweep.size(); ++i)
    if (sweep[i].hf_weight > sweep[best].hf_weight) best = i;
  EXPECT_NEAR(sweep[best].J, -0.67, 0.15);
  EXPECT_GT(sweep[best].hf_weight, sweep.back().hf_weight);
  EXPECT_NEAR(sweep.back().J, 0.0, 1e-12);
}
