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
#include "tchub/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tchub {

Lattice::Lattice(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 2 || ny < 1) throw std::invalid_argument("lattice needs Nx >= 2 and Ny >= 1");
  if (ny > 1 && ny < 2) throw std::invalid_argument("lattice needs Ny == 1 or Ny >= 2");
  if (2 * nx * ny > 64) throw std::invalid_argument("lattice too large for 64 spin-orbitals");
}

std::vector<std::pair<int, int>> Lattice::bonds() const {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < ny_; ++y)
    for (int x = 0; x < nx_; ++x) {
      const int i = x + nx_ * y;
      out.emplace_back(i, (x + 1) % nx_ + nx_ * y);
      if (ny_ > 1) out.emplace_back(i, x + nx_ * ((y + 1) % ny_));
    }
  return out;
}

std::array<double, 2> Lattice::momentum(int k) const {
  const double two_pi = 2.0 * std::numbers::pi;
  return {two_pi * (k % nx_) / nx_, two_pi * (k / nx_) / ny_};
}

int Lattice::add_momenta(int a, int b) const {
  const int x = (a % nx_ + b % nx_) % nx_;
  const int y = (a / nx_ + b / nx_) % ny_;
  return x + nx_ * y;
}

int Lattice::negate_momentum(int a) const {
  const int x = (nx_ - a % nx_) % nx_;
  const int y = (ny_ - a / nx_) % ny_;
  return x + nx_ * y;
}

int Lattice::sub_momenta(int a, int b) const { return add_momenta(a, negate_momentum(b)); }

double Lattice::dispersion(int k, double t) const {
  const auto [kx, ky] = momentum(k);
  double e = -2.0 * t * std::cos(kx);
  if (ny_ > 1) e += -2.0 * t * std::cos(ky);
  return e;
}

}  // namespace tchub
