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

#include <array>
#include <utility>
#include <vector>

namespace tchub {

enum class Spin { up = 0, down = 1 };

inline Spin opposite(Spin s) { return s == Spin::up ? Spin::down : Spin::up; }

/// Periodic Nx x Ny lattice. Sites and momenta share the index layout
/// i = x + Nx * y; momentum index (n, m) stands for (2 pi n / Nx, 2 pi m / Ny).
class Lattice {
 public:
  Lattice(int nx, int ny = 1);

  static Lattice ring(int n) { return Lattice(n, 1); }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int n_sites() const { return nx_ * ny_; }
  int n_modes() const { return 2 * n_sites(); }
  bool is_chain() const { return ny_ == 1; }

  /// Spin-orbital ordering: up orbitals occupy [0, N), down orbitals [N, 2N).
  int mode(int orbital, Spin s) const { return orbital + static_cast<int>(s) * n_sites(); }

  /// Nearest-neighbour bonds (i, j), one per site and lattice direction.
  /// A direction of length 2 therefore contributes two bonds between the
  /// same pair of sites, matching the wrap-around of the periodic ring.
  std::vector<std::pair<int, int>> bonds() const;

  std::array<double, 2> momentum(int k) const;
  int add_momenta(int a, int b) const;
  int sub_momenta(int a, int b) const;
  int negate_momentum(int a) const;

  /// eps_k = -2t (cos kx + cos ky); the ky term is absent on chains.
  double dispersion(int k, double t) const;

 private:
  int nx_, ny_;
};

}  // namespace tchub
