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
#include "tchub/experiment.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "tchub/sampling.hpp"

namespace tchub {

HubbardParams HamiltonianSpec::params() const {
  HubbardParams p;
  p.t = t;
  p.U = U;
  p.J = transcorrelated ? J.value_or(qite_gutzwiller_j(nx * ny)) : 0.0;
  return p;
}

std::string HamiltonianSpec::variant() const {
  return std::string(representation == Representation::momentum ? "m" : "r") + (transcorrelated ? "-tc" : "");
}

void HamiltonianSpec::validate() const {
  (void)lattice();
  if ((nx * ny) % 2 != 0) throw std::invalid_argument("half filling needs an even number of sites");
  params().validate();
}

void apply_variant(HamiltonianSpec& spec, const std::string& variant) {
  if (variant == "r" || variant == "r-tc") spec.representation = Representation::real_space;
  else if (variant == "m" || variant == "m-tc") spec.representation = Representation::momentum;
  else throw std::invalid_argument("unknown Hamiltonian variant '" + variant + "' (expected r, r-tc, m or m-tc)");
  spec.transcorrelated = variant.ends_with("-tc");
}

std::string to_string(AnsatzKind k) { return k == AnsatzKind::quccsd ? "quccsd" : "ry"; }

AnsatzKind parse_ansatz_kind(const std::string& s) {
  if (s == "quccsd") return AnsatzKind::quccsd;
  if (s == "ry") return AnsatzKind::ry;
  throw std::invalid_argument("unknown ansatz '" + s + "' (expected quccsd or ry)");
}

StateVector noninteracting_real_space_state(const Lattice& lat) {
  const int n = lat.n_sites();
  const ReferenceDeterminant sea = fermi_sea(lat, n);
  std::vector<int> occupied;
  for (int m : sea.occupied_modes)
    if (m < n) occupied.push_back(m);

  // Plane-wave orbitals e^{i k.r} / sqrt(N) of the occupied momenta.
  const int m = static_cast<int>(occupied.size());
  CMatrix orbitals(n, m);
  for (int c = 0; c < m; ++c) {
    const auto [kx, ky] = lat.momentum(occupied[static_cast<std::size_t>(c)]);
    for (int r = 0; r < n; ++r)
      orbitals(r, c) = std::polar(1.0 / std::sqrt(double(n)), kx * (r % lat.nx()) + ky * (r / lat.nx()));
  }

  // Amplitude of a^dag_{r1} ... a^dag_{rm} |0> (ascending sites) is det(orbitals[r, :]).
  std::vector<std::pair<std::uint64_t, cplx>> spin_block;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (std::popcount(bits) != m) continue;
    CMatrix sub(m, m);
    int row = 0;
    for (int r = 0; r < n; ++r)
      if (bits >> r & 1U) sub.row(row++) = orbitals.row(r);
    spin_block.emplace_back(bits, sub.determinant());
  }
  StateVector psi(lat.n_modes());
  for (const auto& [up, a] : spin_block)
    for (const auto& [down, b] : spin_block) psi[static_cast<Eigen::Index>(up | down << n)] = a * b;
  psi.normalize();
  return psi;
}

Problem build_problem(const HamiltonianSpec& h, const AnsatzSpec& a, const std::string& initial_state,
                      bool global_phase) {
  h.validate();
  if (a.layers < 1) throw std::invalid_argument("ansatz needs at least one layer");
  const Lattice lat = h.lattice();
  const HubbardParams p = h.params();
  const SectorBasis sector = SectorBasis::half_filling(lat.n_sites());

  Problem out;
  out.spec = h;
  out.hamiltonian = jordan_wigner(build_hamiltonian(lat, p, h.representation, h.transcorrelated));
  out.hamiltonian_sparse = to_sparse(out.hamiltonian);
  out.parts = split(out.hamiltonian);
  HubbardParams base_params = p;
  base_params.J = 0.0;
  const PauliSum base = h.transcorrelated ? jordan_wigner(build_hamiltonian(lat, base_params, h.representation, false))
                                          : out.hamiltonian;
  GroundState gs = exact_ground_state(base, sector);
  if (h.transcorrelated) {
    const PauliSum g = jordan_wigner(build_gutzwiller(lat, p.J, h.representation));
    gs = tc_right_eigenvector(gs, g, out.hamiltonian, sector);
  }
  out.e_exact = gs.energy;
  out.reference = gs.state;
  out.degeneracy = gs.degeneracy;

  const int nq = lat.n_modes();
  const bool momentum = h.representation == Representation::momentum;
  const bool explicit_bits = initial_state != "auto" && initial_state != "fermi-sea" && initial_state != "u0";
  if (initial_state == "fermi-sea" && !momentum)
    throw std::invalid_argument("the Fermi-sea basis state is only defined in momentum space");
  if (explicit_bits && static_cast<int>(initial_state.size()) != nq)
    throw std::invalid_argument("initial bitstring must have " + std::to_string(nq) + " characters");
  const std::uint64_t bits = explicit_bits ? parse_bitstring(initial_state) : 0;

  if (a.kind == AnsatzKind::quccsd) {
    ReferenceDeterminant ref = fermi_sea(lat, lat.n_sites());
    if (!momentum) {
      std::vector<int> lower;
      for (int s = 0; s < lat.n_sites() / 2; ++s) lower.push_back(s);
      ref = determinant_from_orbitals(lat, lower, lower);
    }
    out.circuit = build_quccsd(lat, ref, a.layers);
    if (explicit_bits) out.circuit.set_initial_state(StateVector::basis(nq, bits));
    else if (!momentum) out.circuit.set_initial_state(noninteracting_real_space_state(lat));
  } else {
    std::uint64_t input = bits;
    if (!explicit_bits) {
      if (initial_state == "auto") {
        for (int q = 1; q < nq; q += 2) input |= std::uint64_t{1} << q;
      } else {
        input = fermi_sea(lat, lat.n_sites()).as_basis_index;
      }
    }
    out.circuit = build_ry_ansatz(nq, a.layers, input);
    if (initial_state == "u0" && !momentum) out.circuit.set_initial_state(noninteracting_real_space_state(lat));
  }
  if (global_phase) out.circuit.enable_global_phase();
  return out;
}

}  // namespace tchub
