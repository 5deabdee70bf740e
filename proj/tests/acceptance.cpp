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
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tchub/config.hpp"
#include "tchub/exact.hpp"
#include "tchub/gradient.hpp"
#include "tchub/hamiltonians.hpp"
#include "tchub/jastrow.hpp"
#include "tchub/qite.hpp"
#include "tchub/recipes.hpp"
#include "tchub/sampling.hpp"
#include "tchub/simulator.hpp"

using namespace tchub;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

RVector random_theta(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  RVector t(n);
  for (auto& v : t) v = u(rng);
  return t;
}

Outcome ed_energies() {
  const std::vector<std::pair<int, double>> cases{{2, -2.472}, {4, -2.103}, {6, -3.669}};
  Outcome o{true, ""};
  for (auto [n, e] : cases) {
    const PauliSum h = jordan_wigner(build_real_space(Lattice(n), {1.0, 4.0, 0.0}));
    const double got = exact_ground_state(h, SectorBasis::half_filling(n)).energy;
    o.pass = o.pass && std::abs(got - e) <= 5e-4;
    o.detail += "N=" + std::to_string(n) + ":" + fmt("%.5f ", got);
  }
  return o;
}

Outcome spectrum_invariance() {
  double worst = 0.0;
  for (int n : {2, 4, 6})
    for (Representation rep : {Representation::real_space, Representation::momentum}) {
      const Lattice lat(n);
      const HubbardParams p{1.0, 4.0, qite_gutzwiller_j(n)};
      const SectorBasis sector = SectorBasis::half_filling(n);
      auto tc = sector_spectrum(jordan_wigner(build_hamiltonian(lat, p, rep, true)), sector);
      auto base = sector_spectrum(jordan_wigner(build_hamiltonian(lat, p, rep, false)), sector);
      auto key = [](cplx a, cplx b) { return a.real() < b.real(); };
      std::sort(tc.begin(), tc.end(), key);
      std::sort(base.begin(), base.end(), key);
      for (std::size_t i = 0; i < tc.size(); ++i) worst = std::max(worst, std::abs(tc[i] - base[i]));
    }
  return {worst < 1e-8, "max eigenvalue deviation " + fmt("%.2e", worst)};
}

Outcome similarity_identity() {
  double worst = 0.0;
  for (int n : {2, 4})
    for (Representation rep : {Representation::real_space, Representation::momentum}) {
      const Lattice lat(n);
      const HubbardParams p{1.0, 4.0, qite_gutzwiller_j(n)};
      const auto idx = oracle::half_filling(n);
      const CMatrix h = oracle::restrict(to_matrix(jordan_wigner(build_hamiltonian(lat, p, rep, false))), idx);
      const CMatrix g = oracle::restrict(to_matrix(jordan_wigner(build_gutzwiller(lat, p.J, rep))), idx);
      const CMatrix htc = oracle::restrict(to_matrix(jordan_wigner(build_hamiltonian(lat, p, rep, true))), idx);
      worst = std::max(worst, (htc - oracle::expm(-g) * h * oracle::expm(g)).cwiseAbs().maxCoeff());
    }
  return {worst < 1e-9, "max |H_tc - e^-g H e^g| = " + fmt("%.2e", worst)};
}

Outcome j_optimization() {
  const std::vector<std::pair<int, double>> cases{{2, -0.48}, {4, -0.88}, {6, -0.67}};
  Outcome o{true, ""};
  for (auto [n, j] : cases) {
    const double got = optimize_j(Lattice(n), 1.0, 4.0).J;
    o.pass = o.pass && std::abs(got - j) <= 0.01;
    o.detail += "N=" + std::to_string(n) + ":" + fmt("%.4f ", got);
  }
  return o;
}

Outcome ansatz_counts() {
  const std::vector<std::pair<int, int>> cases{{2, 3}, {4, 26}, {6, 117}};
  Outcome o{true, ""};
  for (auto [n, count] : cases) {
    const Lattice lat(n);
    const ReferenceDeterminant ref = fermi_sea(lat, n);
    const int one = build_quccsd(lat, ref, 1).n_parameters();
    const int two = build_quccsd(lat, ref, 2).n_parameters();
    o.pass = o.pass && one == count && two == 2 * count;
    o.detail += std::to_string(one) + "/" + std::to_string(two) + " ";
  }
  return o;
}

Outcome gradient_equivalence() {
  std::mt19937_64 rng(2024);
  double worst_c = 0.0, worst_a = 0.0;
  for (auto [variant, kind] : {std::pair{"r-tc", AnsatzKind::ry}, std::pair{"m-tc", AnsatzKind::quccsd}}) {
    HamiltonianSpec h;
    h.nx = 2;
    apply_variant(h, variant);
    const Problem p = build_problem(h, AnsatzSpec{kind, 1});
    const CMatrix hm = to_matrix(p.hamiltonian);
    const int n = p.circuit.n_parameters();
    for (int point = 0; point < 50; ++point) {
      const RVector theta = random_theta(n, rng);
      const CVector hphi = hm * evolve(p.circuit, theta).amplitudes();
      std::vector<CVector> d;
      for (int i = 0; i < n; ++i)
        d.push_back(oracle::central_difference([&](double s) {
          RVector t = theta;
          t[i] += s;
          return evolve(p.circuit, t).amplitudes();
        }));
      for (int i = 0; i < n; ++i) {
        const auto di = d[static_cast<std::size_t>(i)];
        const double c = c_element(p.circuit, theta, i, p.parts, EvalMode::sv).value;
        worst_c = std::max(worst_c, std::abs(c - di.dot(hphi).real()));
        for (int j = 0; j < n; ++j) {
          const double a = a_element(p.circuit, theta, i, j, EvalMode::sv);
          worst_a = std::max(worst_a, std::abs(a - di.dot(d[static_cast<std::size_t>(j)]).real()));
        }
      }
    }
  }
  return {worst_c < 1e-6 && worst_a < 1e-6, "max dC " + fmt("%.2e", worst_c) + ", max dA " + fmt("%.2e", worst_a)};
}

QiteTrajectory qite(int n, const std::string& variant, int layers = 1) {
  QiteConfig c;
  c.hamiltonian.nx = n;
  apply_variant(c.hamiltonian, variant);
  c.ansatz.layers = layers;
  return run_qite(c);
}

Outcome qite_headline() {
  Outcome o{true, ""};
  std::vector<std::string> notes;

  std::map<std::string, QiteTrajectory> two;
  for (const std::string v : {"r", "r-tc", "m", "m-tc"}) two[v] = qite(2, v);
  const bool ok2 = two["m-tc"].final().abs_err <= 1e-3 && two["m-tc"].final().infidelity <= 1e-4 &&
                   two["r"].final().abs_err >= 0.1 && two["r"].final().abs_err <= 1.0 &&
                   two["r-tc"].final().abs_err <= 1e-3;
  o.detail += std::string("N=2 ") + (ok2 ? "ok" : "fail") + " (m-tc " + fmt("%.1e", two["m-tc"].final().abs_err) +
              "/" + fmt("%.1e", two["m-tc"].final().infidelity) + ", r " + fmt("%.2f", two["r"].final().abs_err) +
              ", r-tc " + fmt("%.1e", two["r-tc"].final().abs_err) + "); ";

  const double r4 = qite(4, "r-tc").final().abs_err, m4 = qite(4, "m-tc").final().abs_err;
  const bool ok4 = m4 * 100.0 <= r4;
  o.detail += std::string("N=4 ") + (ok4 ? "ok" : "fail") + " (m-tc " + fmt("%.1e", m4) + ", r-tc " + fmt("%.1e", r4) +
              "); ";

  std::map<std::string, QiteTrajectory> six;
  for (const std::string v : {"r", "r-tc", "m", "m-tc"}) six[v] = qite(6, v);
  const QiteTrajectory m6_two = qite(6, "m", 2);
  double others = 1e300;
  for (const std::string v : {"r", "r-tc", "m"}) others = std::min(others, six[v].final().abs_err);
  const double m6 = six["m-tc"].final().abs_err;
  const bool ratio_ok = m6 * 100.0 <= others;
  const bool infid_ok = six["m-tc"].final().infidelity < m6_two.final().infidelity;
  o.detail += std::string("N=6 ") + (ratio_ok && infid_ok ? "ok" : "fail") + " (m-tc " + fmt("%.2e", m6) +
              ", best other " + fmt("%.2e", others) + ", ratio " + fmt("%.1f", others / m6) + "; infidelity m-tc n=1 " +
              fmt("%.1e", six["m-tc"].final().infidelity) + " vs m n=2 " + fmt("%.1e", m6_two.final().infidelity) + ")";
  o.pass = ok2 && ok4 && ratio_ok && infid_ok;
  return o;
}

Outcome qite_vs_vqe() {
  QiteConfig c;
  c.hamiltonian.nx = 2;
  apply_variant(c.hamiltonian, "m");
  const double eq = run_qite(c).final().energy;
  const double ev = run_vqe(c).energy;
  return {std::abs(eq - ev) < 1e-5, "QITE " + fmt("%.9f", eq) + ", VQE " + fmt("%.9f", ev)};
}

Outcome compactness() {
  std::vector<double> grid;
  for (int i = 0; i <= 24; ++i) grid.push_back(-1.2 + 0.05 * i);
  const auto sweep = hf_weight_sweep(Lattice(6), 1.0, 4.0, grid);
  std::size_t best = 0;
  for (std::size_t i = 0; i < sweep.size(); ++i)
    if (sweep[i].hf_weight > sweep[best].hf_weight) best = i;
  const double w0 = sweep.back().hf_weight;
  const bool ok = std::abs(sweep[best].J + 0.67) <= 0.15 && sweep[best].hf_weight > w0;
  return {ok, "argmax J " + fmt("%.2f", sweep[best].J) + ", weight " + fmt("%.4f", sweep[best].hf_weight) +
                  " (J=0: " + fmt("%.4f", w0) + ", >0.9: " + (sweep[best].hf_weight > 0.9 ? "yes" : "no") + ")"};
}

Outcome shot_statistics() {
  HamiltonianSpec h;
  h.nx = 2;
  apply_variant(h, "r-tc");
  const Problem p = build_problem(h, AnsatzSpec{AnsatzKind::ry, 1});
  std::mt19937_64 rng(99);
  ShotSettings shots;
  shots.shots = 100000;
  double worst_c = 0.0, worst_e = 0.0, worst_z = 0.0;
  const double flip = 0.03;
  const ReadoutModel model = ReadoutModel::symmetric_flip(p.circuit.n_qubits(), flip);
  for (int point = 0; point < 20; ++point) {
    const RVector theta = random_theta(p.circuit.n_parameters(), rng);
    const StateVector psi = evolve(p.circuit, theta);
    for (int i = 0; i < p.circuit.n_parameters(); ++i) {
      shots.seed = derive_seed(7, {static_cast<std::uint64_t>(point), static_cast<std::uint64_t>(i)});
      const double sv = c_element(p.circuit, theta, i, p.parts, EvalMode::sv).value;
      const CElement est = c_element(p.circuit, theta, i, p.parts, EvalMode::shots, shots);
      worst_c = std::max(worst_c, std::abs(est.value - sv) / est.std_error);
    }
    const double e_sv = expectation(psi, p.parts.h_plus).real() / 2.0;
    const Estimate e = estimate_observable(psi, p.parts.h_plus, shots.shots, derive_seed(8, {static_cast<std::uint64_t>(point)}));
    worst_e = std::max(worst_e, std::abs(e.mean / 2.0 - e_sv) / (e.std_error / 2.0));

    const std::uint64_t seed = derive_seed(9, {static_cast<std::uint64_t>(point)});
    const Distribution mitigated = mitigate_readout(apply_readout_error(sample(psi, shots.shots, seed), model, seed + 1), model);
    for (int q = 0; q < p.circuit.n_qubits(); ++q) {
      std::string letters(static_cast<std::size_t>(p.circuit.n_qubits()), 'I');
      letters[static_cast<std::size_t>(q)] = 'Z';
      const double z_sv = expectation(psi, PauliSum(PauliTerm::from_letters(letters))).real();
      double z = 0.0, total = 0.0;
      for (const auto& [bits, w] : mitigated) {
        z += (bits[static_cast<std::size_t>(q)] == '0' ? 1.0 : -1.0) * w;
        total += w;
      }
      z /= total;
      const double se = std::sqrt(std::max(1.0 - z_sv * z_sv, 1e-12) / static_cast<double>(shots.shots)) / (1.0 - 2.0 * flip);
      worst_z = std::max(worst_z, std::abs(z - z_sv) / se);
    }
  }
  return {worst_c < 4.0 && worst_e < 4.0 && worst_z < 3.0,
          "max deviations in standard errors: C " + fmt("%.2f", worst_c) + ", E " + fmt("%.2f", worst_e) +
              ", mitigated <Z> " + fmt("%.2f", worst_z)};
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : ss.str()) h = (h ^ c) * 0x100000001b3ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Outcome determinism() {
  const auto root = std::filesystem::temp_directory_path() / "tchub_acceptance_determinism";
  std::filesystem::remove_all(root);
  ExperimentConfig shot_cfg = parse_config(nlohmann::json::parse(
      R"({"hamiltonian": {"variant": "r-tc", "n_sites": 2}, "ansatz": {"kind": "ry"}, "mode": "shots",
          "shots": {"count": 20000, "readout_flip": 0.02}, "seed": 11, "qite": {"max_steps": 20}})"));
  ExperimentConfig sv_cfg = parse_config(nlohmann::json::parse(R"({"hamiltonian": {"n_sites": 4}, "qite": {"max_steps": 30}})"));
  bool same = true;
  std::string detail;
  for (auto* cfg : {&shot_cfg, &sv_cfg}) {
    cfg->out_dir = (root / "a").string();
    const std::string a = file_digest(run_and_write(*cfg, "run").csv_path);
    cfg->out_dir = (root / "b").string();
    const std::string b = file_digest(run_and_write(*cfg, "run").csv_path);
    same = same && a == b;
    detail += a + (a == b ? "==" : "!=") + b + " ";
  }
  std::filesystem::remove_all(root);
  return {same, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"ED ground energies", ed_energies},
      {"TC spectrum invariance", spectrum_invariance},
      {"Similarity identity", similarity_identity},
      {"Projection J roots", j_optimization},
      {"qUCCSD parameter counts", ansatz_counts},
      {"Ancilla gradient and metric circuits", gradient_equivalence},
      {"QITE headline accuracy", qite_headline},
      {"QITE vs VQE (Hermitian)", qite_vs_vqe},
      {"Compactness sweep", compactness},
      {"Shot statistics and readout mitigation", shot_statistics},
      {"Determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%zu] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
