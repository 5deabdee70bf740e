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
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tchub/qite.hpp"

namespace tchub {

namespace {

struct Objective {
  const Problem& problem;
  int evaluations = 0;

  double operator()(const RVector& theta, RVector& grad) {
    ++evaluations;
    const CircuitJet jet = circuit_jet(problem.circuit, theta);
    const CVector h_phi = problem.hamiltonian_sparse * jet.state.amplitudes();
    grad.resize(theta.size());
    for (Eigen::Index i = 0; i < theta.size(); ++i)
      grad[i] = 2.0 * jet.derivatives[static_cast<std::size_t>(i)].dot(h_phi).real();
    return jet.state.amplitudes().dot(h_phi).real();
  }
};

}  // namespace

VqeResult run_vqe(const Problem& problem, const VqeOptions& options) {
  if (!problem.hamiltonian.is_hermitian())
    throw std::invalid_argument(
        "VQE needs a Hermitian Hamiltonian: the variational principle does not bound the energy of a "
        "transcorrelated (non-Hermitian) operator");
  Objective f{problem};
  VqeResult res;
  RVector x = RVector::Zero(problem.circuit.n_parameters());
  RVector g;
  double fx = f(x, g);
  std::vector<RVector> s_hist, y_hist;
  std::vector<double> rho_hist;
  int it = 0;
  for (; it < options.max_iterations && g.norm() >= options.grad_tolerance; ++it) {
    // Two-loop recursion for the quasi-Newton direction.
    RVector q = g;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t k = s_hist.size(); k-- > 0;) {
      alpha[k] = rho_hist[k] * s_hist[k].dot(q);
      q -= alpha[k] * y_hist[k];
    }
    if (!s_hist.empty()) q *= s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      const double beta = rho_hist[k] * y_hist[k].dot(q);
      q += (alpha[k] - beta) * s_hist[k];
    }
    RVector dir = -q;
    double slope = g.dot(dir);
    if (!(slope < 0)) {
      dir = -g;
      slope = -g.squaredNorm();
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
    }

    // Backtracking under the Armijo condition.
    double step = 1.0;
    RVector x_new, g_new;
    double f_new = fx;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      x_new = x + step * dir;
      f_new = f(x_new, g_new);
      if (f_new <= fx + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const RVector s = x_new - x, y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      s_hist.push_back(s);
      y_hist.push_back(y);
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > options.memory) {
        s_hist.erase(s_hist.begin());
        y_hist.erase(y_hist.begin());
        rho_hist.erase(rho_hist.begin());
      }
    }
    x = std::move(x_new);
    g = std::move(g_new);
    fx = f_new;
  }
  res.theta = x;
  res.energy = fx;
  res.grad_norm = g.size() ? g.norm() : 0.0;
  res.iterations = it;
  res.converged = res.grad_norm < options.grad_tolerance;
  return res;
}

VqeResult run_vqe(const QiteConfig& config, const VqeOptions& options) {
  config.validate();
  if (config.hamiltonian.transcorrelated)
    throw std::invalid_argument(
        "VQE needs a Hermitian Hamiltonian: the variational principle does not bound the energy of a "
        "transcorrelated (non-Hermitian) operator");
  return run_vqe(build_problem(config.hamiltonian, config.ansatz, config.initial_state, false), options);
}

}  // namespace tchub
