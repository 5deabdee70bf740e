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
#include "tchub/qite.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace tchub {

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::converged: return "converged";
    case RunStatus::max_steps: return "max_steps";
    case RunStatus::diverged: return "diverged";
  }
  return "unknown";
}

void QiteConfig::validate() const {
  hamiltonian.validate();
  if (ansatz.layers < 1) throw std::invalid_argument("ansatz.layers must be at least 1");
  if (!(dt > 0)) throw std::invalid_argument("Δt must be positive");
  if (max_steps < 0) throw std::invalid_argument("max_steps must be non-negative");
  if (!(grad_norm_threshold >= 0)) throw std::invalid_argument("grad_norm_threshold must be non-negative");
  if (!(lambda_min > 0) || !(lambda_max > lambda_min)) throw std::invalid_argument("need 0 < lambda_min < lambda_max");
  if (!(corner_termination > 0)) throw std::invalid_argument("corner termination must be positive");
  if (!(fd_step > 0)) throw std::invalid_argument("fd_step must be positive");
  if (mode == EvalMode::shots) {
    if (shots.shots <= 0) throw std::invalid_argument("shots must be positive");
    if (shots.readout_flip < 0 || shots.readout_flip >= 0.5)
      throw std::invalid_argument("readout flip probability must lie in [0, 0.5)");
  }
}

namespace {

constexpr double kDivergenceFactor = 1e3;

ShotSettings seeded(const ShotSettings& base, std::initializer_list<std::uint64_t> labels) {
  ShotSettings s = base;
  s.seed = derive_seed(base.seed, labels);
  return s;
}

}  // namespace

QiteSystem assemble_system(const Problem& problem, const QiteConfig& config, const RVector& theta, int step) {
  const ParametrizedCircuit& c = problem.circuit;
  const int np = c.n_parameters();
  QiteSystem sys;
  sys.A = RMatrix::Zero(np, np);
  sys.C = RVector::Zero(np);

  if (config.mode == EvalMode::sv) {
    CircuitJet jet = circuit_jet(c, theta, config.derivatives, config.fd_step);
    CMatrix D(jet.state.dim(), np);
    for (int i = 0; i < np; ++i) D.col(i) = jet.derivatives[static_cast<std::size_t>(i)];
    const CVector h_phi = problem.hamiltonian_sparse * jet.state.amplitudes();
    sys.energy = jet.state.amplitudes().dot(h_phi).real();
    sys.A = (D.adjoint() * D).real();
    if (config.gradient == GradientEvaluation::direct) {
      sys.C = (D.adjoint() * h_phi).real();
    } else {
      for (int i = 0; i < np; ++i) sys.C[i] = c_element(c, theta, i, problem.parts, EvalMode::sv).value;
    }
    sys.state = std::move(jet.state);
    return sys;
  }

  if (c.initial_state()) throw std::invalid_argument("shots mode supports basis-state initialization only");
  const auto s = static_cast<std::uint64_t>(step);
  sys.state = evolve(c, theta);
  std::optional<ReadoutModel> readout;
  if (config.shots.readout_flip > 0) readout = ReadoutModel::symmetric_flip(c.n_qubits(), config.shots.readout_flip);
  const Estimate e = estimate_observable(sys.state, problem.parts.h_plus, config.shots.shots,
                                         derive_seed(config.shots.seed, {s, 0}), readout ? &*readout : nullptr);
  sys.energy = e.mean / 2.0;
  sys.energy_std_error = e.std_error / 2.0;
  for (int i = 0; i < np; ++i) {
    const auto ui = static_cast<std::uint64_t>(i);
    sys.C[i] = c_element(c, theta, i, problem.parts, EvalMode::shots, seeded(config.shots, {s, 1, ui})).value;
    for (int j = i; j < np; ++j) {
      const auto uj = static_cast<std::uint64_t>(j);
      sys.A(i, j) = a_element(c, theta, i, j, EvalMode::shots, seeded(config.shots, {s, 2, ui, uj}));
      sys.A(j, i) = sys.A(i, j);
    }
  }
  return sys;
}

namespace {

StepRecord make_record(const Problem& problem, const QiteConfig& config, const QiteSystem& sys, const RVector& theta,
                       int step, double lambda) {
  StepRecord r;
  r.step = step;
  r.tau = step * config.dt;
  r.theta = theta;
  r.energy = sys.energy;
  r.energy_std_error = sys.energy_std_error;
  r.abs_err = std::abs(sys.energy - problem.e_exact);
  if (config.mode == EvalMode::sv) {
    const double overlap = std::abs(inner(sys.state, problem.reference));
    r.infidelity = 1.0 - overlap * overlap;
    r.infidelity_abs = 1.0 - overlap;
  } else {
    r.infidelity = r.infidelity_abs = std::numeric_limits<double>::quiet_NaN();
  }
  r.grad_norm = sys.C.norm();
  r.lambda_opt = lambda;
  return r;
}

}  // namespace

QiteStep qite_step(const Problem& problem, const QiteConfig& config, const RVector& theta, int step) {
  const QiteSystem sys = assemble_system(problem, config, theta, step);
  const LCurveCorner corner =
      l_curve_corner(sys.A, sys.C, config.lambda_min, config.lambda_max, config.corner_termination);
  QiteStep out;
  out.theta_dot = TikhonovSystem(sys.A, sys.C).solve(corner.lambda);
  if (config.freeze_global_phase)
    if (const auto g = problem.circuit.global_phase_index()) out.theta_dot[*g] = 0.0;
  out.theta = theta + config.dt * out.theta_dot;
  out.record = make_record(problem, config, sys, theta, step, corner.lambda);
  return out;
}

QiteTrajectory run_qite(const Problem& problem, const QiteConfig& config) {
  config.validate();
  QiteTrajectory traj;
  traj.e_exact = problem.e_exact;
  RVector theta = RVector::Zero(problem.circuit.n_parameters());
  const double energy_cap = kDivergenceFactor * std::max(std::abs(problem.e_exact), 1.0);
  for (int step = 0;; ++step) {
    QiteStep next = qite_step(problem, config, theta, step);
    traj.steps.push_back(next.record);
    const StepRecord& r = traj.steps.back();
    if (!std::isfinite(r.energy) || !next.theta_dot.allFinite()) {
      traj.status = RunStatus::diverged;
      traj.diagnostic = "non-finite energy or parameter update at step " + std::to_string(step);
      break;
    }
    if (std::abs(r.energy) > energy_cap) {
      traj.status = RunStatus::diverged;
      traj.diagnostic = "energy magnitude exceeded 1e3 times the exact energy at step " + std::to_string(step);
      break;
    }
    if (next.theta_dot.cwiseAbs().maxCoeff() > kDivergenceFactor) {
      traj.status = RunStatus::diverged;
      traj.diagnostic = "parameter velocity exceeded 1e3 at step " + std::to_string(step);
      break;
    }
    if (r.grad_norm < config.grad_norm_threshold) {
      traj.status = RunStatus::converged;
      break;
    }
    if (step >= config.max_steps) {
      traj.status = RunStatus::max_steps;
      break;
    }
    theta = std::move(next.theta);
  }
  return traj;
}

QiteTrajectory run_qite(const QiteConfig& config) {
  config.validate();
  return run_qite(build_problem(config.hamiltonian, config.ansatz, config.initial_state, config.global_phase), config);
}

}  // namespace tchub
