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

#include <string>
#include <vector>

#include "tchub/experiment.hpp"
#include "tchub/tikhonov.hpp"

namespace tchub {

/// How C is evaluated in state-vector mode.
enum class GradientEvaluation { direct, ancilla };

struct QiteConfig {
  HamiltonianSpec hamiltonian;
  AnsatzSpec ansatz;
  std::string initial_state = "auto";
  double dt = 0.1;
  int max_steps = 300;
  double grad_norm_threshold = 1e-5;
  double lambda_min = 1e-3;
  double lambda_max = 1.0;
  double corner_termination = 1e-8;
  EvalMode mode = EvalMode::sv;
  ShotSettings shots;
  DerivativeMethod derivatives = DerivativeMethod::analytic;
  double fd_step = kDefaultFdStep;
  GradientEvaluation gradient = GradientEvaluation::direct;
  bool global_phase = true;
  /// Freezes the global-phase parameter at zero (its row and column are still assembled).
  bool freeze_global_phase = false;

  void validate() const;
};

struct StepRecord {
  int step = 0;
  double tau = 0.0;
  RVector theta;
  double energy = 0.0;
  double abs_err = 0.0;
  /// 1 - |<Phi|Phi_exact>|^2; NaN in shots mode.
  double infidelity = 0.0;
  /// 1 - |<Phi|Phi_exact>|; NaN in shots mode.
  double infidelity_abs = 0.0;
  double grad_norm = 0.0;
  double lambda_opt = 0.0;
  double energy_std_error = 0.0;
};

enum class RunStatus { converged, max_steps, diverged };

std::string to_string(RunStatus s);

struct QiteTrajectory {
  std::vector<StepRecord> steps;
  RunStatus status = RunStatus::max_steps;
  std::string diagnostic;
  double e_exact = 0.0;

  const StepRecord& final() const { return steps.back(); }
};

/// A(theta) and C(theta) including the global-phase row and column, plus the energy.
struct QiteSystem {
  RMatrix A;
  RVector C;
  double energy = 0.0;
  double energy_std_error = 0.0;
  StateVector state;
};

QiteSystem assemble_system(const Problem& problem, const QiteConfig& config, const RVector& theta, int step = 0);

struct QiteStep {
  RVector theta;
  RVector theta_dot;
  StepRecord record;
};

/// One Euler step theta + dt * theta_dot with A theta_dot = -C regularized at the L-curve corner.
QiteStep qite_step(const Problem& problem, const QiteConfig& config, const RVector& theta, int step = 0);

QiteTrajectory run_qite(const Problem& problem, const QiteConfig& config);
QiteTrajectory run_qite(const QiteConfig& config);

struct VqeOptions {
  double grad_tolerance = 1e-7;
  int max_iterations = 2000;
  int memory = 10;
};

struct VqeResult {
  RVector theta;
  double energy = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// L-BFGS on Re<Phi|H|Phi> with analytic gradients; rejects non-Hermitian operators.
VqeResult run_vqe(const Problem& problem, const VqeOptions& options = {});
VqeResult run_vqe(const QiteConfig& config, const VqeOptions& options = {});

}  // namespace tchub
