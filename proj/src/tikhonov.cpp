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
#include "tchub/tikhonov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/SVD>

namespace tchub {

TikhonovSystem::TikhonovSystem(const RMatrix& A, const RVector& C) {
  if (A.rows() != A.cols() || A.rows() != C.size()) throw std::invalid_argument("tikhonov: A must be square and match C");
  Eigen::BDCSVD<RMatrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  v_ = svd.matrixV();
  sigma_ = svd.singularValues();
  beta_ = svd.matrixU().transpose() * C;
  perp_sq_ = std::max(0.0, C.squaredNorm() - beta_.squaredNorm());
}

RVector TikhonovSystem::solve(double lambda) const {
  if (lambda < 0) throw std::invalid_argument("tikhonov: lambda must be non-negative");
  RVector coef(sigma_.size());
  for (Eigen::Index k = 0; k < sigma_.size(); ++k) {
    const double d = sigma_[k] * sigma_[k] + lambda;
    coef[k] = d > 0 ? -sigma_[k] * beta_[k] / d : 0.0;
  }
  return v_ * coef;
}

double TikhonovSystem::residual_norm(double lambda) const {
  double r = perp_sq_;
  for (Eigen::Index k = 0; k < sigma_.size(); ++k) {
    const double s = sigma_[k] * sigma_[k];
    const double f = s + lambda > 0 ? lambda / (s + lambda) : 1.0;
    r += f * f * beta_[k] * beta_[k];
  }
  return std::sqrt(r);
}

double TikhonovSystem::solution_norm(double lambda) const { return solve(lambda).norm(); }

bool TikhonovSystem::degenerate() const {
  double atc = 0, scale = 0;
  for (Eigen::Index k = 0; k < sigma_.size(); ++k) {
    atc += std::pow(sigma_[k] * beta_[k], 2);
    scale = std::max(scale, sigma_[k]);
  }
  const double c_norm = std::sqrt(perp_sq_ + beta_.squaredNorm());
  return std::sqrt(atc) <= 1e-14 * std::max(1.0, scale * c_norm);
}

double TikhonovSystem::curvature(double lambda) const {
  // Squared norms and their first two lambda derivatives.
  double eta = 0, eta1 = 0, eta2 = 0, rho = perp_sq_, rho1 = 0, rho2 = 0;
  for (Eigen::Index k = 0; k < sigma_.size(); ++k) {
    const double s = sigma_[k] * sigma_[k], b2 = beta_[k] * beta_[k], d = s + lambda;
    eta += s * b2 / (d * d);
    eta1 += -2.0 * s * b2 / (d * d * d);
    eta2 += 6.0 * s * b2 / (d * d * d * d);
    rho += lambda * lambda * b2 / (d * d);
    rho1 += 2.0 * lambda * s * b2 / (d * d * d);
    rho2 += 2.0 * s * b2 * (s - 2.0 * lambda) / (d * d * d * d);
  }
  // x = ln(rho)/2 and y = ln(eta)/2 as functions of t = ln(lambda).
  auto first = [&](double a, double a1) { return lambda * a1 / (2.0 * a); };
  auto second = [&](double a, double a1, double a2) {
    return lambda * a1 / (2.0 * a) + lambda * lambda * a2 / (2.0 * a) - lambda * lambda * a1 * a1 / (2.0 * a * a);
  };
  const double x1 = first(rho, rho1), x2 = second(rho, rho1, rho2);
  const double y1 = first(eta, eta1), y2 = second(eta, eta1, eta2);
  const double speed = x1 * x1 + y1 * y1;
  if (!(speed > 0) || !std::isfinite(speed)) return 0.0;
  return (x1 * y2 - x2 * y1) / std::pow(speed, 1.5);
}

RVector tikhonov_solve(const RMatrix& A, const RVector& C, double lambda) {
  if (lambda < 0) throw std::invalid_argument("tikhonov: lambda must be non-negative");
  return TikhonovSystem(A, C).solve(lambda);
}

LCurveCorner l_curve_corner(const RMatrix& A, const RVector& C, double lambda_min, double lambda_max,
                            double termination) {
  if (!(lambda_min > 0) || !(lambda_max > lambda_min)) throw std::invalid_argument("l_curve_corner: invalid lambda range");
  if (!(termination > 0)) throw std::invalid_argument("l_curve_corner: termination must be positive");
  const TikhonovSystem sys(A, C);
  if (sys.degenerate()) return {lambda_min, 0.0};

  const double lo = std::log10(lambda_min), hi = std::log10(lambda_max);
  constexpr int kSamples = 31;
  auto kappa = [&](double u) {
    const double k = sys.curvature(std::pow(10.0, u));
    return std::isfinite(k) ? k : -std::numeric_limits<double>::infinity();
  };
  int best = 0;
  double best_k = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < kSamples; ++s) {
    const double k = kappa(lo + (hi - lo) * s / (kSamples - 1));
    if (k > best_k) {
      best_k = k;
      best = s;
    }
  }
  if (!std::isfinite(best_k)) return {lambda_min, 0.0};

  double a = lo + (hi - lo) * std::max(best - 1, 0) / (kSamples - 1);
  double b = lo + (hi - lo) * std::min(best + 1, kSamples - 1) / (kSamples - 1);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double kc = kappa(c), kd = kappa(d);
  while (b - a > termination) {
    if (kc >= kd) {
      b = d;
      d = c;
      kd = kc;
      c = b - ratio * (b - a);
      kc = kappa(c);
    } else {
      a = c;
      c = d;
      kc = kd;
      d = a + ratio * (b - a);
      kd = kappa(d);
    }
  }
  double u = 0.5 * (a + b);
  double ku = kappa(u);
  // The sampled maximum may sit on the boundary of the range.
  const double u_best = lo + (hi - lo) * best / (kSamples - 1);
  if (best_k > ku) {
    u = u_best;
    ku = best_k;
  }
  return {std::clamp(std::pow(10.0, u), lambda_min, lambda_max), ku};
}

}  // namespace tchub
