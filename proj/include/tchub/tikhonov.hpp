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

#include "tchub/state.hpp"

namespace tchub {

/// argmin_x ||C + A x||^2 + lambda ||x||^2 through SVD filter factors.
RVector tikhonov_solve(const RMatrix& A, const RVector& C, double lambda);

/// Reusable factorization for many lambda values on the same system.
class TikhonovSystem {
 public:
  TikhonovSystem(const RMatrix& A, const RVector& C);

  RVector solve(double lambda) const;
  double residual_norm(double lambda) const;
  double solution_norm(double lambda) const;
  /// Signed curvature of (ln residual, ln solution norm) parametrized by ln lambda.
  double curvature(double lambda) const;
  /// True when the residual norm does not depend on lambda.
  bool degenerate() const;

 private:
  RMatrix v_;
  RVector sigma_, beta_;
  double perp_sq_ = 0.0;
};

struct LCurveCorner {
  double lambda = 0.0;
  double curvature = 0.0;
};

/// Maximum-curvature point: 31 log-spaced samples, then golden-section
/// refinement in log10(lambda) down to `termination`.
LCurveCorner l_curve_corner(const RMatrix& A, const RVector& C, double lambda_min = 1e-3, double lambda_max = 1.0,
                            double termination = 1e-8);

}  // namespace tchub
