/******************************************************************************
 * Copyright 2026 The mrac-lab Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#pragma once

#include <limits>
#include <span>
#include <vector>

#include "mrac/system.hpp"

namespace mrac {

inline constexpr double kInfiniteDelta = std::numeric_limits<double>::infinity();

/// Euclidean norm, scaled so it neither underflows nor overflows.
double stable_norm(std::span<const double> x);

/// e(t+1) = ybar(t+1) - phi(t-d+1)' theta_hat(t).
double prediction_error(double ybar_next, std::span<const double> phi_lag,
                        std::span<const double> theta_hat);

/// rho(t) = 1 iff |e(t+1)| < (2 ||S|| + delta) ||phi(t-d+1)||, strictly.
/// With delta = inf the threshold is infinite for phi != 0 and zero for
/// phi == 0 (inf * 0 = 0), so phi == 0 always switches the update off.
int deadzone_flag(double e_next, std::span<const double> phi_lag,
                  double box_norm, double delta);

/// Euclidean projection onto a hyperrectangle (coordinate-wise clamp).
std::vector<double> project_box(std::span<const double> x, const ParamBox& box);

struct StepRecord {
  double e_next = 0.0;
  int rho = 0;
  std::vector<double> nu;           ///< applied increment before projection
  std::vector<double> theta_check;  ///< theta_hat + nu
};

/// Projection-algorithm estimator gated by a deadzone, projected onto S.
class Estimator {
 public:
  Estimator(std::vector<double> theta0, ParamBox box,
            double delta = kInfiniteDelta);

  const std::vector<double>& theta_hat() const { return theta_hat_; }
  const ParamBox& box() const { return box_; }
  double delta() const { return delta_; }
  double box_norm() const { return box_norm_; }

  /// One update from regressor phi(t-d+1) and ybar(t+1). The step is the
  /// ideal phi e / ||phi||^2 with no additive constant in the denominator.
  StepRecord update(std::span<const double> phi_lag, double ybar_next);

  /// Overwrites the estimate (tests and negative controls only).
  void set_theta_hat(std::vector<double> theta) { theta_hat_ = std::move(theta); }

 private:
  std::vector<double> theta_hat_;
  ParamBox box_;
  double delta_;
  double box_norm_;
};

}  // namespace mrac
