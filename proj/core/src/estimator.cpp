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

#include "mrac/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "mrac/errors.hpp"

namespace mrac {

namespace {

double max_abs(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace

double stable_norm(std::span<const double> x) {
  const double s = max_abs(x);
  if (s == 0.0 || !std::isfinite(s)) return s;
  double sum = 0.0;
  for (double v : x) {
    const double r = v / s;
    sum += r * r;
  }
  return s * std::sqrt(sum);
}

double prediction_error(double ybar_next, std::span<const double> phi_lag,
                        std::span<const double> theta_hat) {
  if (phi_lag.size() != theta_hat.size()) {
    throw DimensionMismatch("prediction_error: regressor has " +
                            std::to_string(phi_lag.size()) +
                            " entries, estimate has " +
                            std::to_string(theta_hat.size()));
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < phi_lag.size(); ++i) dot += phi_lag[i] * theta_hat[i];
  return ybar_next - dot;
}

int deadzone_flag(double e_next, std::span<const double> phi_lag,
                  double box_norm, double delta) {
  const double norm = stable_norm(phi_lag);
  if (norm == 0.0) return 0;
  if (std::isinf(delta)) return 1;
  return std::abs(e_next) < (2.0 * box_norm + delta) * norm ? 1 : 0;
}

std::vector<double> project_box(std::span<const double> x, const ParamBox& box) {
  if (x.size() != box.dim()) {
    throw DimensionMismatch("project_box: vector and box dimensions differ");
  }
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::clamp(out[i], box.lo()[i], box.hi()[i]);
  }
  return out;
}

Estimator::Estimator(std::vector<double> theta0, ParamBox box, double delta)
    : theta_hat_(std::move(theta0)),
      box_(std::move(box)),
      delta_(delta),
      box_norm_(mrac::box_norm(box_)) {
  if (theta_hat_.size() != box_.dim()) {
    throw DimensionMismatch("initial estimate and box dimensions differ");
  }
  if (!(delta_ > 0.0)) throw DimensionMismatch("delta must be positive");
  if (!box_.contains(theta_hat_)) {
    throw AssumptionViolated("initial estimate lies outside S");
  }
}

StepRecord Estimator::update(std::span<const double> phi_lag, double ybar_next) {
  StepRecord rec;
  rec.e_next = prediction_error(ybar_next, phi_lag, theta_hat_);
  rec.rho = deadzone_flag(rec.e_next, phi_lag, box_norm_, delta_);
  rec.nu.assign(theta_hat_.size(), 0.0);
  if (rec.rho == 1) {
    // phi e / ||phi||^2 evaluated on phi / max|phi_i| to stay in range.
    const double s = max_abs(phi_lag);
    double sq = 0.0;
    for (double v : phi_lag) sq += (v / s) * (v / s);
    const double gain = (rec.e_next / s) / sq;
    for (std::size_t i = 0; i < rec.nu.size(); ++i) {
      rec.nu[i] = (phi_lag[i] / s) * gain;
    }
  }
  rec.theta_check = theta_hat_;
  for (std::size_t i = 0; i < rec.nu.size(); ++i) rec.theta_check[i] += rec.nu[i];
  theta_hat_ = rec.rho == 1 ? project_box(rec.theta_check, box_) : theta_hat_;
  return rec;
}

}  // namespace mrac
