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

#include "mrac/controller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mrac/errors.hpp"

namespace mrac {

TimedHistory::TimedHistory(std::size_t depth)
    : buf_(std::max<std::size_t>(depth, 1), 0.0) {}

void TimedHistory::reset(long latest, std::span<const double> recent_first) {
  std::fill(buf_.begin(), buf_.end(), 0.0);
  latest_ = latest;
  head_ = 0;
  // Slot (head_ - k) mod depth holds latest - k.
  for (std::size_t k = 0; k < std::min(recent_first.size(), buf_.size()); ++k) {
    buf_[(buf_.size() - k) % buf_.size()] = recent_first[k];
  }
}

void TimedHistory::push(double v) {
  head_ = (head_ + 1) % buf_.size();
  buf_[head_] = v;
  ++latest_;
}

double TimedHistory::at(long t) const {
  const long lag = latest_ - t;
  if (lag < 0 || lag >= static_cast<long>(buf_.size())) {
    throw std::out_of_range("history holds [" +
                            std::to_string(latest_ - static_cast<long>(buf_.size()) + 1) +
                            ", " + std::to_string(latest_) + "], asked for " +
                            std::to_string(t));
  }
  const std::size_t n = buf_.size();
  return buf_[(head_ + n - static_cast<std::size_t>(lag)) % n];
}

Regressor::Regressor(const Dims& dims)
    : dims_(dims),
      y_(static_cast<std::size_t>(std::max(dims.n + dims.d, dims.n_ref + 1))),
      u_(static_cast<std::size_t>(dims.m + 2 * dims.d - 1)) {}

std::vector<double> Regressor::phi(long t) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(dims_.p()));
  for (int i = 0; i < dims_.n; ++i) out.push_back(y_.at(t - i));
  for (int i = 0; i < dims_.m + dims_.d; ++i) out.push_back(u_.at(t - i));
  return out;
}

double ybar(std::span<const double> recent_first, const PolyZ& l) {
  const std::size_t n_ref = l.degree();
  if (recent_first.size() < n_ref + 1) {
    throw DimensionMismatch("ybar: history shorter than n' + 1");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j <= n_ref; ++j) acc += l[j] * recent_first[j];
  return acc;
}

ControllerState::ControllerState(const Dims& dims, ReferenceModel ref,
                                 int gain_sign)
    : regressor_(dims),
      ref_(std::move(ref)),
      gain_sign_(gain_sign),
      r_(static_cast<std::size_t>(dims.n_ref + 1)),
      y_star_(static_cast<std::size_t>(dims.n_ref + 1)),
      ybar_star_(static_cast<std::size_t>(dims.d + 1)) {
  if (gain_sign != 1 && gain_sign != -1) {
    throw DimensionMismatch("gain sign must be +1 or -1");
  }
}

double ControllerState::ybar_at(long t) const {
  double acc = 0.0;
  const auto n_ref = static_cast<long>(ref_.l.degree());
  for (long j = 0; j <= n_ref; ++j) {
    const double l = ref_.l[static_cast<std::size_t>(j)];
    if (l != 0.0) acc += l * regressor_.y().at(t - j);
  }
  return acc;
}

InitialState init_from_x0(std::span<const double> x0, const Dims& dims,
                          const ReferenceModel& ref, int gain_sign, long t0) {
  if (static_cast<int>(x0.size()) != dims.x0_size()) {
    throw DimensionMismatch("x0 must have (n+d-1) + (m+2d-2) = " +
                            std::to_string(dims.x0_size()) +
                            " entries, got " + std::to_string(x0.size()));
  }
  const auto ny = static_cast<std::size_t>(dims.n + dims.d - 1);
  const auto y_part = x0.subspan(0, ny);
  const auto u_part = x0.subspan(ny);

  ControllerState ctrl(dims, ref, gain_sign);
  ctrl.regressor().y().reset(t0, y_part);
  ctrl.regressor().u().reset(t0 - 1, u_part);
  const std::vector<double> zeros;
  ctrl.r_history().reset(t0 - 1, zeros);
  ctrl.y_star_history().reset(t0 - 1, zeros);
  // ybar*(t) for t < t0 + d only involves r before t0, hence zero.
  ctrl.ybar_star_history().reset(t0 + dims.d - 1, zeros);

  PlantState plant;
  plant.y.assign(y_part.begin(), y_part.begin() + dims.n);
  plant.u.assign(static_cast<std::size_t>(dims.m + dims.d), 0.0);
  for (std::size_t k = 0; k < plant.u.size() && k < u_part.size(); ++k) {
    plant.u[k] = u_part[k];
  }
  return InitialState{std::move(ctrl), std::move(plant)};
}

ReferenceOutputs reference_outputs(ControllerState& state, long t, double r_t) {
  const ReferenceModel& ref = state.reference();
  auto& r = state.r_history();
  if (r.latest() != t - 1) {
    throw std::logic_error("reference_outputs called out of order");
  }
  r.push(r_t);

  const auto n_ref = static_cast<long>(ref.l.degree());
  const long d = ref.d;
  double y_star = 0.0;
  for (long j = 1; j <= n_ref; ++j) {
    y_star -= ref.l[static_cast<std::size_t>(j)] * state.y_star_history().at(t - j);
  }
  double ybar_future = 0.0;
  for (std::size_t i = 0; i < ref.h.size(); ++i) {
    const long k = static_cast<long>(i);
    y_star += ref.h[i] * r.at(t - d - k);
    ybar_future += ref.h[i] * r.at(t - k);
  }
  state.y_star_history().push(y_star);
  state.ybar_star_history().push(ybar_future);
  return {y_star, ybar_future};
}

double control_input(ControllerState& state, std::span<const double> theta_hat,
                     long t) {
  const Dims& dims = state.dims();
  if (static_cast<int>(theta_hat.size()) != dims.p()) {
    throw DimensionMismatch("control_input: estimate has wrong dimension");
  }
  const double beta0 = theta_hat[static_cast<std::size_t>(dims.gain_index())];
  if (!(beta0 * state.gain_sign() > 0.0)) {
    throw CorruptedState("estimated beta_0 = " + std::to_string(beta0) +
                         " has the wrong sign");
  }
  auto& reg = state.regressor();
  double acc = state.ybar_star_at(t + dims.d);
  for (int i = 0; i < dims.n; ++i) {
    acc -= theta_hat[static_cast<std::size_t>(i)] * reg.y().at(t - i);
  }
  for (int i = 1; i < dims.m + dims.d; ++i) {
    acc -= theta_hat[static_cast<std::size_t>(dims.n + i)] * reg.u().at(t - i);
  }
  const double u = acc / beta0;
  reg.u().push(u);
  return u;
}

}  // namespace mrac
