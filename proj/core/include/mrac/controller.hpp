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

#include <span>
#include <vector>

#include "mrac/plant_sim.hpp"
#include "mrac/system.hpp"

namespace mrac {

/// Fixed-depth ring buffer addressed by absolute time.
class TimedHistory {
 public:
  explicit TimedHistory(std::size_t depth = 1);

  /// Sets the newest sample to time `latest`; `recent_first[k]` is the value
  /// at latest - k. Missing older entries are zero.
  void reset(long latest, std::span<const double> recent_first);
  void push(double v);

  /// Throws std::out_of_range outside the retained window.
  double at(long t) const;
  long latest() const { return latest_; }
  std::size_t depth() const { return buf_.size(); }

 private:
  std::vector<double> buf_;
  std::size_t head_ = 0;  // slot of `latest_`
  long latest_ = -1;
};

/// phi(t) = (y(t), ..., y(t-n+1), u(t), ..., u(t-m-d+1)).
class Regressor {
 public:
  explicit Regressor(const Dims& dims);

  const Dims& dims() const { return dims_; }
  TimedHistory& y() { return y_; }
  TimedHistory& u() { return u_; }
  const TimedHistory& y() const { return y_; }
  const TimedHistory& u() const { return u_; }

  std::vector<double> phi(long t) const;

 private:
  Dims dims_;
  TimedHistory y_;  // depth max(n + d, n' + 1)
  TimedHistory u_;  // depth m + 2d - 1
};

/// ybar(t) = y(t) + sum_{j=1}^{n'} l_j y(t-j); `recent_first[0]` is y(t).
double ybar(std::span<const double> recent_first, const PolyZ& l);

struct ReferenceOutputs {
  double y_star = 0.0;             ///< y*(t)
  double ybar_star_future = 0.0;   ///< ybar*(t+d) = sum h_i r(t-i)
};

/// Certainty-equivalence MRAC state: regressor, reference and reference-
/// model histories. Reference values before t0 are zero.
class ControllerState {
 public:
  ControllerState(const Dims& dims, ReferenceModel ref, int gain_sign);

  const Dims& dims() const { return regressor_.dims(); }
  const ReferenceModel& reference() const { return ref_; }
  int gain_sign() const { return gain_sign_; }
  Regressor& regressor() { return regressor_; }
  const Regressor& regressor() const { return regressor_; }

  /// Appends y(t+1) after the plant step.
  void observe(double y_next) { regressor_.y().push(y_next); }

  double ybar_at(long t) const;
  double ybar_star_at(long t) const { return ybar_star_.at(t); }
  double y_star_at(long t) const { return y_star_.at(t); }

  /// Used by reference_outputs / init.
  TimedHistory& r_history() { return r_; }
  TimedHistory& y_star_history() { return y_star_; }
  TimedHistory& ybar_star_history() { return ybar_star_; }
  const TimedHistory& r_history() const { return r_; }

 private:
  Regressor regressor_;
  ReferenceModel ref_;
  int gain_sign_;
  TimedHistory r_;
  TimedHistory y_star_;
  TimedHistory ybar_star_;
};

struct InitialState {
  ControllerState controller;
  PlantState plant;
};

/// Loads x0 = (y(t0), ..., y(t0-n-d+2), u(t0-1), ..., u(t0-m-2d+2)).
/// u(t0) is not part of x0: the control law produces it at the first step.
InitialState init_from_x0(std::span<const double> x0, const Dims& dims,
                          const ReferenceModel& ref, int gain_sign,
                          long t0 = 0);

/// Pushes r(t), then advances y*(t) = -sum l_j y*(t-j) + sum h_i r(t-d-i)
/// and ybar*(t+d) = sum h_i r(t-i).
ReferenceOutputs reference_outputs(ControllerState& state, long t, double r_t);

/// Solves phi(t)' theta_hat = ybar*(t+d) for u(t) and records it.
/// Requires y(t) observed, u up to t-1, and reference_outputs(t) done.
double control_input(ControllerState& state, std::span<const double> theta_hat,
                     long t);

}  // namespace mrac
