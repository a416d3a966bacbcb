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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "mrac/poly.hpp"
#include "mrac/system.hpp"

namespace mrac {

// ---------------------------------------------------------------------------
// Exogenous signals r(t), w(t)
// ---------------------------------------------------------------------------

namespace signals {

struct Zero {
  friend bool operator==(const Zero&, const Zero&) = default;
};

struct Constant {
  double value = 0.0;
  friend bool operator==(const Constant&, const Constant&) = default;
};

/// +amplitude on [kP, kP + P/2), -amplitude on [kP + P/2, (k+1)P), where
/// k counts from t = phase. Before t = phase the signal holds its first
/// value.
struct SquareWave {
  long period = 2;
  double amplitude = 1.0;
  long phase = 0;
  friend bool operator==(const SquareWave&, const SquareWave&) = default;
};

/// amplitude * cos(rate * t + phase)
struct Sinusoid {
  double amplitude = 1.0;
  double rate = 1.0;
  double phase = 0.0;
  friend bool operator==(const Sinusoid&, const Sinusoid&) = default;
};

/// amplitude * cos(rate * t + phase) for start < t <= end, else 0.
struct WindowedSinusoid {
  long start = 0;
  long end = 0;
  double amplitude = 1.0;
  double rate = 1.0;
  double phase = 0.0;
  friend bool operator==(const WindowedSinusoid&, const WindowedSinusoid&) =
      default;
};

/// values[t - start] on [start, start + size), else 0.
struct Table {
  long start = 0;
  std::vector<double> values;
  friend bool operator==(const Table&, const Table&) = default;
};

/// i.i.d. uniform on [-amplitude, amplitude] for t >= 0 (0 before), drawn
/// from std::mt19937_64 seeded with `seed`. Without a seed the harness
/// derives one from the run seed.
struct WhiteNoise {
  double amplitude = 0.0;
  std::optional<std::uint64_t> seed;
  friend bool operator==(const WhiteNoise&, const WhiteNoise&) = default;
};

}  // namespace signals

using SignalSpec =
    std::variant<signals::Zero, signals::Constant, signals::SquareWave,
                 signals::Sinusoid, signals::WindowedSinusoid, signals::Table,
                 signals::WhiteNoise>;

std::string_view signal_kind(const SignalSpec& spec);

/// Evaluable signal. White noise is drawn once for t in [0, horizon]; a
/// sample past the horizon regenerates the stream up to t, so values never
/// depend on the horizon chosen.
class Signal {
 public:
  explicit Signal(SignalSpec spec, long horizon = 0);

  double operator()(long t) const;
  const SignalSpec& spec() const { return spec_; }

  /// sup |s(t)| over [t_begin, t_end].
  double sup_norm(long t_begin, long t_end) const;

 private:
  SignalSpec spec_;
  std::vector<double> noise_;
};

/// Deterministic sample of `spec` at t.
double signal_eval(const SignalSpec& spec, long t);

// ---------------------------------------------------------------------------
// Time-varying plant coefficients
// ---------------------------------------------------------------------------

/// offset + amplitude * cos(rate * t + phase)  (sin when `sine`).
struct Harmonic {
  double offset = 0.0;
  double amplitude = 0.0;
  double rate = 0.0;
  double phase = 0.0;
  bool sine = false;

  double at(long t) const;
  friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

namespace schedules {

struct Constant {
  PlantParams params;
  friend bool operator==(const Constant&, const Constant&) = default;
};

struct Sinusoidal {
  std::vector<Harmonic> a;
  std::vector<Harmonic> b;
  int d = 1;
  friend bool operator==(const Sinusoidal&, const Sinusoidal&) = default;
};

/// params[k] applies on [starts[k], starts[k+1]); the first segment also
/// covers everything before starts[0].
struct Piecewise {
  std::vector<long> starts;
  std::vector<PlantParams> params;
  friend bool operator==(const Piecewise&, const Piecewise&) = default;
};

/// params[t - start], clamped to the first/last entry outside the table.
struct Table {
  long start = 0;
  std::vector<PlantParams> params;
  friend bool operator==(const Table&, const Table&) = default;
};

}  // namespace schedules

class CoefficientSchedule {
 public:
  using Variant = std::variant<schedules::Constant, schedules::Sinusoidal,
                               schedules::Piecewise, schedules::Table>;

  CoefficientSchedule() = default;
  CoefficientSchedule(Variant v);  // NOLINT(google-explicit-constructor)
  CoefficientSchedule(PlantParams constant);  // NOLINT

  const Variant& variant() const { return v_; }
  std::string_view mode() const;
  bool is_constant() const;

  PlantParams at(long t) const;

  int n() const { return n_; }
  int m() const { return m_; }
  int d() const { return d_; }

  /// Every instant of [t_begin, t_end] must yield a valid plant with the
  /// same dimensions and the same b_0 sign. Throws AssumptionViolated.
  void validate(long t_begin, long t_end) const;

  friend bool operator==(const CoefficientSchedule& x,
                         const CoefficientSchedule& y) {
    return x.v_ == y.v_;
  }

 private:
  Variant v_;
  int n_ = 0;
  int m_ = 0;
  int d_ = 1;
};

// ---------------------------------------------------------------------------
// Plant simulation
// ---------------------------------------------------------------------------

/// Output history y(t), ..., y(t-n+1) and input history u(t-1), ...,
/// u(t-m-d), most recent first.
struct PlantState {
  std::vector<double> y;
  std::vector<double> u;

  /// Shifts in u(t) and y(t+1).
  void advance(double u_t, double y_next);
};

/// y(t+1) = -sum a_i(t) y(t+1-i) + sum b_i(t) u(t+1-d-i) + w(t+1), with the
/// coefficients sampled at emission time t. Does not modify `state`.
double plant_step(const PlantState& state, const CoefficientSchedule& schedule,
                  long t, double u_t, double w_next);

/// wbar(t) = sum_{i<d} f_i w(t+d-i) for t in [t0, t0+T]; d = F.size().
std::vector<double> wbar_sequence(const PolyZ& f, const Signal& w, long t0,
                                  long horizon);

}  // namespace mrac
