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

#include "mrac/plant_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mrac/errors.hpp"

namespace mrac {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<double> draw_noise(const signals::WhiteNoise& spec, long last) {
  std::vector<double> out;
  if (last < 0) return out;
  out.reserve(static_cast<std::size_t>(last) + 1);
  std::mt19937_64 rng(spec.seed.value_or(0));
  std::uniform_real_distribution<double> dist(-spec.amplitude, spec.amplitude);
  for (long t = 0; t <= last; ++t) out.push_back(dist(rng));
  return out;
}

}  // namespace

std::string_view signal_kind(const SignalSpec& spec) {
  return std::visit(
      Overloaded{
          [](const signals::Zero&) { return std::string_view("zero"); },
          [](const signals::Constant&) { return std::string_view("constant"); },
          [](const signals::SquareWave&) {
            return std::string_view("square_wave");
          },
          [](const signals::Sinusoid&) { return std::string_view("sinusoid"); },
          [](const signals::WindowedSinusoid&) {
            return std::string_view("windowed_sinusoid");
          },
          [](const signals::Table&) { return std::string_view("table"); },
          [](const signals::WhiteNoise&) {
            return std::string_view("white_noise");
          },
      },
      spec);
}

Signal::Signal(SignalSpec spec, long horizon) : spec_(std::move(spec)) {
  if (const auto* noise = std::get_if<signals::WhiteNoise>(&spec_)) {
    noise_ = draw_noise(*noise, horizon);
  }
}

double Signal::operator()(long t) const {
  return std::visit(
      Overloaded{
          [](const signals::Zero&) { return 0.0; },
          [](const signals::Constant& c) { return c.value; },
          [t](const signals::SquareWave& s) {
            const long k = std::max(t - s.phase, 0L);
            const long pos = k % s.period;
            return 2 * pos < s.period ? s.amplitude : -s.amplitude;
          },
          [t](const signals::Sinusoid& s) {
            return s.amplitude *
                   std::cos(s.rate * static_cast<double>(t) + s.phase);
          },
          [t](const signals::WindowedSinusoid& s) {
            if (t <= s.start || t > s.end) return 0.0;
            return s.amplitude *
                   std::cos(s.rate * static_cast<double>(t) + s.phase);
          },
          [t](const signals::Table& s) {
            const long k = t - s.start;
            if (k < 0 || k >= static_cast<long>(s.values.size())) return 0.0;
            return s.values[static_cast<std::size_t>(k)];
          },
          [t, this](const signals::WhiteNoise& s) {
            if (t < 0) return 0.0;
            if (t < static_cast<long>(noise_.size())) {
              return noise_[static_cast<std::size_t>(t)];
            }
            return draw_noise(s, t).back();
          },
      },
      spec_);
}

double Signal::sup_norm(long t_begin, long t_end) const {
  double sup = 0.0;
  for (long t = t_begin; t <= t_end; ++t) sup = std::max(sup, std::abs((*this)(t)));
  return sup;
}

double signal_eval(const SignalSpec& spec, long t) {
  return Signal(spec, std::max(t, 0L))(t);
}

double Harmonic::at(long t) const {
  const double arg = rate * static_cast<double>(t) + phase;
  return offset + amplitude * (sine ? std::sin(arg) : std::cos(arg));
}

CoefficientSchedule::CoefficientSchedule(PlantParams constant)
    : CoefficientSchedule(Variant{schedules::Constant{std::move(constant)}}) {}

CoefficientSchedule::CoefficientSchedule(Variant v) : v_(std::move(v)) {
  auto shape_of = [this](const PlantParams& p) {
    n_ = p.n();
    m_ = p.m();
    d_ = p.d;
  };
  std::visit(Overloaded{
                 [&](const schedules::Constant& s) { shape_of(s.params); },
                 [&](const schedules::Sinusoidal& s) {
                   n_ = static_cast<int>(s.a.size());
                   m_ = static_cast<int>(s.b.size()) - 1;
                   d_ = s.d;
                 },
                 [&](const schedules::Piecewise& s) {
                   if (s.params.empty() || s.params.size() != s.starts.size()) {
                     throw ConfigError("plant.schedule",
                                       "piecewise schedule needs one start per "
                                       "segment and at least one segment");
                   }
                   if (!std::is_sorted(s.starts.begin(), s.starts.end())) {
                     throw ConfigError("plant.schedule",
                                       "piecewise starts must be sorted");
                   }
                   shape_of(s.params.front());
                 },
                 [&](const schedules::Table& s) {
                   if (s.params.empty()) {
                     throw ConfigError("plant.schedule",
                                       "table schedule is empty");
                   }
                   shape_of(s.params.front());
                 },
             },
             v_);
  if (m_ < 0) throw AssumptionViolated("plant needs at least b_0");
}

std::string_view CoefficientSchedule::mode() const {
  static constexpr std::string_view kNames[] = {"constant", "sinusoidal",
                                                "piecewise", "table"};
  return kNames[v_.index()];
}

bool CoefficientSchedule::is_constant() const {
  return std::holds_alternative<schedules::Constant>(v_);
}

PlantParams CoefficientSchedule::at(long t) const {
  return std::visit(
      Overloaded{
          [](const schedules::Constant& s) { return s.params; },
          [t](const schedules::Sinusoidal& s) {
            PlantParams p;
            p.d = s.d;
            for (const auto& h : s.a) p.a.push_back(h.at(t));
            for (const auto& h : s.b) p.b.push_back(h.at(t));
            return p;
          },
          [t](const schedules::Piecewise& s) {
            const auto it = std::upper_bound(s.starts.begin(), s.starts.end(), t);
            const auto k = it == s.starts.begin()
                               ? 0
                               : static_cast<std::size_t>(it - s.starts.begin()) - 1;
            return s.params[k];
          },
          [t](const schedules::Table& s) {
            const long k = std::clamp(t - s.start, 0L,
                                      static_cast<long>(s.params.size()) - 1);
            return s.params[static_cast<std::size_t>(k)];
          },
      },
      v_);
}

void CoefficientSchedule::validate(long t_begin, long t_end) const {
  int sign = 0;
  for (long t = t_begin; t <= t_end; ++t) {
    const PlantParams p = at(t);
    if (p.n() != n_ || p.m() != m_ || p.d != d_) {
      throw AssumptionViolated("plant dimensions change at t = " +
                               std::to_string(t));
    }
    try {
      p.validate();
    } catch (const AssumptionViolated& e) {
      throw AssumptionViolated(std::string(e.what()) + " at t = " +
                               std::to_string(t));
    }
    const int s = p.b.front() > 0.0 ? 1 : -1;
    if (sign != 0 && s != sign) {
      throw AssumptionViolated("sign of b_0 changes at t = " +
                               std::to_string(t));
    }
    sign = s;
    // Constant schedules need a single check.
    if (is_constant()) break;
  }
}

void PlantState::advance(double u_t, double y_next) {
  if (!u.empty()) {
    std::rotate(u.rbegin(), u.rbegin() + 1, u.rend());
    u.front() = u_t;
  }
  if (!y.empty()) {
    std::rotate(y.rbegin(), y.rbegin() + 1, y.rend());
    y.front() = y_next;
  }
}

double plant_step(const PlantState& state, const CoefficientSchedule& schedule,
                  long t, double u_t, double w_next) {
  const PlantParams p = schedule.at(t);
  if (state.y.size() < p.a.size() ||
      state.u.size() + 1 < static_cast<std::size_t>(p.m() + p.d)) {
    throw DimensionMismatch("plant state histories too short");
  }
  double y = w_next;
  for (std::size_t i = 0; i < p.a.size(); ++i) y -= p.a[i] * state.y[i];
  // u(t+1-d-i) is u_t for lag 0, else state.u[lag - 1].
  for (std::size_t i = 0; i < p.b.size(); ++i) {
    const std::size_t lag = static_cast<std::size_t>(p.d) - 1 + i;
    y += p.b[i] * (lag == 0 ? u_t : state.u[lag - 1]);
  }
  return y;
}

std::vector<double> wbar_sequence(const PolyZ& f, const Signal& w, long t0,
                                  long horizon) {
  const auto d = static_cast<long>(f.size());
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(horizon) + 1);
  for (long t = t0; t <= t0 + horizon; ++t) {
    double acc = 0.0;
    for (long i = 0; i < d; ++i) acc += f[static_cast<std::size_t>(i)] * w(t + d - i);
    out.push_back(acc);
  }
  return out;
}

}  // namespace mrac
