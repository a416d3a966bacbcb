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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mrac/errors.hpp"
#include "mrac/plant_sim.hpp"
#include "support/random_configs.hpp"

namespace mrac {
namespace {

TEST(Signals, SquareWavePublishedShape) {
  const Signal r(signals::SquareWave{200, 1.0, 0});
  EXPECT_EQ(r(0), 1.0);
  EXPECT_EQ(r(99), 1.0);
  EXPECT_EQ(r(100), -1.0);
  EXPECT_EQ(r(199), -1.0);
  EXPECT_EQ(r(200), 1.0);
  EXPECT_EQ(r(-5), 1.0);
}

TEST(Signals, SquareWaveOddPeriodAndPhase) {
  const Signal r(signals::SquareWave{3, 2.0, 10});
  EXPECT_EQ(r(10), 2.0);
  EXPECT_EQ(r(11), 2.0);  // 2 * 1 < 3
  EXPECT_EQ(r(12), -2.0);
  EXPECT_EQ(r(13), 2.0);
}

TEST(Signals, WindowedSinusoidIsHalfOpen) {
  const Signal w(signals::WindowedSinusoid{200, 500, 0.1, 10.0, 0.0});
  EXPECT_EQ(w(200), 0.0);
  EXPECT_DOUBLE_EQ(w(201), 0.1 * std::cos(2010.0));
  EXPECT_DOUBLE_EQ(w(500), 0.1 * std::cos(5000.0));
  EXPECT_EQ(w(501), 0.0);
}

TEST(Signals, TableAndConstant) {
  const Signal s(signals::Table{5, {1.0, 2.0}});
  EXPECT_EQ(s(4), 0.0);
  EXPECT_EQ(s(5), 1.0);
  EXPECT_EQ(s(6), 2.0);
  EXPECT_EQ(s(7), 0.0);
  EXPECT_EQ(Signal(signals::Constant{3.0})(123), 3.0);
  EXPECT_EQ(Signal(signals::Zero{})(1), 0.0);
}

TEST(Signals, WhiteNoiseBoundedAndHorizonIndependent) {
  const signals::WhiteNoise spec{0.5, 42};
  const Signal short_run(spec, 100);
  const Signal long_run(spec, 1000);
  for (long t = 0; t <= 300; ++t) {
    EXPECT_EQ(short_run(t), long_run(t)) << t;
    EXPECT_LE(std::abs(long_run(t)), 0.5);
  }
  EXPECT_EQ(long_run(-1), 0.0);
  EXPECT_LE(long_run.sup_norm(0, 1000), 0.5);
  EXPECT_GT(long_run.sup_norm(0, 1000), 0.45);
}

TEST(Signals, WhiteNoiseSeedMatters) {
  const Signal a(signals::WhiteNoise{1.0, 1}, 10);
  const Signal b(signals::WhiteNoise{1.0, 2}, 10);
  EXPECT_NE(a(3), b(3));
}

TEST(Signals, KindNames) {
  EXPECT_EQ(signal_kind(signals::SquareWave{}), "square_wave");
  EXPECT_EQ(signal_kind(signals::WhiteNoise{}), "white_noise");
  EXPECT_DOUBLE_EQ(signal_eval(signals::Sinusoid{2.0, 0.5, 0.25}, 4), 2.0 * std::cos(2.25));
}

TEST(Harmonic, CosAndSin) {
  EXPECT_DOUBLE_EQ((Harmonic{1.0, 2.0, 0.5, 0.0, false}.at(2)), 1.0 + 2.0 * std::cos(1.0));
  EXPECT_DOUBLE_EQ((Harmonic{0.0, -2.0, 1.0 / 300.0, 0.0, true}.at(150)), -2.0 * std::sin(0.5));
}

TEST(CoefficientSchedule, ConstantAndShape) {
  const CoefficientSchedule s(PlantParams{{0.5, 0.1}, {2.0}, 3});
  EXPECT_TRUE(s.is_constant());
  EXPECT_EQ(s.mode(), "constant");
  EXPECT_EQ(s.n(), 2);
  EXPECT_EQ(s.m(), 0);
  EXPECT_EQ(s.d(), 3);
  EXPECT_EQ(s.at(1000).a[0], 0.5);
}

TEST(CoefficientSchedule, PiecewiseSegments) {
  const PlantParams p1{{0.1}, {1.0}, 1};
  const PlantParams p2{{0.2}, {2.0}, 1};
  const CoefficientSchedule s(schedules::Piecewise{{0, 50}, {p1, p2}});
  EXPECT_EQ(s.at(-10), p1);
  EXPECT_EQ(s.at(49), p1);
  EXPECT_EQ(s.at(50), p2);
  EXPECT_THROW(CoefficientSchedule(schedules::Piecewise{{50, 0}, {p1, p2}}), ConfigError);
  EXPECT_THROW(CoefficientSchedule(schedules::Piecewise{{0}, {p1, p2}}), ConfigError);
}

TEST(CoefficientSchedule, TableClamps) {
  const PlantParams p1{{0.1}, {1.0}, 1};
  const PlantParams p2{{0.2}, {2.0}, 1};
  const CoefficientSchedule s(schedules::Table{10, {p1, p2}});
  EXPECT_EQ(s.at(0), p1);
  EXPECT_EQ(s.at(11), p2);
  EXPECT_EQ(s.at(99), p2);
}

TEST(CoefficientSchedule, ValidateCatchesSignChangeAndShape) {
  const PlantParams pos{{0.1}, {1.0}, 1};
  const PlantParams neg{{0.1}, {-1.0}, 1};
  const PlantParams wide{{0.1, 0.2}, {1.0}, 1};
  EXPECT_THROW(CoefficientSchedule(schedules::Piecewise{{0, 5}, {pos, neg}}).validate(0, 10),
               AssumptionViolated);
  EXPECT_THROW(CoefficientSchedule(schedules::Piecewise{{0, 5}, {pos, wide}}).validate(0, 10),
               AssumptionViolated);
  EXPECT_NO_THROW(CoefficientSchedule(schedules::Piecewise{{0, 5}, {pos, neg}}).validate(0, 4));
}

TEST(CoefficientSchedule, PublishedExampleIsAdmissible) {
  const auto cfg = example_config();
  EXPECT_FALSE(cfg.plant.is_constant());
  EXPECT_NO_THROW(cfg.plant.validate(0, 1000));
  const auto p = cfg.plant.at(0);
  EXPECT_DOUBLE_EQ(p.a[0], 2.0);
  EXPECT_DOUBLE_EQ(p.a[1], 0.0);
  EXPECT_DOUBLE_EQ(p.b[0], 1.5);
  EXPECT_DOUBLE_EQ(p.b[1], -1.0);
}

TEST(PlantState, AdvanceShifts) {
  PlantState s{{1.0, 2.0}, {3.0, 4.0, 5.0}};
  s.advance(9.0, 8.0);
  EXPECT_EQ(s.y, (std::vector<double>{8.0, 1.0}));
  EXPECT_EQ(s.u, (std::vector<double>{9.0, 3.0, 4.0}));
}

TEST(PlantStep, MatchesDifferenceEquation) {
  // y(t+1) = -a1 y(t) - a2 y(t-1) + b0 u(t-1) + b1 u(t-2) + w(t+1), d = 2.
  const PlantParams p{{0.4, -0.3}, {2.0, 0.5}, 2};
  const PlantState s{{1.0, -1.0}, {0.7, -0.2, 0.9}};  // u(t-1), u(t-2), u(t-3)
  const double y = plant_step(s, CoefficientSchedule(p), 0, 123.0, 0.05);
  EXPECT_DOUBLE_EQ(y, -0.4 * 1.0 + 0.3 * -1.0 + 2.0 * 0.7 + 0.5 * -0.2 + 0.05);
}

TEST(PlantStep, OneStepDelayUsesCurrentInput) {
  const PlantParams p{{0.0}, {2.0, 1.0}, 1};
  const PlantState s{{0.0}, {3.0, 0.0}};
  EXPECT_DOUBLE_EQ(plant_step(s, CoefficientSchedule(p), 0, 1.0, 0.0), 2.0 * 1.0 + 1.0 * 3.0);
}

TEST(PlantStep, ShortHistoryThrows) {
  const PlantParams p{{0.1, 0.2}, {1.0}, 1};
  EXPECT_THROW(plant_step(PlantState{{1.0}, {}}, CoefficientSchedule(p), 0, 0.0, 0.0),
               DimensionMismatch);
}

TEST(WbarSequence, FiltersFutureDisturbance) {
  const Signal w(signals::Table{0, {1.0, 2.0, 3.0, 4.0, 5.0}});
  const auto wbar = wbar_sequence(PolyZ{1.0, 0.5}, w, 0, 2);
  // wbar(t) = w(t+2) + 0.5 w(t+1)
  EXPECT_EQ(wbar, (std::vector<double>{3.0 + 1.0, 4.0 + 1.5, 5.0 + 2.0}));
}

}  // namespace
}  // namespace mrac
