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

#include <gtest/gtest.h>

#include "mrac/errors.hpp"
#include "mrac/system.hpp"
#include "support/eigen_oracle.hpp"
#include "support/random_configs.hpp"

namespace mrac {
namespace {

using testing::Rng;
using testing::uniform;

TEST(PlantParams, ThetaRoundTrip) {
  const PlantParams p{{0.5, -0.2}, {2.0, 0.3}, 2};
  const auto theta = p.theta();
  EXPECT_EQ(theta, (std::vector<double>{0.5, -0.2, 2.0, 0.3}));
  EXPECT_EQ(PlantParams::from_theta(theta, 2, 2), p);
  EXPECT_EQ(p.a_poly(), (PolyZ{1.0, 0.5, -0.2}));
}

TEST(PlantParams, ValidateGate) {
  EXPECT_NO_THROW((PlantParams{{0.5}, {2.0, 1.0}, 1}.validate()));
  EXPECT_THROW((PlantParams{{0.5}, {0.0, 1.0}, 1}.validate()), AssumptionViolated);
  EXPECT_THROW((PlantParams{{0.5}, {1.0, 2.0}, 1}.validate()), AssumptionViolated);
  EXPECT_THROW((PlantParams{{0.5}, {1.0}, 0}.validate()), AssumptionViolated);
}

TEST(ReferenceModel, PadsDeadbeatModel) {
  const auto ref = ReferenceModel::make(PolyZ{1.0}, PolyZ{1.0}, 2);
  EXPECT_EQ(ref.n_ref(), 2);
  EXPECT_NO_THROW(ref.validate(1));
}

TEST(ReferenceModel, ValidateGate) {
  EXPECT_THROW(ReferenceModel::make(PolyZ{1.0, -1.5}, PolyZ{1.0}, 1).validate(2),
               AssumptionViolated);
  EXPECT_THROW(ReferenceModel::make(PolyZ{2.0, 0.5}, PolyZ{1.0}, 1).validate(2),
               AssumptionViolated);
  EXPECT_THROW(ReferenceModel::make(PolyZ{1.0, 0.1, 0.1, 0.1}, PolyZ{1.0}, 1).validate(2),
               AssumptionViolated);
  EXPECT_THROW((ReferenceModel{PolyZ{1.0, 0.5}, PolyZ{1.0, 1.0}, 1}.validate(2)),
               AssumptionViolated);
}

TEST(Dims, Sizes) {
  const Dims d{2, 1, 3, 2};
  EXPECT_EQ(d.p(), 6);
  EXPECT_EQ(d.x0_size(), 4 + 5);
  EXPECT_EQ(d.gain_index(), 2);
}

TEST(PredictorParams, OneStepExample) {
  const PlantParams p{{0.3, -0.2}, {2.0, 0.4}, 1};
  const auto ref = ReferenceModel::make(PolyZ{1.0, 0.0, -0.5}, PolyZ{0.5}, 1);
  const auto pp = to_predictor_params(p, ref);
  EXPECT_NEAR(pp.alpha[0], -0.3, 1e-15);
  EXPECT_NEAR(pp.alpha[1], -0.3, 1e-15);  // l_2 - a_2 = -0.5 + 0.2
  EXPECT_EQ(pp.beta, p.b);
}

TEST(PredictorParams, BetaIsFTimesB) {
  // d = 2, L = 1 (padded), A = 1 - 0.5 z^-1: F = 1 + 0.5 z^-1.
  const PlantParams p{{-0.5}, {2.0, 1.0}, 2};
  const auto ref = ReferenceModel::make(PolyZ{1.0}, PolyZ{1.0}, 2);
  const auto pp = to_predictor_params(p, ref);
  ASSERT_EQ(pp.beta.size(), 3u);
  EXPECT_DOUBLE_EQ(pp.beta[0], 2.0);
  EXPECT_DOUBLE_EQ(pp.beta[1], 1.0 + 1.0);
  EXPECT_DOUBLE_EQ(pp.beta[2], 0.5);
  EXPECT_DOUBLE_EQ(pp.alpha[0], 0.25);
}

TEST(ParamBox, Basics) {
  const ParamBox box({-1.0, 2.0}, {1.0, 4.0});
  EXPECT_EQ(box.midpoint(), (std::vector<double>{0.0, 3.0}));
  EXPECT_EQ(box.corner(0b10), (std::vector<double>{-1.0, 4.0}));
  EXPECT_TRUE(box.contains(std::vector<double>{1.0, 2.0}));
  EXPECT_FALSE(box.contains(std::vector<double>{1.0 + 1e-9, 2.0}));
  EXPECT_TRUE(box.contains(std::vector<double>{1.0 + 1e-9, 2.0}, 1e-8));
  EXPECT_FALSE(box.contains(std::vector<double>{0.0}));
  EXPECT_EQ(box.inflated(0.5), ParamBox({-1.5, 1.5}, {1.5, 4.5}));
  EXPECT_EQ(box.hull(ParamBox::point({5.0, 0.0})), ParamBox({-1.0, 0.0}, {5.0, 4.0}));
  EXPECT_THROW(ParamBox({1.0}, {0.0}), DimensionMismatch);
  EXPECT_THROW(ParamBox({1.0}, {2.0, 3.0}), DimensionMismatch);
}

TEST(ParamBox, NormIsLargestCornerNorm) {
  Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    std::vector<double> lo(3), hi(3);
    for (int i = 0; i < 3; ++i) {
      lo[i] = uniform(rng, -3.0, 3.0);
      hi[i] = lo[i] + uniform(rng, 0.0, 2.0);
    }
    const ParamBox box(lo, hi);
    double best = 0.0;
    for (std::uint64_t m = 0; m < 8; ++m) {
      double s = 0.0;
      for (double v : box.corner(m)) s += v * v;
      best = std::max(best, std::sqrt(s));
    }
    EXPECT_NEAR(box_norm(box), best, 1e-12);
    EXPECT_LE(box_norm(box), box_norm(box.inflated(0.1)));
  }
}

TEST(GainSign, SignAndAdmissibility) {
  EXPECT_EQ(gain_sign(ParamBox({0.0, 1.5}, {0.0, 5.0}), 1), 1);
  EXPECT_EQ(gain_sign(ParamBox({-3.0}, {-1.0}), 0), -1);
  EXPECT_THROW(gain_sign(ParamBox({-0.5}, {2.0}), 0), InadmissibleSet);
  EXPECT_THROW(gain_sign(ParamBox({0.0}, {2.0}), 0), InadmissibleSet);
  EXPECT_THROW(gain_sign(ParamBox({1.0}, {2.0}), 3), DimensionMismatch);
}

TEST(BuildParamBox, PublishedExampleImage) {
  const ParamBox s = build_param_box(testing::example_plant_box(), 2, testing::example_reference());
  const ParamBox expected({-2.0, -2.5, 1.5, -1.0}, {2.0, 1.5, 5.0, 1.0});
  ASSERT_EQ(s.dim(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(s.lo()[i], expected.lo()[i], 1e-12) << i;
    EXPECT_NEAR(s.hi()[i], expected.hi()[i], 1e-12) << i;
  }
}

TEST(BuildParamBox, RejectsGainIntervalThroughZero) {
  const ParamBox bad({-2.0, -2.0, -1.0, -1.0}, {2.0, 2.0, 5.0, 1.0});
  EXPECT_THROW(build_param_box(bad, 2, testing::example_reference()), InadmissibleSet);
}

TEST(BuildParamBox, RejectsNonMinimumPhaseMember) {
  const ParamBox bad({-2.0, -2.0, 1.5, -2.0}, {2.0, 2.0, 5.0, 2.0});
  EXPECT_THROW(build_param_box(bad, 2, testing::example_reference()), AssumptionViolated);
}

TEST(BuildParamBox, ContainsImageOfRandomMembers) {
  Rng rng(22);
  for (int k = 0; k < 30; ++k) {
    const auto rp = testing::random_plant(rng);
    BoxBuildOptions opts;
    opts.margin = rp.plant.d > 1 ? 0.25 : 0.0;
    const ParamBox s = build_param_box(rp.s_ab, rp.plant.n(), rp.reference, opts);
    for (int j = 0; j < 50; ++j) {
      const PlantParams member = testing::plant_from_box(rng, rp.s_ab, rp.plant.n(), rp.plant.d);
      EXPECT_TRUE(s.contains(to_predictor_params(member, rp.reference).theta(), 1e-12));
    }
  }
}

TEST(SpectralFloor, PublishedExample) {
  // B roots -b1/b0 peak at 1/1.5; L roots +-sqrt(1/2) dominate.
  const double floor = spectral_floor(testing::example_plant_box(), 2, testing::example_reference());
  EXPECT_NEAR(floor, std::sqrt(0.5), 1e-9);
}

TEST(SpectralFloor, CoversCornersOfTheGainBox) {
  Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    const auto rp = testing::random_plant(rng);
    const auto n = static_cast<std::size_t>(rp.plant.n());
    const double floor = spectral_floor(rp.s_ab, rp.plant.n(), rp.reference);
    EXPECT_GE(floor + 1e-9, testing::companion_max_modulus(rp.reference.l));
    // The grid includes both ends of every b interval.
    const std::size_t nb = rp.s_ab.dim() - n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb); ++mask) {
      std::vector<double> b(nb);
      for (std::size_t j = 0; j < nb; ++j) {
        b[j] = ((mask >> j) & 1U) ? rp.s_ab.hi()[n + j] : rp.s_ab.lo()[n + j];
      }
      EXPECT_GE(floor + 1e-9, testing::companion_max_modulus(PolyZ(b)));
    }
    EXPECT_LT(floor, 1.0);
  }
}

}  // namespace
}  // namespace mrac
