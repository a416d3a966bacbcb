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
#include <complex>

#include <gtest/gtest.h>

#include "mrac/errors.hpp"
#include "mrac/poly.hpp"
#include "support/eigen_oracle.hpp"
#include "support/random_configs.hpp"

namespace mrac {
namespace {

using testing::companion_max_modulus;
using testing::Rng;
using testing::uniform;
using testing::uniform_int;

PolyZ random_poly(Rng& rng, int degree, double scale = 1.0) {
  return PolyZ(testing::random_vector(rng, static_cast<std::size_t>(degree + 1), scale));
}

PolyZ random_monic(Rng& rng, int degree) {
  auto c = testing::random_vector(rng, static_cast<std::size_t>(degree + 1), 1.0);
  c[0] = 1.0;
  return PolyZ(c);
}

void expect_poly_near(const PolyZ& p, const PolyZ& q, double tol) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(p[i], q[i], tol) << "coefficient " << i;
}

PolyZ add_shifted(const PolyZ& p, const PolyZ& q, std::size_t shift) {
  std::vector<double> c(std::max(p.size(), q.size() + shift), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) c[i] += p[i];
  for (std::size_t i = 0; i < q.size(); ++i) c[i + shift] += q[i];
  return PolyZ(c);
}

TEST(PolyZ, EmptyBecomesZero) {
  EXPECT_EQ(PolyZ(std::vector<double>{}).size(), 1u);
  EXPECT_EQ(PolyZ()[0], 0.0);
}

TEST(PolyZ, IndexPastEndIsZero) {
  const PolyZ p{1.0, 2.0};
  EXPECT_EQ(p[5], 0.0);
}

TEST(PolyZ, DegreesAndTrim) {
  const PolyZ p{1.0, 0.5, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 3u);
  EXPECT_EQ(p.effective_degree(), 1u);
  EXPECT_EQ(p.trimmed(), (PolyZ{1.0, 0.5}));
  EXPECT_EQ(p.padded(6).size(), 6u);
  EXPECT_EQ(p.padded(2), p);
}

TEST(PolyZ, EvalPowersIsHorner) {
  const PolyZ p{1.0, -2.0, 3.0};
  EXPECT_DOUBLE_EQ(p.eval_powers(2.0), 1.0 - 4.0 + 12.0);
}

TEST(PolyZ, ToString) { EXPECT_EQ((PolyZ{1.0, 0.0, -0.5}).to_string(), "1 - 0.5 z^-2"); }

TEST(PolyMul, SmallProduct) {
  EXPECT_EQ(poly_mul(PolyZ{1.0, 1.0}, PolyZ{1.0, -1.0}), (PolyZ{1.0, 0.0, -1.0}));
}

TEST(PolyMul, CommutativeAndAssociative) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const PolyZ p = random_poly(rng, uniform_int(rng, 0, 5));
    const PolyZ q = random_poly(rng, uniform_int(rng, 0, 5));
    const PolyZ r = random_poly(rng, uniform_int(rng, 0, 5));
    expect_poly_near(poly_mul(p, q), poly_mul(q, p), 1e-14);
    expect_poly_near(poly_mul(poly_mul(p, q), r), poly_mul(p, poly_mul(q, r)), 1e-12);
  }
}

TEST(PolyMul, MatchesEvaluation) {
  Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    const PolyZ p = random_poly(rng, uniform_int(rng, 0, 6));
    const PolyZ q = random_poly(rng, uniform_int(rng, 0, 6));
    const double x = uniform(rng, -1.5, 1.5);
    EXPECT_NEAR(poly_mul(p, q).eval_powers(x), p.eval_powers(x) * q.eval_powers(x), 1e-10);
  }
}

TEST(PredictorSplit, OneStepGivesCoefficientDifference) {
  // d = 1: alpha_i = l_{i+1} - a_{i+1}.
  const PolyZ l{1.0, 0.0, -0.5};
  const PolyZ a{1.0, 0.3, -0.2};
  const auto s = predictor_split(l, a, 1);
  EXPECT_EQ(s.f, PolyZ{1.0});
  expect_poly_near(s.alpha, PolyZ{-0.3, -0.5 + 0.2}, 1e-15);
}

TEST(PredictorSplit, TwoStepDeadbeatReference) {
  // L = 1, A = 1 - a z^-1, d = 2: F = 1 + a z^-1, alpha = a^2.
  const double a1 = 0.7;
  const auto s = predictor_split(PolyZ{1.0}, PolyZ{1.0, -a1}, 2);
  expect_poly_near(s.f, PolyZ{1.0, a1}, 1e-15);
  expect_poly_near(s.alpha, PolyZ{a1 * a1}, 1e-15);
}

TEST(PredictorSplit, RecomposesRandomTriples) {
  Rng rng(13);
  for (int k = 0; k < 1000; ++k) {
    const int n = uniform_int(rng, 1, 4);
    const int d = uniform_int(rng, 1, 4);
    const PolyZ a = random_monic(rng, n);
    const PolyZ l = random_monic(rng, uniform_int(rng, 0, n + d - 1));
    const auto s = predictor_split(l, a, d);
    ASSERT_EQ(s.f.size(), static_cast<std::size_t>(d));
    ASSERT_EQ(s.alpha.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(s.f[0], 1.0);
    expect_poly_near(add_shifted(poly_mul(s.f, a), s.alpha, static_cast<std::size_t>(d)), l,
                     1e-10);
  }
}

TEST(PredictorSplit, Rejections) {
  EXPECT_THROW(predictor_split(PolyZ{1.0}, PolyZ{2.0, 1.0}, 1), DegeneratePolynomial);
  EXPECT_THROW(predictor_split(PolyZ{0.5}, PolyZ{1.0, 1.0}, 1), DegeneratePolynomial);
  EXPECT_THROW(predictor_split(PolyZ{1.0}, PolyZ{1.0, 1.0}, 0), DimensionMismatch);
  EXPECT_THROW(predictor_split(PolyZ{1.0, 0.1, 0.1, 0.1}, PolyZ{1.0, 1.0}, 2), DimensionMismatch);
}

TEST(PredictorSplit, StaticPlantKeepsOneAlphaSlot) {
  const auto s = predictor_split(PolyZ{1.0}, PolyZ{1.0}, 1);
  EXPECT_EQ(s.alpha, PolyZ{0.0});
}

TEST(SchurStable, Examples) {
  EXPECT_TRUE(schur_stable(PolyZ{1.0, 0.0, -0.5}));
  EXPECT_FALSE(schur_stable(PolyZ{1.0, -1.0}));       // root on the circle
  EXPECT_FALSE(schur_stable(PolyZ{1.0, -2.5, 1.0}));  // roots 2 and 0.5
  EXPECT_TRUE(schur_stable(PolyZ{3.0}));
  EXPECT_THROW(schur_stable(PolyZ{0.0, 1.0}), DegeneratePolynomial);
}

TEST(MaxRootModulus, Examples) {
  EXPECT_NEAR(max_root_modulus(PolyZ{1.0, 0.0, -0.5}), std::sqrt(0.5), 1e-9);
  EXPECT_NEAR(max_root_modulus(PolyZ{2.0, -1.0}), 0.5, 1e-9);
  EXPECT_EQ(max_root_modulus(PolyZ{4.0}), 0.0);
  EXPECT_NEAR(max_root_modulus(PolyZ{1.0, 0.0, 0.0, 0.0}), 0.0, 1e-9);
}

TEST(MaxRootModulus, AgreesWithCompanionEigenvalues) {
  Rng rng(14);
  for (int k = 0; k < 500; ++k) {
    PolyZ p = random_poly(rng, uniform_int(rng, 1, 6), 1.5);
    if (std::abs(p[0]) < 0.1) continue;
    const double oracle = companion_max_modulus(p);
    EXPECT_NEAR(max_root_modulus(p), oracle, 1e-6 * std::max(1.0, oracle)) << p.to_string();
  }
}

TEST(SchurStable, EquivalentToMaxRootModulus) {
  Rng rng(15);
  int stable = 0;
  for (int k = 0; k < 1000; ++k) {
    const PolyZ p = random_poly(rng, uniform_int(rng, 1, 5), 0.8);
    if (std::abs(p[0]) < 0.2) continue;
    const double mrm = companion_max_modulus(p);
    if (std::abs(mrm - 1.0) < 1e-6) continue;  // too close to call
    EXPECT_EQ(schur_stable(p), mrm < 1.0) << p.to_string() << " mrm " << mrm;
    stable += mrm < 1.0 ? 1 : 0;
  }
  EXPECT_GT(stable, 50);
}

TEST(MaxRootModulus, ScaleInvariant) {
  Rng rng(16);
  for (int k = 0; k < 100; ++k) {
    const PolyZ p = random_monic(rng, uniform_int(rng, 1, 4));
    std::vector<double> scaled(p.coeffs().begin(), p.coeffs().end());
    for (double& c : scaled) c *= -3.5;
    EXPECT_NEAR(max_root_modulus(p), max_root_modulus(PolyZ(scaled)), 1e-9);
  }
}

}  // namespace
}  // namespace mrac
