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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mrac/harness.hpp"
#include "mrac/poly.hpp"
#include "mrac/system.hpp"

namespace mrac::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Monic polynomial prod (1 - p_k z^-1) with real roots |p_k| <= radius.
inline PolyZ stable_monic(Rng& rng, int degree, double radius) {
  PolyZ p = PolyZ::one();
  for (int k = 0; k < degree; ++k) p = poly_mul(p, PolyZ{1.0, -uniform(rng, -radius, radius)});
  return p;
}

inline std::vector<double> random_vector(Rng& rng, std::size_t n, double scale) {
  std::vector<double> v(n);
  for (auto& x : v) x = uniform(rng, -scale, scale);
  return v;
}

/// The published example's plant box S_ab = (a_1, a_2, b_0, b_1).
inline ParamBox example_plant_box() {
  return ParamBox({-2.0, -2.0, 1.5, -1.0}, {2.0, 2.0, 5.0, 1.0});
}

inline ReferenceModel example_reference() {
  return ReferenceModel::make(PolyZ{1.0, 0.0, -0.5}, PolyZ{0.5}, 1);
}

/// Constant plant drawn uniformly from `s_ab` (layout a_1..a_n, b_0..b_m).
inline PlantParams plant_from_box(Rng& rng, const ParamBox& s_ab, int n, int d) {
  std::vector<double> theta(s_ab.dim());
  for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = uniform(rng, s_ab.lo()[i], s_ab.hi()[i]);
  return PlantParams::from_theta(theta, n, d);
}

/// Closed-loop configuration around a constant plant from the example box.
inline ExperimentConfig example_box_config(const PlantParams& plant, long steps) {
  ExperimentConfig cfg;
  cfg.plant = CoefficientSchedule(plant);
  cfg.reference = example_reference();
  cfg.s_ab = PlantBoxSpec{example_plant_box(), {}};
  cfg.steps = steps;
  cfg.x0 = {-1.0, -1.0, 0.0};
  cfg.r = signals::SquareWave{200, 1.0, 0};
  return cfg;
}

struct RandomPlant {
  PlantParams plant;
  ParamBox s_ab;
  ReferenceModel reference;
};

/// Random constant plant of random order with a box S_ab around it whose
/// every member is minimum phase (sum |b_i| < |b_0| on the whole box) and
/// a stable monic reference model of degree <= n.
inline RandomPlant random_plant(Rng& rng, int max_n = 3, int max_m = 2, int max_d = 3) {
  const int n = uniform_int(rng, 1, max_n);
  const int m = uniform_int(rng, 0, max_m);
  const int d = uniform_int(rng, 1, max_d);

  PlantParams p;
  p.d = d;
  p.a = random_vector(rng, static_cast<std::size_t>(n), 1.2);
  const double sign = uniform(rng, 0.0, 1.0) < 0.8 ? 1.0 : -1.0;
  const double b0 = sign * uniform(rng, 1.0, 3.0);
  p.b = {b0};
  const double tail_budget = 0.6 * (std::abs(b0) - 0.3);
  for (int i = 1; i <= m; ++i) p.b.push_back(uniform(rng, -1.0, 1.0) * 0.5 * tail_budget / m);

  const double wa = 0.3;
  std::vector<double> lo, hi;
  for (double a : p.a) {
    lo.push_back(a - wa);
    hi.push_back(a + wa);
  }
  lo.push_back(b0 - 0.3);
  hi.push_back(b0 + 0.3);
  for (int i = 1; i <= m; ++i) {
    const double w = 0.5 * tail_budget / m;
    lo.push_back(p.b[static_cast<std::size_t>(i)] - w);
    hi.push_back(p.b[static_cast<std::size_t>(i)] + w);
  }

  const int n_ref = uniform_int(rng, 1, n);
  PolyZ l = stable_monic(rng, n_ref, 0.8);
  double dc = 0.0;
  for (double c : l.coeffs()) dc += c;
  const PolyZ h{dc};  // unit DC gain
  return RandomPlant{p, ParamBox(lo, hi), ReferenceModel::make(l, h, d)};
}

inline ExperimentConfig random_plant_config(Rng& rng, const RandomPlant& rp, long steps) {
  ExperimentConfig cfg;
  cfg.plant = CoefficientSchedule(rp.plant);
  cfg.reference = rp.reference;
  BoxBuildOptions opts;
  if (rp.plant.d > 1) opts.margin = 0.25;
  cfg.s_ab = PlantBoxSpec{rp.s_ab, opts};
  cfg.steps = steps;
  cfg.x0 = random_vector(rng, static_cast<std::size_t>(cfg.dims().x0_size()), 1.0);
  cfg.r = signals::SquareWave{2 * uniform_int(rng, 10, 100), uniform(rng, 0.5, 2.0), 0};
  cfg.seed = rng();
  return cfg;
}

}  // namespace mrac::testing
