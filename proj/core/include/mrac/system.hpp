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
#include <span>
#include <vector>

#include "mrac/poly.hpp"

namespace mrac {

/// Plant A(z^-1) y(t) = z^-d B(z^-1) u(t) + w(t) with a_0 = 1.
struct PlantParams {
  std::vector<double> a;  ///< a_1..a_n
  std::vector<double> b;  ///< b_0..b_m
  int d = 1;

  int n() const { return static_cast<int>(a.size()); }
  int m() const { return static_cast<int>(b.size()) - 1; }

  PolyZ a_poly() const;
  PolyZ b_poly() const;

  /// Flat plant vector (a_1..a_n, b_0..b_m).
  std::vector<double> theta() const;
  static PlantParams from_theta(std::span<const double> theta, int n, int d);

  /// Throws AssumptionViolated unless b_0 != 0 and B is Schur stable.
  void validate() const;

  friend bool operator==(const PlantParams&, const PlantParams&) = default;
};

/// Reference model L(z^-1) y*(t) = z^-d H(z^-1) r(t).
///
/// `make` zero-pads L so that its formal degree n' satisfies
/// deg H <= n' - d; the d-step-ahead model (L = 1, H = 1) therefore becomes
/// L = 1 + 0 z^-1 + ... with n' = d.
struct ReferenceModel {
  PolyZ l = PolyZ::one();
  PolyZ h = PolyZ::one();
  int d = 1;

  static ReferenceModel make(PolyZ l, PolyZ h, int d);

  int n_ref() const { return static_cast<int>(l.degree()); }

  /// L monic and Schur stable, trimmed deg L <= n, deg H <= n' - d.
  void validate(int plant_n) const;

  friend bool operator==(const ReferenceModel&, const ReferenceModel&) =
      default;
};

/// Signal dimensions shared by controller, estimator and harness.
struct Dims {
  int n = 1;
  int m = 0;
  int d = 1;
  int n_ref = 1;

  /// Parameter / regressor dimension n + m + d.
  int p() const { return n + m + d; }
  /// Length of the initial-condition vector: (n + d - 1) + (m + 2d - 2).
  int x0_size() const { return (n + d - 1) + (m + 2 * d - 2); }
  /// Index of the high-frequency gain beta_0 inside theta*.
  int gain_index() const { return n; }

  friend bool operator==(const Dims&, const Dims&) = default;
};

Dims dims_of(const PlantParams& plant, const ReferenceModel& ref);

/// theta* = (alpha_0..alpha_{n-1}, beta_0..beta_{m+d-1}).
struct PredictorParams {
  std::vector<double> alpha;
  std::vector<double> beta;

  std::vector<double> theta() const;
};

PredictorParams to_predictor_params(const PlantParams& plant,
                                    const ReferenceModel& ref);

/// Axis-aligned hyperrectangle [lo, hi].
class ParamBox {
 public:
  ParamBox() = default;
  ParamBox(std::vector<double> lo, std::vector<double> hi);

  static ParamBox point(std::vector<double> x) { return ParamBox(x, x); }

  std::size_t dim() const { return lo_.size(); }
  const std::vector<double>& lo() const { return lo_; }
  const std::vector<double>& hi() const { return hi_; }

  bool contains(std::span<const double> x, double tol = 0.0) const;
  std::vector<double> midpoint() const;
  /// Corner selected by the low `dim()` bits of `mask` (bit set = hi).
  std::vector<double> corner(std::uint64_t mask) const;
  ParamBox inflated(double margin) const;
  /// Smallest box containing both.
  ParamBox hull(const ParamBox& other) const;

  friend bool operator==(const ParamBox&, const ParamBox&) = default;

 private:
  std::vector<double> lo_;
  std::vector<double> hi_;
};

/// max_{x in box} ||x||; attained at a corner.
double box_norm(const ParamBox& box);

/// Throws InadmissibleSet unless the coordinate interval at `gain_index`
/// excludes zero. Returns the (constant) sign of that coordinate.
int gain_sign(const ParamBox& box, std::size_t gain_index);

struct BoxBuildOptions {
  int samples = 256;
  double margin = 0.0;
  std::uint64_t seed = 0x5eedULL;
};

/// Hyperrectangle S containing the image of the plant box `s_ab` (layout
/// a_1..a_n, b_0..b_m) under to_predictor_params. Exact for d = 1 (the map
/// is affine); for d > 1 the corner image is widened with random interior
/// samples and `margin`. Throws InadmissibleSet if the b_0 / beta_0 interval
/// contains zero, AssumptionViolated if a sampled B is not minimum phase.
ParamBox build_param_box(const ParamBox& s_ab, int n, const ReferenceModel& ref,
                         const BoxBuildOptions& opts = {});

/// Default points per b-coordinate for spectral_floor.
inline constexpr int kSpectralGrid = 7;

/// Lower estimate of the largest root modulus of B (over a grid sweep of the
/// b-coordinates of `s_ab`) and of L. Decay rates used for bound fitting
/// must exceed it.
double spectral_floor(const ParamBox& s_ab, int n, const ReferenceModel& ref,
                      int grid = kSpectralGrid);

}  // namespace mrac
