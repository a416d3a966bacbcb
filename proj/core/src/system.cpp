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

#include "mrac/system.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mrac/errors.hpp"

namespace mrac {

PolyZ PlantParams::a_poly() const {
  std::vector<double> c{1.0};
  c.insert(c.end(), a.begin(), a.end());
  return PolyZ(std::move(c));
}

PolyZ PlantParams::b_poly() const { return PolyZ(b); }

std::vector<double> PlantParams::theta() const {
  std::vector<double> t = a;
  t.insert(t.end(), b.begin(), b.end());
  return t;
}

PlantParams PlantParams::from_theta(std::span<const double> theta, int n,
                                    int d) {
  if (n < 0 || static_cast<std::size_t>(n) + 1 > theta.size()) {
    throw DimensionMismatch("plant vector of size " +
                            std::to_string(theta.size()) +
                            " cannot hold n = " + std::to_string(n) +
                            " and b_0");
  }
  PlantParams p;
  p.a.assign(theta.begin(), theta.begin() + n);
  p.b.assign(theta.begin() + n, theta.end());
  p.d = d;
  return p;
}

void PlantParams::validate() const {
  if (d < 1) throw AssumptionViolated("plant delay d must be >= 1");
  if (b.empty() || b.front() == 0.0) {
    throw AssumptionViolated("plant b_0 must be nonzero (delay exactly d)");
  }
  if (!schur_stable(b_poly())) {
    throw AssumptionViolated("B(z^-1) = " + b_poly().to_string() +
                             " is not minimum phase");
  }
}

ReferenceModel ReferenceModel::make(PolyZ l, PolyZ h, int d) {
  const std::size_t need = static_cast<std::size_t>(std::max(d, 0)) + h.size();
  return ReferenceModel{l.padded(need), std::move(h), d};
}

void ReferenceModel::validate(int plant_n) const {
  if (!l.is_monic()) {
    throw AssumptionViolated("reference L must have l_0 = 1, got " +
                             l.to_string());
  }
  if (!schur_stable(l)) {
    throw AssumptionViolated("reference L = " + l.to_string() +
                             " is not stable");
  }
  if (static_cast<int>(l.effective_degree()) > plant_n) {
    throw AssumptionViolated("reference order n' = " +
                             std::to_string(l.effective_degree()) +
                             " exceeds plant order n = " +
                             std::to_string(plant_n));
  }
  if (static_cast<int>(h.degree()) > n_ref() - d) {
    throw AssumptionViolated("deg H must be <= n' - d");
  }
}

Dims dims_of(const PlantParams& plant, const ReferenceModel& ref) {
  return Dims{plant.n(), plant.m(), plant.d, ref.n_ref()};
}

std::vector<double> PredictorParams::theta() const {
  std::vector<double> t = alpha;
  t.insert(t.end(), beta.begin(), beta.end());
  return t;
}

PredictorParams to_predictor_params(const PlantParams& plant,
                                    const ReferenceModel& ref) {
  if (plant.d != ref.d) {
    throw DimensionMismatch("plant and reference model disagree on d");
  }
  const auto split = predictor_split(ref.l, plant.a_poly(), plant.d);
  const PolyZ beta = poly_mul(split.f, plant.b_poly());

  PredictorParams out;
  const auto n = static_cast<std::size_t>(plant.n());
  out.alpha.assign(split.alpha.coeffs().begin(),
                   split.alpha.coeffs().begin() + n);
  const auto nb = static_cast<std::size_t>(plant.m() + plant.d);
  out.beta.assign(beta.coeffs().begin(), beta.coeffs().begin() + nb);
  return out;
}

ParamBox::ParamBox(std::vector<double> lo, std::vector<double> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size()) {
    throw DimensionMismatch("box bounds have different lengths");
  }
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (!(lo_[i] <= hi_[i])) {
      throw DimensionMismatch("box coordinate " + std::to_string(i) +
                              " has lo > hi");
    }
  }
}

bool ParamBox::contains(std::span<const double> x, double tol) const {
  if (x.size() != dim()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lo_[i] - tol || x[i] > hi_[i] + tol) return false;
  }
  return true;
}

std::vector<double> ParamBox::midpoint() const {
  std::vector<double> mid(dim());
  for (std::size_t i = 0; i < dim(); ++i) mid[i] = 0.5 * (lo_[i] + hi_[i]);
  return mid;
}

std::vector<double> ParamBox::corner(std::uint64_t mask) const {
  std::vector<double> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    c[i] = ((mask >> i) & 1U) ? hi_[i] : lo_[i];
  }
  return c;
}

ParamBox ParamBox::inflated(double margin) const {
  std::vector<double> lo = lo_;
  std::vector<double> hi = hi_;
  for (std::size_t i = 0; i < dim(); ++i) {
    lo[i] -= margin;
    hi[i] += margin;
  }
  return ParamBox(std::move(lo), std::move(hi));
}

ParamBox ParamBox::hull(const ParamBox& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("hull of unequal boxes");
  std::vector<double> lo(dim());
  std::vector<double> hi(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    lo[i] = std::min(lo_[i], other.lo_[i]);
    hi[i] = std::max(hi_[i], other.hi_[i]);
  }
  return ParamBox(std::move(lo), std::move(hi));
}

double box_norm(const ParamBox& box) {
  double sum = 0.0;
  for (std::size_t i = 0; i < box.dim(); ++i) {
    const double m = std::max(std::abs(box.lo()[i]), std::abs(box.hi()[i]));
    sum += m * m;
  }
  return std::sqrt(sum);
}

int gain_sign(const ParamBox& box, std::size_t gain_index) {
  if (gain_index >= box.dim()) {
    throw DimensionMismatch("gain index outside the box");
  }
  const double lo = box.lo()[gain_index];
  const double hi = box.hi()[gain_index];
  if (lo > 0.0) return 1;
  if (hi < 0.0) return -1;
  throw InadmissibleSet("high-frequency gain interval [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "] contains zero");
}

namespace {

constexpr std::size_t kMaxCornerDim = 24;

struct ImageBounds {
  std::vector<double> lo;
  std::vector<double> hi;

  void add(const std::vector<double>& x) {
    if (lo.empty()) {
      lo = x;
      hi = x;
      return;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  }
};

}  // namespace

ParamBox build_param_box(const ParamBox& s_ab, int n, const ReferenceModel& ref,
                         const BoxBuildOptions& opts) {
  const std::size_t dim = s_ab.dim();
  if (n < 0 || dim < static_cast<std::size_t>(n) + 1) {
    throw DimensionMismatch("plant box too small for n = " + std::to_string(n));
  }
  if (dim > kMaxCornerDim) {
    throw DimensionMismatch("plant box has too many coordinates to enumerate");
  }
  gain_sign(s_ab, static_cast<std::size_t>(n));

  ImageBounds image;
  auto visit = [&](const std::vector<double>& x) {
    const PlantParams plant = PlantParams::from_theta(x, n, ref.d);
    plant.validate();
    image.add(to_predictor_params(plant, ref).theta());
  };

  const std::uint64_t corners = std::uint64_t{1} << dim;
  for (std::uint64_t mask = 0; mask < corners; ++mask) visit(s_ab.corner(mask));

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(dim);
  for (int s = 0; s < opts.samples; ++s) {
    for (std::size_t i = 0; i < dim; ++i) {
      x[i] = s_ab.lo()[i] + unit(rng) * (s_ab.hi()[i] - s_ab.lo()[i]);
    }
    visit(x);
  }

  ParamBox s = ParamBox(std::move(image.lo), std::move(image.hi))
                   .inflated(opts.margin);
  gain_sign(s, static_cast<std::size_t>(n));
  return s;
}

double spectral_floor(const ParamBox& s_ab, int n, const ReferenceModel& ref,
                      int grid) {
  if (grid < 1) throw DimensionMismatch("spectral_floor: grid must be >= 1");
  if (n < 0 || s_ab.dim() < static_cast<std::size_t>(n) + 1) {
    throw DimensionMismatch("plant box too small for n = " + std::to_string(n));
  }
  const std::size_t nb = s_ab.dim() - static_cast<std::size_t>(n);

  double floor = max_root_modulus(ref.l);
  std::vector<std::size_t> idx(nb, 0);
  std::vector<double> b(nb);
  auto coord = [&](std::size_t j, std::size_t k) {
    const double lo = s_ab.lo()[n + j];
    const double hi = s_ab.hi()[n + j];
    if (grid == 1) return 0.5 * (lo + hi);
    return lo + (hi - lo) * static_cast<double>(k) / (grid - 1);
  };
  while (true) {
    for (std::size_t j = 0; j < nb; ++j) b[j] = coord(j, idx[j]);
    const PolyZ bp(b);
    if (b.front() == 0.0 || !schur_stable(bp)) {
      throw AssumptionViolated("sampled B(z^-1) = " + bp.to_string() +
                               " is not minimum phase");
    }
    floor = std::max(floor, max_root_modulus(bp));

    std::size_t j = 0;
    while (j < nb && ++idx[j] == static_cast<std::size_t>(grid)) idx[j++] = 0;
    if (j == nb) break;
  }
  return floor;
}

}  // namespace mrac
