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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mrac {

/// Polynomial in the delay operator z^-1, stored densely by ascending power:
/// coeffs()[i] multiplies z^-i. Trailing zeros are kept; they only matter
/// for display and for the formal degree.
class PolyZ {
 public:
  PolyZ() : coeffs_{0.0} {}
  PolyZ(std::initializer_list<double> c);
  explicit PolyZ(std::vector<double> c);

  static PolyZ one() { return PolyZ{1.0}; }

  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0.0;
  }
  std::size_t size() const { return coeffs_.size(); }

  /// Formal degree (size - 1), trailing zeros included.
  std::size_t degree() const { return coeffs_.size() - 1; }
  /// Degree after dropping trailing zeros; 0 for constants.
  std::size_t effective_degree() const;

  bool is_monic() const { return coeffs_.front() == 1.0; }

  /// Zero-pads to `n` coefficients. Never truncates.
  PolyZ padded(std::size_t n) const;
  PolyZ trimmed() const;

  /// Evaluates sum c_i x^i.
  double eval_powers(double x) const;

  std::string to_string() const;

  friend bool operator==(const PolyZ&, const PolyZ&) = default;

 private:
  std::vector<double> coeffs_;
};

/// Coefficient convolution; degree(p*q) = degree(p) + degree(q).
PolyZ poly_mul(const PolyZ& p, const PolyZ& q);

struct PredictorSplit {
  PolyZ f;      ///< d coefficients f_0..f_{d-1}
  PolyZ alpha;  ///< n coefficients alpha_0..alpha_{n-1}
};

/// Long division L / A = F + z^-d alpha / A with both L and A monic.
/// Runs d synthetic-division steps; the remainder after the last step,
/// shifted by d, is alpha. Throws DegeneratePolynomial for non-monic inputs
/// and DimensionMismatch when deg L > n + d - 1 (alpha would not fit).
PredictorSplit predictor_split(const PolyZ& l, const PolyZ& a, int d);

/// Boundary band used by schur_stable: roots with |z| >= 1 - tol count as
/// unstable.
inline constexpr double kSchurBoundaryTol = 1e-9;

/// True iff every root of z^deg p(z^-1) lies strictly inside the unit disk
/// (outside the 1e-9 boundary band). Schur-Cohn step-down recursion.
bool schur_stable(const PolyZ& p);

/// Largest root modulus of z^deg p(z^-1), 0 for constants. Bisection on the
/// radius-scaled Schur-Cohn test; absolute accuracy well below 1e-6.
double max_root_modulus(const PolyZ& p);

}  // namespace mrac
