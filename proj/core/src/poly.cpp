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

#include "mrac/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mrac/errors.hpp"

namespace mrac {

PolyZ::PolyZ(std::initializer_list<double> c) : coeffs_(c) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

PolyZ::PolyZ(std::vector<double> c) : coeffs_(std::move(c)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

std::size_t PolyZ::effective_degree() const {
  std::size_t deg = coeffs_.size() - 1;
  while (deg > 0 && coeffs_[deg] == 0.0) --deg;
  return deg;
}

PolyZ PolyZ::padded(std::size_t n) const {
  if (n <= coeffs_.size()) return *this;
  std::vector<double> c = coeffs_;
  c.resize(n, 0.0);
  return PolyZ(std::move(c));
}

PolyZ PolyZ::trimmed() const {
  return PolyZ(std::vector<double>(coeffs_.begin(),
                                   coeffs_.begin() + effective_degree() + 1));
}

double PolyZ::eval_powers(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::string PolyZ::to_string() const {
  std::ostringstream os;
  os.precision(6);
  const PolyZ t = trimmed();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double c = t.coeffs_[i];
    if (i > 0 && c == 0.0) continue;
    if (i > 0) os << (c < 0 ? " - " : " + ");
    os << (i > 0 ? std::abs(c) : c);
    if (i > 0) os << " z^-" << i;
  }
  return os.str();
}

PolyZ poly_mul(const PolyZ& p, const PolyZ& q) {
  std::vector<double> out(p.size() + q.size() - 1, 0.0);
  const auto pc = p.coeffs();
  const auto qc = q.coeffs();
  for (std::size_t i = 0; i < pc.size(); ++i) {
    for (std::size_t j = 0; j < qc.size(); ++j) {
      out[i + j] += pc[i] * qc[j];
    }
  }
  return PolyZ(std::move(out));
}

PredictorSplit predictor_split(const PolyZ& l, const PolyZ& a, int d) {
  if (d < 1) throw DimensionMismatch("predictor_split: delay must be >= 1");
  if (!a.is_monic()) {
    throw DegeneratePolynomial("predictor_split: A must have a_0 = 1, got " +
                               a.to_string());
  }
  if (!l.is_monic()) {
    throw DegeneratePolynomial("predictor_split: L must have l_0 = 1, got " +
                               l.to_string());
  }
  const std::size_t n = a.degree();
  const auto du = static_cast<std::size_t>(d);
  if (l.effective_degree() > n + du - 1) {
    throw DimensionMismatch(
        "predictor_split: deg L exceeds n + d - 1; alpha would need more "
        "than n coefficients");
  }

  std::vector<double> rem(std::max(l.size(), n + du), 0.0);
  std::copy(l.coeffs().begin(), l.coeffs().end(), rem.begin());
  std::vector<double> f(du, 0.0);
  const auto ac = a.coeffs();
  for (std::size_t k = 0; k < du; ++k) {
    f[k] = rem[k];
    for (std::size_t j = 0; j <= n && k + j < rem.size(); ++j) {
      rem[k + j] -= f[k] * ac[j];
    }
  }

  // n == 0 leaves an empty alpha; keep a single zero coefficient so the
  // polynomial is well formed.
  std::vector<double> alpha(std::max<std::size_t>(n, 1), 0.0);
  for (std::size_t i = 0; i < n; ++i) alpha[i] = rem[du + i];
  return {PolyZ(std::move(f)), PolyZ(std::move(alpha))};
}

namespace {

// Strict test: all roots of z^N p(z^-1) satisfy |z| < radius.
// Step-down (Schur-Cohn) recursion on a(z^-1) = p(radius z^-1) / p_0.
bool roots_within(const PolyZ& p, double radius) {
  const PolyZ t = p.trimmed();
  const std::size_t n = t.degree();
  if (n == 0) return radius > 0.0;
  const double c0 = t[0];
  std::vector<double> a(n + 1);
  double scale = 1.0;
  for (std::size_t i = 0; i <= n; ++i) {
    a[i] = t[i] / c0 * scale;
    scale /= radius;
  }
  std::vector<double> next(n + 1);
  for (std::size_t k = n; k >= 1; --k) {
    const double refl = a[k];
    if (!std::isfinite(refl) || std::abs(refl) >= 1.0) return false;
    const double denom = 1.0 - refl * refl;
    for (std::size_t i = 0; i < k; ++i) {
      next[i] = (a[i] - refl * a[k - i]) / denom;
    }
    std::copy(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(k),
              a.begin());
  }
  return true;
}

void require_leading(const PolyZ& p, const char* who) {
  if (p[0] == 0.0) {
    throw DegeneratePolynomial(std::string(who) +
                               ": leading (z^0) coefficient is zero");
  }
}

}  // namespace

bool schur_stable(const PolyZ& p) {
  require_leading(p, "schur_stable");
  return roots_within(p, 1.0 - kSchurBoundaryTol);
}

double max_root_modulus(const PolyZ& p) {
  require_leading(p, "max_root_modulus");
  const PolyZ t = p.trimmed();
  if (t.degree() == 0) return 0.0;

  // Cauchy bound on the forward-power roots.
  double hi = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    hi = std::max(hi, std::abs(t[i] / t[0]));
  }
  hi += 1.0;
  double lo = 0.0;
  while (hi - lo > 1e-13 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (roots_within(t, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace mrac
