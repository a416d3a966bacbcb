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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mrac/controller.hpp"
#include "mrac/estimator.hpp"
#include "mrac/plant_sim.hpp"
#include "mrac/system.hpp"

namespace mrac {

// ---------------------------------------------------------------------------
// Experiment description
// ---------------------------------------------------------------------------

struct PlantBoxSpec {
  ParamBox box;  ///< plant-space box S_ab, layout (a_1..a_n, b_0..b_m)
  BoxBuildOptions options;
  friend bool operator==(const PlantBoxSpec& x, const PlantBoxSpec& y) {
    return x.box == y.box && x.options.samples == y.options.samples &&
           x.options.margin == y.options.margin && x.options.seed == y.options.seed;
  }
};

struct ExperimentConfig {
  CoefficientSchedule plant;
  ReferenceModel reference;
  double delta = kInfiniteDelta;
  /// At least one of the two boxes is required. An explicit S wins; the plant
  /// box is still used for the spectral floor.
  std::optional<PlantBoxSpec> s_ab;
  std::optional<ParamBox> s_box;
  long t0 = 0;
  long steps = 1000;  ///< horizon T; the trace has T + 1 rows
  std::vector<double> x0;
  std::optional<std::vector<double>> theta0;  ///< nullopt = midpoint of S
  std::uint64_t seed = 1;
  SignalSpec r = signals::Zero{};
  SignalSpec w = signals::Zero{};

  Dims dims() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) =
      default;
};

/// Checks every invariant of the configuration. Throws ConfigError naming
/// the offending field.
void validate_config(const ExperimentConfig& cfg);

/// S for this configuration (explicit box or image of the plant box).
ParamBox resolve_box(const ExperimentConfig& cfg);

/// Spectral floor over the plant box, or over the schedule samples on the
/// horizon when only S is given.
double resolve_spectral_floor(const ExperimentConfig& cfg);

/// Conventions recorded in every trace's metadata.
std::map<std::string, std::string> trace_conventions();

// ---------------------------------------------------------------------------
// Trace and ground truth
// ---------------------------------------------------------------------------

/// One closed-loop step t: signals at t, the estimate theta_hat(t) used by the
/// control law, and the estimator outputs e(t+1), rho(t), nu(t).
struct TraceRow {
  long t = 0;
  double y = 0.0;
  double y_star = 0.0;
  double u = 0.0;
  double eps = 0.0;
  double eps_bar = 0.0;
  double e_next = 0.0;
  int rho = 0;
  double norm_phi = 0.0;
  std::vector<double> theta_hat;
  std::vector<double> nu;  ///< not persisted in CSV
  double r = 0.0;
  double w = 0.0;
};

struct TraceMeta {
  Dims dims;
  long t0 = 0;
  std::vector<double> x0;
  ReferenceModel reference;
  ParamBox box;
  double delta = kInfiniteDelta;
  std::string config_hash;
  std::map<std::string, std::string> conventions;
};

class Trace {
 public:
  TraceMeta meta;
  std::vector<TraceRow> rows;

  long t0() const { return meta.t0; }
  long t_end() const { return meta.t0 + static_cast<long>(rows.size()) - 1; }
  const TraceRow& row(long t) const {
    return rows.at(static_cast<std::size_t>(t - meta.t0));
  }

  /// y(t), u(t) read from rows or x0; older samples are zero.
  double y_at(long t) const;
  double u_at(long t) const;
  /// phi(t) rebuilt from the y/u columns and x0.
  std::vector<double> phi(long t) const;
  /// ybar(t) from the y column.
  double ybar_at(long t) const;
  /// ybar*(t) = sum h_i r(t-d-i) from the r column (r = 0 before t0).
  double ybar_star_at(long t) const;
};

/// Quantities only the simulator knows.
struct GroundTruth {
  long t0 = 0;
  std::vector<std::vector<double>> theta_star;  ///< theta*(t), t in [t0, t_end]
  long wbar_start = 0;                          ///< t0 - d + 1
  std::vector<double> wbar;                     ///< wbar(t), t >= wbar_start
  bool constant_plant = true;
  double spectral_floor = 0.0;

  const std::vector<double>& theta_star_at(long t) const {
    return theta_star.at(static_cast<std::size_t>(t - t0));
  }
  double wbar_at(long t) const {
    return wbar.at(static_cast<std::size_t>(t - wbar_start));
  }
  bool noise_free() const;
};

struct RunResult {
  Trace trace;
  GroundTruth truth;
};

/// Runs the loop for t = t0..t0+T: reference, control, plant, ybar,
/// estimator, record. Deterministic. Throws NumericAbort on NaN/Inf.
RunResult run_closed_loop(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

enum class CheckStatus { kPass, kFail, kSkipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  /// Smallest slack seen (>= 0 passes; tolerance already subtracted).
  double worst_margin = 0.0;
  long worst_t = 0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::map<std::string, double> constants;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  void merge(const VerificationReport& other);
};

inline constexpr double kProp1Tol = 1e-9;
inline constexpr double kIdentityTol = 1e-8;

/// Both estimator inequalities. The second one (needs constant theta*) is
/// checked at tau = t-1 and tau = t0; telescoping covers every other pair.
VerificationReport check_prop1(const Trace& trace, const GroundTruth& truth);

/// Residuals of the error identities and of the predictor form. The
/// purely algebraic one (estimate-difference form) is checked on every
/// trace; the ones involving theta* are skipped when theta* varies.
VerificationReport check_identities(const Trace& trace, const GroundTruth& truth);

/// Smallest c with ||phi(t)|| <= c lambda^(t-t0) ||x0|| +
/// sum_{j=t0}^t c lambda^(t-j) (|r(j)| + |w(j)|) on the trace.
double fit_decay_bound(const Trace& trace, double lambda);

struct TrackingEnergy {
  double total = 0.0;
  std::vector<double> partial;  ///< partial[k] = sum over t in [t0+d, t0+d+k]
};

/// Sum of eps(t)^2 for t >= t0 + d.
TrackingEnergy tracking_energy(const Trace& trace);

/// All checks plus fitted constants; `lambda` must exceed the floor.
VerificationReport verify(const Trace& trace, const GroundTruth& truth,
                          double lambda);

// ---------------------------------------------------------------------------
// Published example
// ---------------------------------------------------------------------------

/// The time-varying second-order example: delta = inf, L = 1 - z^-2/2,
/// H = 1/2, unit square-wave reference of period 200, disturbance
/// cos(10 t)/10 on (200, 500], estimates at box midpoints, t in [0, 1000].
ExperimentConfig example_config();

struct RegimeStats {
  std::string name;
  long t_begin = 0;  ///< inclusive
  long t_end = 0;    ///< inclusive
  double rms_eps = 0.0;
};

std::vector<RegimeStats> regime_rms(const Trace& trace);

/// Per-coordinate min/max of theta_hat over the trace.
ParamBox estimate_range(const Trace& trace);

RunResult reproduce_example();

}  // namespace mrac
