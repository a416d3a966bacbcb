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

#include <iosfwd>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "mrac/harness.hpp"

namespace mrac {

/// Trace CSV: header
///   t,y,y_star,u,eps,eps_bar,e,rho,norm_phi,theta_hat_0..theta_hat_{p-1},r,w
/// one row per step, doubles printed with 17 significant digits.
void write_trace_csv(std::ostream& os, const Trace& trace);
std::string trace_csv(const Trace& trace);

/// Reads rows back; `meta` supplies what the CSV does not carry (x0, L, H,
/// box). Throws Error on malformed input or a header that does not match
/// meta.dims.
Trace read_trace_csv(std::istream& is, TraceMeta meta);

/// Ground-truth sidecar: trace metadata plus theta*(t) and wbar(t).
nlohmann::json truth_to_json(const TraceMeta& meta, const GroundTruth& truth);
std::pair<TraceMeta, GroundTruth> truth_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

/// Human-readable check table.
void print_report(std::ostream& os, const VerificationReport& report);

/// gnuplot script rendering y/y*, u and the estimates from `csv_name`.
void write_plot_script(std::ostream& os, const TraceMeta& meta,
                       const std::string& csv_name);

std::string trace_hash(const Trace& trace);

}  // namespace mrac
