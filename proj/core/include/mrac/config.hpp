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

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mrac/harness.hpp"

namespace mrac {

/// Parses the JSON experiment description:
///
///   { "plant":     { "a": [...], "b": [...], "d": 1, "schedule": {...}? },
///     "reference": { "L": [...], "H": [...] },
///     "estimator": { "delta": "inf" | x, "box": {lo, hi} | "s_ab_box": {...} },
///     "sim":       { "t0", "steps", "x0", "theta0": "midpoint" | [...], "seed" },
///     "signals":   { "r": {"kind": ...}, "w": {"kind": ...} } }
///
/// Throws ConfigError with a dotted field path (e.g. "sim.x0") on any
/// malformed or invalid entry; the result has passed validate_config.
ExperimentConfig parse_config(const nlohmann::json& j);

ExperimentConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config: parse_config(config_to_json(c)) == c.
nlohmann::json config_to_json(const ExperimentConfig& cfg);

nlohmann::json signal_to_json(const SignalSpec& spec);
SignalSpec signal_from_json(const nlohmann::json& j, const std::string& path);

/// 64-bit FNV-1a of `bytes`, as 16 hex digits.
std::string content_hash(std::string_view bytes);

/// Hash of the canonical (key-sorted, compact) JSON form.
std::string config_hash(const ExperimentConfig& cfg);

/// run_closed_loop with the configuration hash stamped into the metadata.
RunResult run_experiment(const ExperimentConfig& cfg);

}  // namespace mrac
