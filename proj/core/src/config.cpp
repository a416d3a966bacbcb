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

#include "mrac/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mrac/errors.hpp"

namespace mrac {

using nlohmann::json;

namespace {

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

const json& require(const json& obj, std::string_view key, const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ConfigError(join(path, key), "missing");
  return *it;
}

const json* optional(const json& obj, std::string_view key) {
  if (!obj.is_object()) return nullptr;
  const auto it = obj.find(std::string(key));
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
  return v;
}

long as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<long>();
}

std::uint64_t as_seed(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer seed");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw ConfigError(path, "seed must be non-negative");
  return static_cast<std::uint64_t>(v);
}

std::vector<double> as_vector(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

double number_or(const json& obj, std::string_view key, double fallback,
                 const std::string& path) {
  const json* v = optional(obj, key);
  return v ? as_number(*v, join(path, key)) : fallback;
}

long integer_or(const json& obj, std::string_view key, long fallback,
                const std::string& path) {
  const json* v = optional(obj, key);
  return v ? as_integer(*v, join(path, key)) : fallback;
}

ParamBox box_from_json(const json& j, const std::string& path) {
  auto lo = as_vector(require(j, "lo", path), join(path, "lo"));
  auto hi = as_vector(require(j, "hi", path), join(path, "hi"));
  try {
    return ParamBox(std::move(lo), std::move(hi));
  } catch (const Error& e) {
    throw ConfigError(path, e.what());
  }
}

json box_to_json(const ParamBox& box) { return json{{"lo", box.lo()}, {"hi", box.hi()}}; }

Harmonic harmonic_from_json(const json& j, const std::string& path) {
  Harmonic h;
  h.offset = number_or(j, "offset", 0.0, path);
  h.amplitude = number_or(j, "amplitude", 0.0, path);
  h.rate = number_or(j, "rate", 0.0, path);
  h.phase = number_or(j, "phase", 0.0, path);
  if (const json* wave = optional(j, "wave")) {
    if (*wave == "sin") {
      h.sine = true;
    } else if (*wave != "cos") {
      throw ConfigError(join(path, "wave"), "expected \"cos\" or \"sin\"");
    }
  }
  return h;
}

json harmonic_to_json(const Harmonic& h) {
  return json{{"offset", h.offset},
              {"amplitude", h.amplitude},
              {"rate", h.rate},
              {"phase", h.phase},
              {"wave", h.sine ? "sin" : "cos"}};
}

PlantParams params_from_json(const json& j, int d, const std::string& path) {
  PlantParams p;
  p.a = as_vector(require(j, "a", path), join(path, "a"));
  p.b = as_vector(require(j, "b", path), join(path, "b"));
  p.d = d;
  if (p.b.empty()) throw ConfigError(join(path, "b"), "needs at least b_0");
  return p;
}

CoefficientSchedule plant_from_json(const json& j) {
  const std::string path = "plant";
  const long d = as_integer(require(j, "d", path), "plant.d");
  if (d < 1) throw ConfigError("plant.d", "delay must be >= 1");
  const int di = static_cast<int>(d);

  const json* sched = optional(j, "schedule");
  const std::string mode =
      sched ? require(*sched, "mode", "plant.schedule").get<std::string>() : "constant";
  const std::string sp = "plant.schedule";
  if (mode == "constant") return CoefficientSchedule(params_from_json(j, di, path));
  if (mode == "sinusoidal") {
    schedules::Sinusoidal s;
    s.d = di;
    const json& a = require(*sched, "a", sp);
    const json& b = require(*sched, "b", sp);
    if (!a.is_array() || !b.is_array()) throw ConfigError(sp, "a and b must be arrays");
    for (std::size_t i = 0; i < a.size(); ++i) {
      s.a.push_back(harmonic_from_json(a[i], sp + ".a[" + std::to_string(i) + "]"));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      s.b.push_back(harmonic_from_json(b[i], sp + ".b[" + std::to_string(i) + "]"));
    }
    if (s.b.empty()) throw ConfigError(sp + ".b", "needs at least b_0");
    return CoefficientSchedule(std::move(s));
  }
  if (mode == "piecewise") {
    schedules::Piecewise s;
    const json& segs = require(*sched, "segments", sp);
    if (!segs.is_array()) throw ConfigError(sp + ".segments", "expected an array");
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const std::string p = sp + ".segments[" + std::to_string(i) + "]";
      s.starts.push_back(as_integer(require(segs[i], "start", p), p + ".start"));
      s.params.push_back(params_from_json(segs[i], di, p));
    }
    return CoefficientSchedule(std::move(s));
  }
  if (mode == "table") {
    schedules::Table s;
    s.start = integer_or(*sched, "start", 0, sp);
    const json& a = require(*sched, "a", sp);
    const json& b = require(*sched, "b", sp);
    if (!a.is_array() || !b.is_array() || a.size() != b.size()) {
      throw ConfigError(sp, "a and b must be arrays of equal length");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      PlantParams p;
      p.a = as_vector(a[i], sp + ".a[" + std::to_string(i) + "]");
      p.b = as_vector(b[i], sp + ".b[" + std::to_string(i) + "]");
      p.d = di;
      s.params.push_back(std::move(p));
    }
    return CoefficientSchedule(std::move(s));
  }
  throw ConfigError(sp + ".mode", "unknown schedule mode '" + mode + "'");
}

json plant_to_json(const CoefficientSchedule& plant) {
  json j;
  j["d"] = plant.d();
  std::visit(
      [&j](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, schedules::Constant>) {
          j["a"] = s.params.a;
          j["b"] = s.params.b;
        } else if constexpr (std::is_same_v<T, schedules::Sinusoidal>) {
          json a = json::array();
          json b = json::array();
          for (const auto& h : s.a) a.push_back(harmonic_to_json(h));
          for (const auto& h : s.b) b.push_back(harmonic_to_json(h));
          j["schedule"] = json{{"mode", "sinusoidal"}, {"a", a}, {"b", b}};
        } else if constexpr (std::is_same_v<T, schedules::Piecewise>) {
          json segs = json::array();
          for (std::size_t i = 0; i < s.params.size(); ++i) {
            segs.push_back(json{{"start", s.starts[i]}, {"a", s.params[i].a}, {"b", s.params[i].b}});
          }
          j["schedule"] = json{{"mode", "piecewise"}, {"segments", segs}};
        } else {
          json a = json::array();
          json b = json::array();
          for (const auto& p : s.params) {
            a.push_back(p.a);
            b.push_back(p.b);
          }
          j["schedule"] = json{{"mode", "table"}, {"start", s.start}, {"a", a}, {"b", b}};
        }
      },
      plant.variant());
  return j;
}

}  // namespace

SignalSpec signal_from_json(const json& j, const std::string& path) {
  if (j.is_null()) return signals::Zero{};
  const std::string kind = require(j, "kind", path).get<std::string>();
  if (kind == "zero") return signals::Zero{};
  if (kind == "constant") {
    return signals::Constant{as_number(require(j, "value", path), join(path, "value"))};
  }
  if (kind == "square_wave") {
    signals::SquareWave s;
    s.period = as_integer(require(j, "period", path), join(path, "period"));
    if (s.period < 1) throw ConfigError(join(path, "period"), "must be >= 1");
    s.amplitude = number_or(j, "amplitude", 1.0, path);
    s.phase = integer_or(j, "phase", 0, path);
    return s;
  }
  if (kind == "sinusoid") {
    signals::Sinusoid s;
    s.amplitude = as_number(require(j, "amplitude", path), join(path, "amplitude"));
    s.rate = as_number(require(j, "rate", path), join(path, "rate"));
    s.phase = number_or(j, "phase", 0.0, path);
    return s;
  }
  if (kind == "windowed_sinusoid") {
    signals::WindowedSinusoid s;
    const json& window = require(j, "window", path);
    if (!window.is_array() || window.size() != 2) {
      throw ConfigError(join(path, "window"), "expected [start, end] (start exclusive)");
    }
    s.start = as_integer(window[0], join(path, "window[0]"));
    s.end = as_integer(window[1], join(path, "window[1]"));
    s.amplitude = as_number(require(j, "amplitude", path), join(path, "amplitude"));
    s.rate = as_number(require(j, "rate", path), join(path, "rate"));
    s.phase = number_or(j, "phase", 0.0, path);
    return s;
  }
  if (kind == "table") {
    signals::Table s;
    s.start = integer_or(j, "start", 0, path);
    s.values = as_vector(require(j, "values", path), join(path, "values"));
    return s;
  }
  if (kind == "white_noise") {
    signals::WhiteNoise s;
    s.amplitude = as_number(require(j, "amplitude", path), join(path, "amplitude"));
    if (s.amplitude < 0.0) throw ConfigError(join(path, "amplitude"), "must be >= 0");
    if (const json* seed = optional(j, "seed")) s.seed = as_seed(*seed, join(path, "seed"));
    return s;
  }
  throw ConfigError(join(path, "kind"), "unknown signal kind '" + kind + "'");
}

json signal_to_json(const SignalSpec& spec) {
  json j;
  j["kind"] = std::string(signal_kind(spec));
  std::visit(
      [&j](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, signals::Constant>) {
          j["value"] = s.value;
        } else if constexpr (std::is_same_v<T, signals::SquareWave>) {
          j["period"] = s.period;
          j["amplitude"] = s.amplitude;
          j["phase"] = s.phase;
        } else if constexpr (std::is_same_v<T, signals::Sinusoid>) {
          j["amplitude"] = s.amplitude;
          j["rate"] = s.rate;
          j["phase"] = s.phase;
        } else if constexpr (std::is_same_v<T, signals::WindowedSinusoid>) {
          j["window"] = {s.start, s.end};
          j["amplitude"] = s.amplitude;
          j["rate"] = s.rate;
          j["phase"] = s.phase;
        } else if constexpr (std::is_same_v<T, signals::Table>) {
          j["start"] = s.start;
          j["values"] = s.values;
        } else if constexpr (std::is_same_v<T, signals::WhiteNoise>) {
          j["amplitude"] = s.amplitude;
          if (s.seed) j["seed"] = *s.seed;
        }
      },
      spec);
  return j;
}

namespace {

ExperimentConfig parse_config_impl(const json& j) {
  if (!j.is_object()) throw ConfigError("", "configuration must be a JSON object");
  ExperimentConfig cfg;
  try {
    cfg.plant = plant_from_json(require(j, "plant", ""));
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("plant", e.what());
  }

  const json& ref = require(j, "reference", "");
  const auto l = as_vector(require(ref, "L", "reference"), "reference.L");
  const auto h = as_vector(require(ref, "H", "reference"), "reference.H");
  if (l.empty()) throw ConfigError("reference.L", "must not be empty");
  if (h.empty()) throw ConfigError("reference.H", "must not be empty");
  cfg.reference = ReferenceModel::make(PolyZ(l), PolyZ(h), cfg.plant.d());

  const json& est = require(j, "estimator", "");
  if (const json* delta = optional(est, "delta")) {
    if (delta->is_string()) {
      const auto s = delta->get<std::string>();
      if (s != "inf" && s != "infinity") {
        throw ConfigError("estimator.delta", "expected a number or \"inf\"");
      }
      cfg.delta = kInfiniteDelta;
    } else {
      cfg.delta = as_number(*delta, "estimator.delta");
    }
  }
  if (const json* box = optional(est, "box")) {
    cfg.s_box = box_from_json(*box, "estimator.box");
  }
  if (const json* sab = optional(est, "s_ab_box")) {
    PlantBoxSpec spec{box_from_json(*sab, "estimator.s_ab_box"), {}};
    spec.options.samples =
        static_cast<int>(integer_or(*sab, "samples", spec.options.samples, "estimator.s_ab_box"));
    spec.options.margin = number_or(*sab, "margin", spec.options.margin, "estimator.s_ab_box");
    if (const json* seed = optional(*sab, "seed")) {
      spec.options.seed = as_seed(*seed, "estimator.s_ab_box.seed");
    }
    cfg.s_ab = std::move(spec);
  }

  const json& sim = require(j, "sim", "");
  cfg.t0 = integer_or(sim, "t0", 0, "sim");
  cfg.steps = as_integer(require(sim, "steps", "sim"), "sim.steps");
  cfg.x0 = as_vector(require(sim, "x0", "sim"), "sim.x0");
  if (const json* th = optional(sim, "theta0")) {
    if (th->is_string()) {
      if (*th != "midpoint") throw ConfigError("sim.theta0", "expected \"midpoint\" or an array");
    } else {
      cfg.theta0 = as_vector(*th, "sim.theta0");
    }
  }
  if (const json* seed = optional(sim, "seed")) cfg.seed = as_seed(*seed, "sim.seed");

  if (const json* sig = optional(j, "signals")) {
    if (const json* r = optional(*sig, "r")) cfg.r = signal_from_json(*r, "signals.r");
    if (const json* w = optional(*sig, "w")) cfg.w = signal_from_json(*w, "signals.w");
  }

  validate_config(cfg);
  return cfg;
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
  try {
    return parse_config_impl(j);
  } catch (const json::exception& e) {
    throw ConfigError("", std::string("malformed configuration: ") + e.what());
  }
}

RunResult run_experiment(const ExperimentConfig& cfg) {
  RunResult result = run_closed_loop(cfg);
  result.trace.meta.config_hash = config_hash(cfg);
  return result;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open configuration file");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(path.string(), std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

json config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["plant"] = plant_to_json(cfg.plant);
  j["reference"] = json{{"L", std::vector<double>(cfg.reference.l.coeffs().begin(),
                                                  cfg.reference.l.coeffs().end())},
                        {"H", std::vector<double>(cfg.reference.h.coeffs().begin(),
                                                  cfg.reference.h.coeffs().end())}};
  json est;
  if (std::isinf(cfg.delta)) {
    est["delta"] = "inf";
  } else {
    est["delta"] = cfg.delta;
  }
  if (cfg.s_box) est["box"] = box_to_json(*cfg.s_box);
  if (cfg.s_ab) {
    json sab = box_to_json(cfg.s_ab->box);
    sab["samples"] = cfg.s_ab->options.samples;
    sab["margin"] = cfg.s_ab->options.margin;
    sab["seed"] = cfg.s_ab->options.seed;
    est["s_ab_box"] = sab;
  }
  j["estimator"] = est;
  json sim{{"t0", cfg.t0}, {"steps", cfg.steps}, {"x0", cfg.x0}, {"seed", cfg.seed}};
  if (cfg.theta0) {
    sim["theta0"] = *cfg.theta0;
  } else {
    sim["theta0"] = "midpoint";
  }
  j["sim"] = sim;
  j["signals"] = json{{"r", signal_to_json(cfg.r)}, {"w", signal_to_json(cfg.w)}};
  return j;
}

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string config_hash(const ExperimentConfig& cfg) {
  return content_hash(config_to_json(cfg).dump());
}

}  // namespace mrac
