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

#include "mrac/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "mrac/config.hpp"
#include "mrac/errors.hpp"

namespace mrac {

using nlohmann::json;

namespace {

void put(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::vector<std::string> header_for(int p) {
  std::vector<std::string> h = {"t", "y", "y_star", "u", "eps", "eps_bar", "e", "rho", "norm_phi"};
  for (int i = 0; i < p; ++i) h.push_back("theta_hat_" + std::to_string(i));
  h.emplace_back("r");
  h.emplace_back("w");
  return h;
}

double parse_double(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("trace line " + std::to_string(line) + ": bad number '" + s + "'");
  }
}

json double_or_inf(double v) { return std::isinf(v) ? json("inf") : json(v); }

double read_double_or_inf(const json& j) {
  return j.is_string() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkipped:
      return "skip";
  }
  return "?";
}

}  // namespace

void write_trace_csv(std::ostream& os, const Trace& trace) {
  const auto header = header_for(trace.meta.dims.p());
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const TraceRow& row : trace.rows) {
    os << row.t;
    for (double v : {row.y, row.y_star, row.u, row.eps, row.eps_bar, row.e_next}) {
      os << ',';
      put(os, v);
    }
    os << ',' << row.rho << ',';
    put(os, row.norm_phi);
    for (double v : row.theta_hat) {
      os << ',';
      put(os, v);
    }
    os << ',';
    put(os, row.r);
    os << ',';
    put(os, row.w);
    os << '\n';
  }
}

std::string trace_csv(const Trace& trace) {
  std::ostringstream os;
  write_trace_csv(os, trace);
  return os.str();
}

Trace read_trace_csv(std::istream& is, TraceMeta meta) {
  Trace trace;
  const int p = meta.dims.p();
  trace.meta = std::move(meta);
  const auto expected = header_for(p);

  std::string line;
  if (!std::getline(is, line)) throw Error("trace: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (split_csv(line) != expected) {
    throw Error("trace: header does not match n + m + d = " + std::to_string(p));
  }
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != expected.size()) {
      throw Error("trace line " + std::to_string(lineno) + ": expected " +
                  std::to_string(expected.size()) + " columns");
    }
    TraceRow row;
    std::size_t k = 0;
    row.t = static_cast<long>(parse_double(cells[k++], lineno));
    row.y = parse_double(cells[k++], lineno);
    row.y_star = parse_double(cells[k++], lineno);
    row.u = parse_double(cells[k++], lineno);
    row.eps = parse_double(cells[k++], lineno);
    row.eps_bar = parse_double(cells[k++], lineno);
    row.e_next = parse_double(cells[k++], lineno);
    row.rho = static_cast<int>(parse_double(cells[k++], lineno));
    row.norm_phi = parse_double(cells[k++], lineno);
    for (int i = 0; i < p; ++i) row.theta_hat.push_back(parse_double(cells[k++], lineno));
    row.r = parse_double(cells[k++], lineno);
    row.w = parse_double(cells[k++], lineno);
    const long expect_t = trace.meta.t0 + static_cast<long>(trace.rows.size());
    if (row.t != expect_t) {
      throw Error("trace line " + std::to_string(lineno) + ": expected t = " +
                  std::to_string(expect_t));
    }
    trace.rows.push_back(std::move(row));
  }
  if (trace.rows.empty()) throw Error("trace: no rows");
  return trace;
}

json truth_to_json(const TraceMeta& meta, const GroundTruth& truth) {
  json m;
  m["dims"] = json{{"n", meta.dims.n}, {"m", meta.dims.m}, {"d", meta.dims.d},
                   {"n_ref", meta.dims.n_ref}};
  m["t0"] = meta.t0;
  m["x0"] = meta.x0;
  m["L"] = std::vector<double>(meta.reference.l.coeffs().begin(), meta.reference.l.coeffs().end());
  m["H"] = std::vector<double>(meta.reference.h.coeffs().begin(), meta.reference.h.coeffs().end());
  m["box"] = json{{"lo", meta.box.lo()}, {"hi", meta.box.hi()}};
  m["delta"] = double_or_inf(meta.delta);
  m["config_hash"] = meta.config_hash;
  m["conventions"] = meta.conventions;

  json j;
  j["meta"] = m;
  j["theta_star"] = truth.theta_star;
  j["wbar_start"] = truth.wbar_start;
  j["wbar"] = truth.wbar;
  j["constant_plant"] = truth.constant_plant;
  j["spectral_floor"] = truth.spectral_floor;
  return j;
}

std::pair<TraceMeta, GroundTruth> truth_from_json(const json& j) {
  try {
    const json& m = j.at("meta");
    TraceMeta meta;
    meta.dims = Dims{m.at("dims").at("n").get<int>(), m.at("dims").at("m").get<int>(),
                     m.at("dims").at("d").get<int>(), m.at("dims").at("n_ref").get<int>()};
    meta.t0 = m.at("t0").get<long>();
    meta.x0 = m.at("x0").get<std::vector<double>>();
    meta.reference = ReferenceModel{PolyZ(m.at("L").get<std::vector<double>>()),
                                    PolyZ(m.at("H").get<std::vector<double>>()), meta.dims.d};
    meta.box = ParamBox(m.at("box").at("lo").get<std::vector<double>>(),
                        m.at("box").at("hi").get<std::vector<double>>());
    meta.delta = read_double_or_inf(m.at("delta"));
    meta.config_hash = m.value("config_hash", "");
    meta.conventions = m.value("conventions", std::map<std::string, std::string>{});

    GroundTruth truth;
    truth.t0 = meta.t0;
    truth.theta_star = j.at("theta_star").get<std::vector<std::vector<double>>>();
    truth.wbar_start = j.at("wbar_start").get<long>();
    truth.wbar = j.at("wbar").get<std::vector<double>>();
    truth.constant_plant = j.at("constant_plant").get<bool>();
    truth.spectral_floor = j.at("spectral_floor").get<double>();
    return {std::move(meta), std::move(truth)};
  } catch (const json::exception& e) {
    throw Error(std::string("ground-truth sidecar: ") + e.what());
  }
}

json report_to_json(const VerificationReport& report) {
  json checks = json::object();
  for (const auto& c : report.checks) {
    checks[c.name] = json{{"status", status_name(c.status)},
                          {"worst_margin", c.worst_margin},
                          {"worst_t", c.worst_t},
                          {"detail", c.detail}};
  }
  return json{{"passed", report.passed()}, {"checks", checks}, {"constants", report.constants}};
}

void print_report(std::ostream& os, const VerificationReport& report) {
  for (const auto& c : report.checks) {
    os << std::left << std::setw(26) << c.name << ' ' << std::setw(5) << status_name(c.status);
    if (c.status != CheckStatus::kSkipped) {
      os << "  worst margin " << std::setw(13) << std::setprecision(6) << c.worst_margin
         << " at t = " << c.worst_t;
    }
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  for (const auto& [k, v] : report.constants) {
    os << std::left << std::setw(26) << k << ' ' << std::setprecision(10) << v << '\n';
  }
  os << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
}

void write_plot_script(std::ostream& os, const TraceMeta& meta, const std::string& csv_name) {
  const int p = meta.dims.p();
  const int first_theta = 10;  // 1-based gnuplot column of theta_hat_0
  os << "# gnuplot script: y/y* and u, then the parameter estimates\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set terminal pngcairo size 900,700\n"
     << "set output 'tracking.png'\n"
     << "set multiplot layout 2,1\n"
     << "set ylabel 'output'\n"
     << "plot '" << csv_name << "' using 1:2 with lines lw 1.5 title 'y', \\\n"
     << "     '' using 1:3 with lines dt 2 title 'y*'\n"
     << "set ylabel 'u'\nset xlabel 't'\n"
     << "plot '" << csv_name << "' using 1:4 with lines title 'u'\n"
     << "unset multiplot\n"
     << "set output 'estimates.png'\n"
     << "set ylabel 'theta_hat'\nset xlabel 't'\n"
     << "plot ";
  for (int i = 0; i < p; ++i) {
    os << (i ? ", \\\n     " : "") << "'" << csv_name << "' using 1:" << first_theta + i
       << " with lines title 'theta_hat_" << i << "'";
  }
  os << "\nunset output\n";
}

std::string trace_hash(const Trace& trace) { return content_hash(trace_csv(trace)); }

}  // namespace mrac
