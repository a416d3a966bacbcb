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

#include "mraclab/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mrac/config.hpp"
#include "mrac/errors.hpp"
#include "mrac/harness.hpp"
#include "mrac/trace_io.hpp"

namespace mraclab {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kTraceFile = "trace.csv";
constexpr const char* kSummaryFile = "summary.json";
constexpr const char* kPlotFile = "plot.gp";
constexpr const char* kTruthFile = "truth.json";

// Raised for a lambda outside (floor, 1).
struct LambdaOutOfRange : mrac::Error {
  using mrac::Error::Error;
};

double pick_lambda(std::optional<double> requested, double floor) {
  if (!requested) return 0.5 * (1.0 + floor);
  const double lambda = *requested;
  if (!(lambda > floor) || !(lambda < 1.0)) {
    std::ostringstream msg;
    msg << std::setprecision(10) << "--lambda " << lambda
        << " rejected: the decay fit needs spectral_floor < lambda < 1 (spectral_floor = " << floor
        << ")";
    throw LambdaOutOfRange(msg.str());
  }
  return lambda;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw mrac::Error("cannot write " + path.string());
  f << text;
  if (!f) throw mrac::Error("write failed: " + path.string());
}

json read_json(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw mrac::Error("cannot open " + path.string());
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw mrac::Error(path.string() + ": " + e.what());
  }
}

json box_json(const mrac::ParamBox& box) { return json{{"lo", box.lo()}, {"hi", box.hi()}}; }

json summary_json(const mrac::ExperimentConfig& cfg, const mrac::RunResult& run,
                  const mrac::VerificationReport& report) {
  const mrac::Trace& trace = run.trace;
  json j;
  j["config"] = mrac::config_to_json(cfg);
  j["config_hash"] = trace.meta.config_hash;
  j["trace_hash"] = mrac::trace_hash(trace);
  j["rows"] = trace.rows.size();
  j["t0"] = trace.t0();
  j["t_end"] = trace.t_end();
  j["box"] = box_json(trace.meta.box);
  j["conventions"] = trace.meta.conventions;
  j["verification"] = mrac::report_to_json(report);
  return j;
}

void write_outputs(const fs::path& dir, const mrac::RunResult& run, const json& summary) {
  fs::create_directories(dir);
  write_text(dir / kTraceFile, mrac::trace_csv(run.trace));
  write_text(dir / kTruthFile, mrac::truth_to_json(run.trace.meta, run.truth).dump(1) + "\n");
  write_text(dir / kSummaryFile, summary.dump(2) + "\n");
  std::ostringstream plot;
  mrac::write_plot_script(plot, run.trace.meta, kTraceFile);
  write_text(dir / kPlotFile, plot.str());
}

struct RunOptions {
  std::string config;
  std::string out;
  std::optional<long> steps;
  std::optional<std::uint64_t> seed;
};

int cmd_run(const RunOptions& opt, std::ostream& out) {
  mrac::ExperimentConfig cfg = mrac::load_config(opt.config);
  if (opt.steps) cfg.steps = *opt.steps;
  if (opt.seed) cfg.seed = *opt.seed;
  mrac::validate_config(cfg);

  const mrac::RunResult run = mrac::run_experiment(cfg);
  const double lambda = pick_lambda(std::nullopt, run.truth.spectral_floor);
  const mrac::VerificationReport report = mrac::verify(run.trace, run.truth, lambda);
  write_outputs(opt.out, run, summary_json(cfg, run, report));
  out << "wrote " << run.trace.rows.size() << " rows to " << (fs::path(opt.out) / kTraceFile).string()
      << '\n';
  return kExitOk;
}

struct VerifyOptions {
  std::string config;
  std::string trace;
  std::string truth;
  std::optional<double> lambda;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  mrac::Trace trace;
  mrac::GroundTruth truth;
  if (!opt.config.empty()) {
    mrac::RunResult run = mrac::run_experiment(mrac::load_config(opt.config));
    trace = std::move(run.trace);
    truth = std::move(run.truth);
  } else {
    const fs::path trace_path(opt.trace);
    const fs::path truth_path =
        opt.truth.empty() ? trace_path.parent_path() / kTruthFile : fs::path(opt.truth);
    auto [meta, t] = mrac::truth_from_json(read_json(truth_path));
    std::ifstream f(trace_path);
    if (!f) throw mrac::Error("cannot open " + trace_path.string());
    trace = mrac::read_trace_csv(f, std::move(meta));
    truth = std::move(t);
  }
  const double lambda = pick_lambda(opt.lambda, truth.spectral_floor);
  const mrac::VerificationReport report = mrac::verify(trace, truth, lambda);
  mrac::print_report(out, report);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_reproduce(const std::string& dir, std::ostream& out) {
  const mrac::ExperimentConfig cfg = mrac::example_config();
  const mrac::RunResult run = mrac::run_experiment(cfg);
  const double lambda = pick_lambda(std::nullopt, run.truth.spectral_floor);
  const mrac::VerificationReport report = mrac::verify(run.trace, run.truth, lambda);

  json summary = summary_json(cfg, run, report);
  const auto regimes = mrac::regime_rms(run.trace);
  json reg = json::array();
  out << std::left << std::setw(18) << "regime" << std::setw(14) << "window" << "rms eps\n";
  for (const auto& r : regimes) {
    reg.push_back(json{{"name", r.name}, {"t_begin", r.t_begin}, {"t_end", r.t_end},
                       {"rms_eps", r.rms_eps}});
    const std::string window =
        "[" + std::to_string(r.t_begin) + "," + std::to_string(r.t_end) + "]";
    out << std::left << std::setw(18) << r.name << std::setw(14) << window
        << std::setprecision(6) << r.rms_eps << '\n';
  }
  summary["regimes"] = reg;
  summary["estimate_ranges"] = box_json(mrac::estimate_range(run.trace));
  write_outputs(dir, run, summary);
  out << "verification " << (report.passed() ? "passed" : "FAILED") << "; outputs in " << dir
      << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete-time model reference adaptive control lab", "mraclab"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "simulate a configuration and write trace, summary, plot");
  run->add_option("--config", run_opt.config, "experiment JSON")->required();
  run->add_option("--out", run_opt.out, "output directory")->required();
  run->add_option("--steps", run_opt.steps, "override sim.steps")->check(CLI::PositiveNumber);
  run->add_option("--seed", run_opt.seed, "override sim.seed");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "check a run against the stability properties");
  auto* cfg_flag = verify->add_option("--config", verify_opt.config, "rerun and verify");
  auto* trace_flag = verify->add_option("--trace", verify_opt.trace, "verify an existing trace");
  verify->add_option("--truth", verify_opt.truth, "ground-truth sidecar (default: truth.json)")
      ->needs(trace_flag);
  verify->add_option("--lambda", verify_opt.lambda, "decay rate for the bound fit");
  cfg_flag->excludes(trace_flag);
  verify->require_option(1, 3);

  std::string repro_dir = "reproduce_out";
  auto* repro = app.add_subcommand("reproduce", "rerun the time-varying example");
  repro->add_option("--out", repro_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  if (*verify && verify_opt.config.empty() && verify_opt.trace.empty()) {
    err << "verify: one of --config or --trace is required\n";
    return kExitBadInput;
  }

  try {
    if (*run) return cmd_run(run_opt, out);
    if (*verify) return cmd_verify(verify_opt, out);
    return cmd_reproduce(repro_dir, out);
  } catch (const mrac::ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const LambdaOutOfRange& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  } catch (const mrac::NumericAbort& e) {
    err << "numeric abort: " << e.what() << '\n';
    return kExitNumericAbort;
  } catch (const mrac::CorruptedState& e) {
    err << "numeric abort: " << e.what() << '\n';
    return kExitNumericAbort;
  } catch (const mrac::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace mraclab
