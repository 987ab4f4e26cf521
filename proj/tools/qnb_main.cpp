// Copyright 2026 The qnb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qnb: compute fidelity-based nonlocal and nonbilocal correlation measures,
// sweep the isotropic/Werner families, and run verification suites.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnb/bounds.hpp"
#include "qnb/json_io.hpp"
#include "qnb/measures.hpp"
#include "qnb/states.hpp"
#include "qnb/sweep.hpp"
#include "qnb/verify.hpp"
#include "qnb/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitConvergence = 2;
constexpr int kExitVerifyFailure = 3;

/// Locale-independent shortest representation at 12 significant digits.
std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

json metadata_json(const qnb::OptimizerConfig& cfg, const std::string& feasible) {
  json md;
  md["tool_version"] = qnb::kVersion;
  md["seed"] = cfg.seed;
  md["starts"] = cfg.starts;
  md["max_iters"] = cfg.max_iters;
  md["step_tolerance"] = cfg.step_tolerance;
  md["stall_window"] = cfg.stall_window;
  md["fd_step"] = cfg.fd_step;
  md["degeneracy_tolerance"] = cfg.degeneracy_tolerance;
  md["certify_samples"] = cfg.certify_samples;
  md["feasible_set"] = feasible;
  md["measured_side"] = "a";
  return md;
}

std::string metadata_line(const std::string& command, const qnb::OptimizerConfig& cfg) {
  std::string line = "# qnb ";
  line += qnb::kVersion;
  line += " " + command;
  line += " seed=" + std::to_string(cfg.seed);
  line += " starts=" + std::to_string(cfg.starts);
  line += " max_iters=" + std::to_string(cfg.max_iters);
  line += " step_tolerance=" + format_number(cfg.step_tolerance);
  line += " stall_window=" + std::to_string(cfg.stall_window);
  line += " fd_step=" + format_number(cfg.fd_step);
  line += " degeneracy_tolerance=" + format_number(cfg.degeneracy_tolerance);
  line += " certify_samples=" + std::to_string(cfg.certify_samples);
  return line;
}

json result_json(const qnb::MeasureResult& r) {
  json j;
  j["value"] = r.value;
  json rep;
  rep["starts"] = r.report.starts;
  rep["best_objective"] = r.report.best_objective;
  rep["iterations"] = r.report.iterations;
  rep["block_dims"] = r.report.block_dims;
  rep["optimized"] = r.report.optimized;
  j["optimizer_report"] = std::move(rep);
  if (r.certified_gap) {
    j["certified_gap"] = *r.certified_gap;
  } else {
    j["certified_gap"] = nullptr;
  }
  return j;
}

struct MeasureArgs {
  std::string state_a;
  std::string state_b;
  std::string which = "all";
  std::string feasible = "general";
  qnb::OptimizerConfig config;
};

int run_measure(const MeasureArgs& args) {
  const qnb::DensityMatrix a = qnb::load_state_as_density(args.state_a);
  const qnb::FeasibleSet feasible =
      args.feasible == "product" ? qnb::FeasibleSet::product : qnb::FeasibleSet::general;

  json measures;
  const bool all = args.which == "all";
  if (all || args.which == "fmin") {
    measures["f_min"] = result_json(qnb::f_min(a, 0, args.config));
  }
  if (all || args.which == "hsmin") {
    measures["hs_min"] = result_json(qnb::hs_min(a, 0, args.config));
  }
  if (all || args.which == "gd") {
    measures["geometric_discord"] =
        result_json(qnb::geometric_discord_restricted(a, 0, args.config));
  }
  if (all || args.which == "nonbilocal") {
    if (args.state_b.empty()) {
      if (!all) throw qnb::Error("nonbilocal needs --state-b");
    } else {
      const qnb::DensityMatrix b = qnb::load_state_as_density(args.state_b);
      measures["nonbilocal"] = result_json(qnb::nonbilocal(a, b, args.config, feasible));
    }
  }

  json out;
  out["measures"] = std::move(measures);
  out["metadata"] = metadata_json(args.config, args.feasible);
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

struct SweepArgs {
  std::string family = "isotropic";
  int dim = 2;
  double x_min = 0.0;
  double x_max = 1.0;
  int steps = 101;
  std::string out_path;
  std::string feasible = "general";
  qnb::OptimizerConfig config;
};

int run_sweep(const SweepArgs& args) {
  const qnb::StateFamily family =
      args.family == "werner" ? qnb::StateFamily::werner : qnb::StateFamily::isotropic;
  const qnb::FeasibleSet feasible =
      args.feasible == "product" ? qnb::FeasibleSet::product : qnb::FeasibleSet::general;

  const qnb::SweepResult result =
      qnb::sweep(family, args.dim, args.x_min, args.x_max, args.steps, args.config, feasible);

  std::ofstream out(args.out_path);
  if (!out) throw qnb::Error("cannot open output file: " + args.out_path);
  const std::string command = "sweep family=" + args.family + " dim=" + std::to_string(args.dim) +
                              " x_min=" + format_number(args.x_min) +
                              " x_max=" + format_number(args.x_max) +
                              " steps=" + std::to_string(args.steps) +
                              " feasible_set=" + args.feasible;
  out << metadata_line(command, args.config) << '\n';
  out << "x,f_min,nonbilocal,bound_thm1,bound_thm2\n";
  for (const auto& row : result.rows) {
    out << format_number(row.x) << ',' << format_number(row.f_min) << ','
        << format_number(row.nonbilocal) << ',' << format_number(row.bound_thm1) << ','
        << (row.bound_thm2 ? format_number(*row.bound_thm2) : "NA") << '\n';
  }
  out.close();

  if (auto violation = qnb::sweep_violation(result.rows)) {
    std::cerr << "sweep row invariant violated: " << *violation << '\n';
    return kExitConvergence;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  int trials = 20;
  qnb::OptimizerConfig config;
};

int run_verify(const VerifyArgs& args) {
  const qnb::VerifySuite suite = qnb::parse_verify_suite(args.suite);
  std::cout << metadata_line(
                   "verify suite=" + args.suite + " trials=" + std::to_string(args.trials),
                   args.config)
            << '\n';

  const qnb::VerifyOutcome outcome = qnb::run_verify_suite(suite, args.trials, args.config.seed);
  for (std::size_t i = 0; i < outcome.trials.size(); ++i) {
    const auto& t = outcome.trials[i];
    std::printf("trial %3zu: %s violation=%s %s\n", i + 1, t.pass ? "PASS" : "FAIL",
                format_number(t.violation).c_str(), t.detail.c_str());
  }
  if (suite == qnb::VerifySuite::superactivation_search) {
    std::printf("SUITE %s: %d finding(s) in %d trial(s)\n", qnb::verify_suite_name(suite),
                outcome.findings, args.trials);
    return kExitOk;  // a search, not an assertion
  }
  std::printf("SUITE %s: %s, worst violation %s\n", qnb::verify_suite_name(suite),
              outcome.all_pass ? "PASS" : "FAIL", format_number(outcome.worst_violation).c_str());
  return outcome.all_pass ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fidelity-based nonlocal and nonbilocal correlation measures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("qnb ") + qnb::kVersion);

  MeasureArgs margs;
  CLI::App* measure = app.add_subcommand("measure", "measure states supplied as JSON files");
  measure->add_option("--state-a", margs.state_a, "first state file")->required();
  measure->add_option("--state-b", margs.state_b, "second state file (for nonbilocal)");
  measure->add_option("--which", margs.which, "measure selector")
      ->check(CLI::IsMember({"all", "fmin", "nonbilocal", "hsmin", "gd"}));
  measure->add_option("--seed", margs.config.seed, "optimizer/oracle seed");
  measure->add_option("--starts", margs.config.starts, "multi-start count")
      ->check(CLI::PositiveNumber);
  measure->add_option("--feasible-set", margs.feasible, "nonbilocal feasible set")
      ->check(CLI::IsMember({"general", "product"}));

  SweepArgs sargs;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep a state family and write CSV");
  sweep_cmd->add_option("--family", sargs.family, "state family")
      ->required()
      ->check(CLI::IsMember({"isotropic", "werner"}));
  // self-paired sweeps live on m^4-dimensional joint states; m = 3 is the
  // largest that desk-scale eigendecomposition keeps interactive
  sweep_cmd->add_option("--dim", sargs.dim, "local dimension m")->check(CLI::Range(2, 3));
  sweep_cmd->add_option("--x-min", sargs.x_min, "lower end of the parameter range")->required();
  sweep_cmd->add_option("--x-max", sargs.x_max, "upper end of the parameter range")->required();
  sweep_cmd->add_option("--steps", sargs.steps, "grid points")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sargs.out_path, "output CSV path")->required();
  sweep_cmd->add_option("--seed", sargs.config.seed, "master seed");
  sweep_cmd->add_option("--starts", sargs.config.starts, "multi-start count")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--feasible-set", sargs.feasible, "nonbilocal feasible set")
      ->check(CLI::IsMember({"general", "product"}));

  VerifyArgs vargs;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", vargs.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"pure-closed-form", "ordering", "bounds", "ancilla", "cq-zero",
                             "superactivation-search"}));
  verify_cmd->add_option("--trials", vargs.trials, "trial count")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vargs.config.seed, "suite seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*measure) return run_measure(margs);
    if (*sweep_cmd) return run_sweep(sargs);
    if (*verify_cmd) return run_verify(vargs);
  } catch (const qnb::ValidationError& e) {
    std::cerr << "invalid state: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const qnb::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const qnb::RangeError& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const qnb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitOk;
}
