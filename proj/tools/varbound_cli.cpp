// Copyright 2026 The varbound Authors
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

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage/parse/validation error, 3 degenerate bound in eval.

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "varbound/varbound.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

int report_failure(vb_status status) {
  std::fprintf(stderr, "error [%s]: %s\n", vb_status_name(status), vb_last_error());
  return kExitUsage;
}

int run_eval(const std::string& scenario, const std::string& out) {
  const vb_status st = vb_eval_file(scenario.c_str(), out.c_str());
  if (st == VB_OK) return kExitOk;
  if (st == VB_ERR_DEGENERATE_BOUND) {
    std::fprintf(stderr, "report written to %s; %s\n", out.c_str(), vb_last_error());
    return kExitDegenerate;
  }
  return report_failure(st);
}

int run_sweep(const std::string& spec, const std::string& out) {
  const vb_status st = vb_sweep_file(spec.c_str(), out.c_str());
  return st == VB_OK ? kExitOk : report_failure(st);
}

int run_figure(const std::string& id, int points, const std::string& out) {
  const vb_status st = vb_figure_file(id.c_str(), points, out.c_str());
  return st == VB_OK ? kExitOk : report_failure(st);
}

int run_verify(const vb_verify_options& opts, const std::string& out) {
  char* summary = nullptr;
  const vb_status st = vb_run_verify(&opts, out.empty() ? nullptr : out.c_str(), &summary);
  if (summary) {
    std::fputs(summary, stdout);
    vb_string_free(summary);
  }
  if (st == VB_OK) return kExitOk;
  if (st == VB_ERR_VERIFICATION_FAILED) {
    std::fprintf(stderr, "verification failed; replay with --seed %llu --trials %d --dim-min %d --dim-max %d\n",
                 static_cast<unsigned long long>(opts.seed), opts.trials, opts.dim_min, opts.dim_max);
    return kExitVerifyFailed;
  }
  return report_failure(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variance-based uncertainty bounds for finite sets of observables"};
  app.set_version_flag("--version", std::string(vb_version()));
  app.require_subcommand(1);

  std::string scenario_path;
  std::string spec_path;
  std::string out_path;
  std::string figure_id;
  int points = 181;
  vb_verify_options verify_opts;
  vb_verify_options_init(&verify_opts);

  auto* eval = app.add_subcommand("eval", "Evaluate every bound for one scenario file (JSON report)");
  eval->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  eval->add_option("--out", out_path, "Report output path")->required();

  auto* sweep = app.add_subcommand("sweep", "Evaluate bounds along a Bloch-sphere path (CSV)");
  sweep->add_option("--spec", spec_path, "Sweep JSON file")->required();
  sweep->add_option("--out", out_path, "CSV output path")->required();

  auto* figure = app.add_subcommand("figure", "Regenerate a figure dataset (CSV)");
  figure->add_option("--id", figure_id, "fig1, fig2 or fig3")->required();
  figure->add_option("--points", points, "Grid points over [0, pi]")->check(CLI::Range(2, 1000000));
  figure->add_option("--out", out_path, "CSV output path")->required();

  auto* verify = app.add_subcommand("verify", "Run the randomized inequality suite");
  verify->add_option("--trials", verify_opts.trials, "Number of random trials")
      ->check(CLI::Range(1, 100000000));
  verify->add_option("--seed", verify_opts.seed, "64-bit seed");
  verify->add_option("--dim-min", verify_opts.dim_min, "Smallest Hilbert-space dimension");
  verify->add_option("--dim-max", verify_opts.dim_max, "Largest Hilbert-space dimension");
  verify->add_option("--set-min", verify_opts.set_min, "Smallest observable-set size");
  verify->add_option("--set-max", verify_opts.set_max, "Largest observable-set size");
  verify->add_option("--threads", verify_opts.threads, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--out", out_path, "Optional CSV of every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*eval) return run_eval(scenario_path, out_path);
  if (*sweep) return run_sweep(spec_path, out_path);
  if (*figure) return run_figure(figure_id, points, out_path);
  if (*verify) return run_verify(verify_opts, out_path);
  return kExitUsage;
}
