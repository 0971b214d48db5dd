// Copyright 2026 The mlgd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mlgd: simulate, analyze and verify the multilayer garbage-disposal dynamic.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "mlgd/cli.h"

int main(int argc, char** argv) {
  CLI::App app{"Multilayer garbage-disposal dynamic: simulation and spectral analysis"};
  app.require_subcommand(1);
  mlgd::RunConfig cfg;

  auto* simulate = app.add_subcommand("simulate", "Run the dynamic to convergence");
  simulate->add_option("--graph", cfg.graph_path, "Layered graph file")
      ->required()
      ->check(CLI::ExistingFile);
  simulate->add_option("--init", cfg.init_path, "Initial-state CSV (m rows x n columns)")
      ->required()
      ->check(CLI::ExistingFile);
  simulate->add_option("--out", cfg.output_path, "Trace CSV path, '-' for stdout")
      ->required();
  simulate->add_option("--summary", cfg.summary_path,
                       "Summary JSON path (default stdout)");
  simulate->add_option("--tol", cfg.tol, "Max-norm convergence tolerance")
      ->capture_default_str();
  simulate->add_option("--max-steps", cfg.max_steps, "Step limit")
      ->capture_default_str();
  simulate->add_option("--stride", cfg.stride, "Record every k-th state")
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Spectral report for a layered graph");
  analyze->add_option("--graph", cfg.graph_path, "Layered graph file")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--out", cfg.output_path, "Report JSON path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the seeded invariant suite");
  verify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  verify->add_option("--out", cfg.output_path, "Report path (default stdout)");
  const std::map<std::string, mlgd::FaultInjection> faults = {
      {"none", mlgd::FaultInjection::kNone},
      {"laplacian-sign", mlgd::FaultInjection::kLaplacianSign}};
  verify->add_option("--inject-fault", cfg.fault, "Test hook")
      ->transform(CLI::CheckedTransformer(faults, CLI::ignore_case))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? mlgd::kExitOk : mlgd::kExitInputError;
  }

  if (*simulate) return mlgd::CmdSimulate(cfg, std::cout, std::cerr);
  if (*analyze) return mlgd::CmdAnalyze(cfg, std::cout, std::cerr);
  return mlgd::CmdVerify(cfg, std::cout, std::cerr);
}
