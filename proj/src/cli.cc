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

#include "mlgd/cli.h"

#include <fstream>
#include <functional>
#include <memory>
#include <stdexcept>

#include "mlgd/dynamics.h"
#include "mlgd/errors.h"
#include "mlgd/graph_io.h"
#include "mlgd/report_json.h"
#include "mlgd/spectral.h"
#include "mlgd/state_io.h"

namespace mlgd {
namespace {

bool IsStdout(const std::string& path) { return path.empty() || path == "-"; }

// Writes through `write` to `path`, or to `out` for "-". Returns false and
// reports to `err` when the file cannot be written.
bool WriteTo(const std::string& path, std::ostream& out, std::ostream& err,
             const std::function<void(std::ostream&)>& write) {
  if (IsStdout(path)) {
    write(out);
    return static_cast<bool>(out);
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  write(file);
  file.close();
  if (!file) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

std::string ValidateOptions(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) return "--tol must be positive";
  if (cfg.max_steps < 1) return "--max-steps must be >= 1";
  if (cfg.stride < 1) return "--stride must be >= 1";
  return {};
}

}  // namespace

int CmdSimulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (auto msg = ValidateOptions(cfg); !msg.empty()) {
    err << "error: " << msg << "\n";
    return kExitInputError;
  }
  if (IsStdout(cfg.output_path) && IsStdout(cfg.summary_path)) {
    err << "error: trace and summary cannot both go to standard output; "
           "pass --out FILE or --summary FILE\n";
    return kExitInputError;
  }
  try {
    const LayeredGraph g = ReadLayeredGraphFile(cfg.graph_path);
    const GarbageState x0 = ReadInitialStateFile(cfg.init_path);
    if (x0.layer_count() != g.layer_count() || x0.agent_count() != g.agent_count()) {
      err << "error: graph file '" << cfg.graph_path << "' has n="
          << g.agent_count() << " m=" << g.layer_count()
          << " but initial-state file '" << cfg.init_path << "' is "
          << x0.layer_count() << " rows x " << x0.agent_count() << " columns\n";
      return kExitInputError;
    }

    const TransitionSystem ts = BuildTransitionSystem(g);
    const SpectralReport report = Analyze(ts, g);
    SimulationOptions options;
    options.tol = cfg.tol;
    options.max_steps = cfg.max_steps;
    options.stride = cfg.stride;
    const SimulationTrace trace = Simulate(g, ts, x0, options);
    for (const auto& w : trace.warnings) err << "warning: " << w << "\n";

    if (!WriteTo(cfg.output_path, out, err,
                 [&](std::ostream& s) { WriteTraceCsv(s, trace); })) {
      return kExitInputError;
    }
    const Json summary = SimulationSummaryToJson(Summarize(trace, report, x0, cfg.tol));
    if (!WriteTo(cfg.summary_path, out, err,
                 [&](std::ostream& s) { s << DumpJson(summary); })) {
      return kExitInputError;
    }
    if (!trace.converged) {
      err << "simulation did not converge within " << cfg.max_steps
          << " steps (residual " << FormatNumber(trace.final_residual) << ")\n";
      return kExitSemanticFailure;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemanticFailure;
  }
}

int CmdAnalyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const LayeredGraph g = ReadLayeredGraphFile(cfg.graph_path);
    const SpectralReport report = Analyze(BuildTransitionSystem(g), g);
    if (!WriteTo(cfg.output_path, out, err, [&](std::ostream& s) {
          s << DumpJson(SpectralReportToJson(report));
        })) {
      return kExitInputError;
    }
    if (g.agent_count() < 3) {
      err << "hypothesis violated: n = " << g.agent_count() << " < 3\n";
    }
    for (std::size_t k = 0; k < g.layer_count(); ++k) {
      if (!report.layer_connected[k]) {
        err << "hypothesis violated: layer " << k + 1 << " is disconnected\n";
      }
    }
    if (!report.contracts()) {
      err << "mixing matrix does not contract (rho = "
          << FormatNumber(report.rho) << ")\n";
    }
    return report.hypotheses_hold() && report.contracts() ? kExitOk
                                                          : kExitSemanticFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemanticFailure;
  }
}

int CmdVerify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.seed = cfg.seed;
  options.fault = cfg.fault;
  std::vector<PropertyResult> results;
  try {
    results = RunPropertySuite(options);
  } catch (const std::exception& e) {
    err << "error: property suite aborted: " << e.what() << "\n";
    return kExitSemanticFailure;
  }
  std::size_t failed = 0;
  const bool ok = WriteTo(cfg.output_path, out, err, [&](std::ostream& s) {
    for (const auto& r : results) {
      s << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      if (!r.passed) ++failed;
    }
    s << results.size() - failed << "/" << results.size()
      << " properties passed (seed " << cfg.seed << ")\n";
  });
  if (!ok) return kExitInputError;
  return failed == 0 ? kExitOk : kExitSemanticFailure;
}

}  // namespace mlgd
