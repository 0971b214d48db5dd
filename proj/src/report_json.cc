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

#include "mlgd/report_json.h"

#include <algorithm>

namespace mlgd {

Json SpectralReportToJson(const SpectralReport& r) {
  Json doc;
  doc["n"] = r.n;
  doc["m"] = r.m;
  doc["layer_connected"] = r.layer_connected;
  doc["union_connected"] = r.union_connected;
  doc["edge_counts"] = r.edge_counts;
  doc["spectrum"] = r.spectrum;
  doc["rho"] = r.rho;
  doc["lambda1_lower_bound"] = r.lambda1_lower_bound;
  doc["lemma2_bounds"] = r.lambda_max_bounds;
  doc["layer_lambda_max"] = r.layer_lambda_max;
  doc["perron_ok"] = r.perron_ok;
  doc["one_is_simple"] = r.one_is_simple;
  doc["largest_is_one"] = r.largest_is_one;
  doc["lambda1_bound_ok"] = r.lambda1_bound_ok;
  doc["weyl_chain_ok"] = r.weyl_chain_ok;
  doc["hypotheses_hold"] = r.hypotheses_hold();
  doc["contracts"] = r.contracts();
  return doc;
}

SimulationSummary Summarize(const SimulationTrace& trace,
                            const SpectralReport& report,
                            const GarbageState& x0, double tol) {
  SimulationSummary s;
  s.limit = trace.limit_value;
  s.converged = trace.converged;
  s.steps_taken = trace.steps_taken;
  s.final_residual = trace.final_residual;
  s.rho = report.rho;
  const Vector y0 = LayerAverage(x0);
  const auto [lo, hi] = std::minmax_element(y0.begin(), y0.end());
  s.predicted_steps = report.PredictedSteps(tol, *hi - *lo);
  const auto labels = ClassifyAgents(x0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == AgentLabel::kWinner) s.winners.push_back(i + 1);
    if (labels[i] == AgentLabel::kLoser) s.losers.push_back(i + 1);
  }
  s.warnings = trace.warnings;
  return s;
}

Json SimulationSummaryToJson(const SimulationSummary& s) {
  Json doc;
  doc["limit"] = s.limit;
  doc["converged"] = s.converged;
  doc["steps_taken"] = s.steps_taken;
  doc["final_residual"] = s.final_residual;
  doc["rho"] = s.rho;
  doc["predicted_steps"] =
      s.predicted_steps ? Json(*s.predicted_steps) : Json(nullptr);
  doc["winners"] = s.winners;
  doc["losers"] = s.losers;
  doc["warnings"] = s.warnings;
  return doc;
}

std::string DumpJson(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace mlgd
