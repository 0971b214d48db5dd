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

#ifndef MLGD_REPORT_JSON_H_
#define MLGD_REPORT_JSON_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "mlgd/dynamics.h"
#include "mlgd/spectral.h"

namespace mlgd {

using Json = nlohmann::ordered_json;

Json SpectralReportToJson(const SpectralReport& report);

struct SimulationSummary {
  double limit = 0.0;
  bool converged = false;
  std::int64_t steps_taken = 0;
  double final_residual = 0.0;
  double rho = 0.0;
  std::optional<std::int64_t> predicted_steps;
  // 1-based agent indices.
  std::vector<std::size_t> winners;
  std::vector<std::size_t> losers;
  std::vector<std::string> warnings;
};

SimulationSummary Summarize(const SimulationTrace& trace,
                            const SpectralReport& report,
                            const GarbageState& x0, double tol);

Json SimulationSummaryToJson(const SimulationSummary& summary);

// Two-space indentation, trailing newline.
std::string DumpJson(const Json& doc);

}  // namespace mlgd

#endif  // MLGD_REPORT_JSON_H_
