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

#ifndef MLGD_CLI_H_
#define MLGD_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>

#include "mlgd/verify.h"

namespace mlgd {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
// Non-convergence, violated hypothesis or failed property.
inline constexpr int kExitSemanticFailure = 2;

struct RunConfig {
  std::string graph_path;
  std::string init_path;
  // "-" or empty writes to the `out` stream.
  std::string output_path;
  // simulate only: where the summary JSON goes; empty means the `out` stream.
  std::string summary_path;
  double tol = 1e-10;
  std::int64_t max_steps = 100000;
  std::int64_t stride = 1;
  std::uint64_t seed = 0;
  FaultInjection fault = FaultInjection::kNone;
};

// Writes the trace CSV to output_path and the summary JSON to summary_path.
// Both may not be the `out` stream at once.
int CmdSimulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
// Writes the spectral report JSON.
int CmdAnalyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
// Runs the property suite, one PASS/FAIL line per property.
int CmdVerify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace mlgd

#endif  // MLGD_CLI_H_
