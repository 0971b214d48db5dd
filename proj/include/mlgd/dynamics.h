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

#ifndef MLGD_DYNAMICS_H_
#define MLGD_DYNAMICS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlgd/graph.h"
#include "mlgd/linalg.h"

namespace mlgd {

struct TransitionSystem;

// Garbage held by every agent on every layer at one time step.
// values(j, i) is agent i's amount on layer j.
class GarbageState {
 public:
  // Throws std::invalid_argument on empty, negative or non-finite values.
  explicit GarbageState(Matrix values, std::int64_t time = 0);

  const Matrix& values() const { return values_; }
  std::int64_t time() const { return time_; }
  std::size_t layer_count() const { return values_.rows(); }
  std::size_t agent_count() const { return values_.cols(); }
  double Total() const;

 private:
  Matrix values_;
  std::int64_t time_;
};

// Mean over layers of each agent's garbage.
Vector LayerAverage(const GarbageState& s);

// One step of the agent-level rule
//   x_ji(t+1) = xbar_i (1 - |N_ji|/|E_j|) + (1/|E_j|) sum_{l in N_ji} xbar_l,
// evaluated agent by agent from neighbourhoods. Reference implementation for
// differential testing against StepMatrix.
GarbageState StepDirect(const GarbageState& s, const LayeredGraph& g);

// Same step in matrix form: row j of the result is B_j * LayerAverage(s).
GarbageState StepMatrix(const GarbageState& s, const TransitionSystem& ts);

// The common value every entry converges to: (1/mn) * total garbage.
double TheoreticalLimit(const GarbageState& x0);

// max_{j,i} |x_ji - limit|.
double MaxResidual(const GarbageState& s, double limit);

struct SimulationOptions {
  double tol = 1e-10;
  std::int64_t max_steps = 100000;
  // Record every stride-th state; the final state is always recorded.
  std::int64_t stride = 1;
};

struct SimulationTrace {
  std::vector<GarbageState> states;
  bool converged = false;
  std::int64_t steps_taken = 0;
  double final_residual = 0.0;
  double limit_value = 0.0;
  // ||y_t - limit * 1||_2 for every t in [0, steps_taken], where y_t is the
  // layer average. Computed from the deviation representation, so it stays
  // accurate far below the rounding level of the absolute amounts.
  std::vector<double> average_residuals;
  // Hypothesis violations (disconnected layer, n < 3). The run still happens.
  std::vector<std::string> warnings;
};

// Iterates the matrix-form step from x0 until every entry is within `tol` of
// the theoretical limit or `max_steps` steps have run. The iteration runs on
// the deviation x - limit (the transition fixes constant vectors), and
// recorded states are limit + deviation with rounding-level negatives
// clamped to zero.
//
// Throws DimensionError when x0 does not match the graph, std::invalid_argument
// for bad options and NumericalError if a non-finite value appears.
SimulationTrace Simulate(const LayeredGraph& g, const GarbageState& x0,
                         const SimulationOptions& options = {});
SimulationTrace Simulate(const LayeredGraph& g, const TransitionSystem& ts,
                         const GarbageState& x0,
                         const SimulationOptions& options = {});

enum class AgentLabel { kWinner, kLoser, kNeutral };

std::string_view ToString(AgentLabel label);

// Agents whose initial total across layers exceeds the population average
// total are winners; those below it are losers. Ties within
// 1e-12 * (total garbage) are neutral.
std::vector<AgentLabel> ClassifyAgents(const GarbageState& x0);

}  // namespace mlgd

#endif  // MLGD_DYNAMICS_H_
