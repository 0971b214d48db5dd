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

#include "mlgd/dynamics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mlgd/errors.h"
#include "mlgd/spectral.h"

namespace mlgd {
namespace {

GarbageState CheckedState(Matrix values, std::int64_t time) {
  for (double x : values.data()) {
    if (!std::isfinite(x)) {
      throw NumericalError("non-finite garbage amount at step " +
                           std::to_string(time));
    }
  }
  return GarbageState(std::move(values), time);
}

void CheckShape(const GarbageState& s, std::size_t m, std::size_t n,
                const char* what) {
  if (s.layer_count() != m || s.agent_count() != n) {
    throw DimensionError(std::string(what) + ": state is " +
                         std::to_string(s.layer_count()) + "x" +
                         std::to_string(s.agent_count()) + ", expected " +
                         std::to_string(m) + "x" + std::to_string(n));
  }
}

}  // namespace

GarbageState::GarbageState(Matrix values, std::int64_t time)
    : values_(std::move(values)), time_(time) {
  if (values_.rows() == 0 || values_.cols() == 0) {
    throw std::invalid_argument("garbage state must be nonempty");
  }
  if (time_ < 0) throw std::invalid_argument("time must be nonnegative");
  for (std::size_t j = 0; j < values_.rows(); ++j) {
    for (std::size_t i = 0; i < values_.cols(); ++i) {
      const double x = values_(j, i);
      if (!std::isfinite(x) || x < 0.0) {
        throw std::invalid_argument(
            "garbage amount for layer " + std::to_string(j + 1) + ", agent " +
            std::to_string(i + 1) + " must be a finite nonnegative number");
      }
    }
  }
}

double GarbageState::Total() const {
  double s = 0.0;
  for (double x : values_.data()) s += x;
  return s;
}

Vector LayerAverage(const GarbageState& s) {
  const std::size_t m = s.layer_count();
  const std::size_t n = s.agent_count();
  Vector avg(n, 0.0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) avg[i] += s.values()(j, i);
  for (double& x : avg) x /= static_cast<double>(m);
  return avg;
}

GarbageState StepDirect(const GarbageState& s, const LayeredGraph& g) {
  const std::size_t m = g.layer_count();
  const std::size_t n = g.agent_count();
  CheckShape(s, m, n, "step_direct");
  const Vector xbar = LayerAverage(s);
  Matrix next(m, n);
  for (std::size_t j = 0; j < m; ++j) {
    const double edges = static_cast<double>(g.edge_count(j));
    for (std::size_t i = 0; i < n; ++i) {
      const auto nb = g.neighbors(j, i);
      double inflow = 0.0;
      for (std::size_t l : nb) inflow += xbar[l];
      next(j, i) = xbar[i] * (1.0 - static_cast<double>(nb.size()) / edges) +
                   inflow / edges;
    }
  }
  return CheckedState(std::move(next), s.time() + 1);
}

namespace {

// Row j of the result is B_j * (mean of the rows of `rows`).
Matrix ApplyTransition(const Matrix& rows, const TransitionSystem& ts) {
  const std::size_t m = rows.rows();
  const std::size_t n = rows.cols();
  Vector y(n, 0.0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) y[i] += rows(j, i);
  for (double& v : y) v /= static_cast<double>(m);
  Matrix next(m, n);
  for (std::size_t j = 0; j < m; ++j) {
    const Vector row = MatVec(ts.per_layer[j], y);
    std::copy(row.begin(), row.end(), next.row(j).begin());
  }
  return next;
}

}  // namespace

GarbageState StepMatrix(const GarbageState& s, const TransitionSystem& ts) {
  CheckShape(s, ts.layer_count(), ts.agent_count(), "step_matrix");
  return CheckedState(ApplyTransition(s.values(), ts), s.time() + 1);
}

double TheoreticalLimit(const GarbageState& x0) {
  return x0.Total() /
         static_cast<double>(x0.layer_count() * x0.agent_count());
}

double MaxResidual(const GarbageState& s, double limit) {
  double r = 0.0;
  for (double x : s.values().data()) r = std::max(r, std::abs(x - limit));
  return r;
}

SimulationTrace Simulate(const LayeredGraph& g, const GarbageState& x0,
                         const SimulationOptions& options) {
  return Simulate(g, BuildTransitionSystem(g), x0, options);
}

SimulationTrace Simulate(const LayeredGraph& g, const TransitionSystem& ts,
                         const GarbageState& x0,
                         const SimulationOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (options.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (options.stride < 1) throw std::invalid_argument("stride must be >= 1");
  CheckShape(x0, g.layer_count(), g.agent_count(), "simulate");
  CheckShape(x0, ts.layer_count(), ts.agent_count(), "simulate");

  SimulationTrace trace;
  if (g.agent_count() < 3) {
    trace.warnings.push_back("n = " + std::to_string(g.agent_count()) +
                             " < 3: convergence is not guaranteed");
  }
  for (std::size_t k = 0; k < g.layer_count(); ++k) {
    if (!IsConnected(g, k)) {
      trace.warnings.push_back("layer " + std::to_string(k + 1) +
                               " is disconnected: convergence is not "
                               "guaranteed");
    }
  }

  const std::size_t m = x0.layer_count();
  const std::size_t n = x0.agent_count();
  const double limit = TheoreticalLimit(x0);
  trace.limit_value = limit;

  Matrix deviation = x0.values();
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) deviation(j, i) -= limit;

  auto max_abs = [](const Matrix& d) { return d.MaxAbs(); };
  auto average_residual = [m, n](const Matrix& d) {
    Vector y(n, 0.0);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) y[i] += d(j, i);
    for (double& v : y) v /= static_cast<double>(m);
    return Norm2(y);
  };
  auto record = [&](std::int64_t t) {
    Matrix x(m, n);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i)
        x(j, i) = std::max(0.0, limit + deviation(j, i));
    trace.states.push_back(CheckedState(std::move(x), t));
  };

  // The clock restarts at 0 regardless of x0.time().
  trace.states.push_back(GarbageState(x0.values(), 0));
  double residual = max_abs(deviation);
  trace.average_residuals.push_back(average_residual(deviation));
  std::int64_t t = 0;
  while (residual > options.tol && t < options.max_steps) {
    deviation = ApplyTransition(deviation, ts);
    ++t;
    residual = max_abs(deviation);
    if (!std::isfinite(residual)) {
      throw NumericalError("non-finite garbage amount at step " +
                           std::to_string(t));
    }
    trace.average_residuals.push_back(average_residual(deviation));
    if (t % options.stride == 0) record(t);
  }
  if (trace.states.back().time() != t) record(t);

  trace.steps_taken = t;
  trace.final_residual = residual;
  trace.converged = residual <= options.tol;
  return trace;
}

std::string_view ToString(AgentLabel label) {
  switch (label) {
    case AgentLabel::kWinner:
      return "winner";
    case AgentLabel::kLoser:
      return "loser";
    case AgentLabel::kNeutral:
      return "neutral";
  }
  return "unknown";
}

std::vector<AgentLabel> ClassifyAgents(const GarbageState& x0) {
  const std::size_t m = x0.layer_count();
  const std::size_t n = x0.agent_count();
  Vector totals(n, 0.0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) totals[i] += x0.values()(j, i);
  const double total = x0.Total();
  const double average = total / static_cast<double>(n);
  const double eps = 1e-12 * total;
  std::vector<AgentLabel> labels(n, AgentLabel::kNeutral);
  for (std::size_t i = 0; i < n; ++i) {
    if (totals[i] > average + eps) {
      labels[i] = AgentLabel::kWinner;
    } else if (totals[i] < average - eps) {
      labels[i] = AgentLabel::kLoser;
    }
  }
  return labels;
}

}  // namespace mlgd
