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

#include "mlgd/verify.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "mlgd/dynamics.h"
#include "mlgd/eigen_sym.h"
#include "mlgd/graph.h"
#include "mlgd/random_instances.h"
#include "mlgd/spectral.h"

namespace mlgd {
namespace {

struct Context {
  Rng rng;
  FaultInjection fault;

  std::size_t Uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }
  double Real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  LayeredGraph Graph(std::size_t n_lo, std::size_t n_hi, std::size_t m_hi) {
    const std::size_t n = Uniform(n_lo, n_hi);
    const std::size_t m = Uniform(1, m_hi);
    return RandomConnectedGraph(n, m, Real(0.0, 0.3), rng);
  }

  LayerLaplacian Laplacian(const LayeredGraph& g, std::size_t layer) const {
    LayerLaplacian lap = BuildLaplacian(g, layer);
    if (fault == FaultInjection::kLaplacianSign) {
      const Edge e = g.edges(layer).front();
      Matrix flipped = lap.matrix.matrix();
      flipped(e.u, e.v) = -flipped(e.u, e.v);
      flipped(e.v, e.u) = -flipped(e.v, e.u);
      lap.matrix = SymmetricMatrix(std::move(flipped));
    }
    return lap;
  }
  TransitionSystem Transition(const LayeredGraph& g) const {
    std::vector<LayerLaplacian> layers;
    for (std::size_t k = 0; k < g.layer_count(); ++k)
      layers.push_back(Laplacian(g, k));
    return BuildTransitionSystem(layers);
  }
};

std::string Sci(double x) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << x;
  return out.str();
}

PropertyResult Result(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

PropertyResult LaplacianStructure(Context& ctx) {
  std::size_t bad = 0;
  constexpr int kGraphs = 200;
  for (int trial = 0; trial < kGraphs; ++trial) {
    const auto g = ctx.Graph(2, 12, 4);
    const std::size_t n = g.agent_count();
    for (std::size_t k = 0; k < g.layer_count(); ++k) {
      const auto lap = ctx.Laplacian(g, k);
      bool ok = lap.edge_count == g.edge_count(k);
      for (std::size_t c = 0; c < n; ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < n; ++r) col += lap.matrix(r, c);
        ok = ok && col == 0.0;
      }
      for (std::size_t i = 0; i < n; ++i) {
        const auto nb = g.neighbors(k, i);
        ok = ok && lap.matrix(i, i) == static_cast<double>(nb.size());
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          const bool adjacent = std::binary_search(nb.begin(), nb.end(), j);
          ok = ok && lap.matrix(i, j) == (adjacent ? -1.0 : 0.0);
        }
      }
      if (!ok) ++bad;
    }
  }
  return Result("laplacian_structure", bad == 0,
                std::to_string(kGraphs) + " graphs, " + std::to_string(bad) +
                    " mismatched layers");
}

PropertyResult CombinedLaplacian(Context& ctx) {
  double worst = 0.0;
  constexpr int kGraphs = 200;
  for (int trial = 0; trial < kGraphs; ++trial) {
    const auto g = ctx.Graph(2, 12, 4);
    const std::size_t n = g.agent_count();
    const auto combined = BuildCombinedLaplacian(g);
    double product = 1.0;
    for (std::size_t k = 0; k < g.layer_count(); ++k)
      product *= static_cast<double>(g.edge_count(k));
    Matrix expected(n, n);
    for (std::size_t k = 0; k < g.layer_count(); ++k) {
      const auto lap = BuildLaplacian(g, k);
      const double w = product / static_cast<double>(lap.edge_count);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) expected(r, c) += w * lap.matrix(r, c);
    }
    const double scale = std::max(1.0, expected.MaxAbs());
    worst = std::max(worst, MaxAbsDiff(combined.matrix(), expected) / scale);
  }
  return Result("combined_laplacian_identity", worst <= 1e-12,
                std::to_string(kGraphs) + " graphs, max relative error " +
                    Sci(worst));
}

PropertyResult ConnectivityClosure(Context& ctx) {
  constexpr int kGraphs = 2000;
  std::size_t disagreements = 0;
  for (int trial = 0; trial < kGraphs; ++trial) {
    const std::size_t n = ctx.Uniform(2, 7);
    const double q = ctx.Real(0.05, 0.7);
    std::vector<Edge> edges;
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
      reach[a][a] = 1;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (std::bernoulli_distribution(q)(ctx.rng)) {
          edges.emplace_back(a, b);
          reach[a][b] = reach[b][a] = 1;
        }
      }
    }
    if (edges.empty()) {
      edges.emplace_back(0, 1);
      reach[0][1] = reach[1][0] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (reach[a][k] && reach[k][b]) reach[a][b] = 1;
    bool closure_connected = true;
    for (std::size_t b = 0; b < n; ++b) closure_connected &= reach[0][b] != 0;
    const LayeredGraph g(n, {edges});
    if (IsConnected(g, 0) != closure_connected) ++disagreements;
  }
  return Result("connectivity_matches_closure", disagreements == 0,
                std::to_string(kGraphs) + " graphs with n <= 7, " +
                    std::to_string(disagreements) + " disagreements");
}

PropertyResult CycleSpectra(Context&) {
  double worst = 0.0;
  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    const LayeredGraph g(n, {edges});
    const auto got = EigenSym(BuildLaplacian(g, 0).matrix).eigenvalues;
    Vector expected;
    for (std::size_t k = 0; k < n; ++k)
      expected.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi *
                                              static_cast<double>(k) /
                                              static_cast<double>(n)));
    std::sort(expected.begin(), expected.end());
    for (std::size_t k = 0; k < n; ++k)
      worst = std::max(worst, std::abs(got[k] - expected[k]));
  }
  return Result("cycle_laplacian_spectrum", worst <= 1e-9,
                "n = 3..12, max error " + Sci(worst));
}

PropertyResult CompleteSpectra(Context&) {
  double worst = 0.0;
  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    const LayeredGraph g(n, {edges});
    const auto got = EigenSym(BuildLaplacian(g, 0).matrix).eigenvalues;
    worst = std::max(worst, std::abs(got[0]));
    for (std::size_t k = 1; k < n; ++k)
      worst = std::max(worst, std::abs(got[k] - static_cast<double>(n)));
  }
  return Result("complete_laplacian_spectrum", worst <= 1e-9,
                "n = 3..12, max error " + Sci(worst));
}

PropertyResult ShiftScale(Context& ctx) {
  constexpr int kMatrices = 100;
  double worst = 0.0;
  for (int trial = 0; trial < kMatrices; ++trial) {
    const auto a = RandomSymmetric(ctx.Uniform(1, 8), 1.0, ctx.rng);
    const auto eig = EigenSym(a);
    const double c1 = ctx.Real(-3.0, 3.0);
    const double magnitude = ctx.Real(0.1, 3.0);
    for (double c2 : {magnitude, -magnitude}) {
      const auto predicted = ShiftScaleSpectrum(c1, c2, eig);
      const std::size_t n = a.order();
      Matrix direct(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          direct(r, c) = (r == c ? c1 : 0.0) - c2 * a(r, c);
      const auto actual = EigenSym(SymmetricMatrix(std::move(direct))).eigenvalues;
      for (std::size_t k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(predicted[k] - actual[k]));
    }
  }
  return Result("shift_scale_spectrum", worst <= 1e-9,
                std::to_string(kMatrices) +
                    " matrices x both signs of c2, max error " + Sci(worst));
}

PropertyResult Weyl(Context& ctx) {
  constexpr int kPairs = 500;
  std::size_t failures = 0;
  for (int trial = 0; trial < kPairs; ++trial) {
    const std::size_t n = ctx.Uniform(1, 8);
    const auto a = RandomSymmetric(n, 1.0, ctx.rng);
    const auto b = RandomSymmetric(n, 1.0, ctx.rng);
    if (!WeylBoundsHold(a, b, 1e-9)) ++failures;
  }
  return Result("weyl_inequalities", failures == 0,
                std::to_string(kPairs) + " pairs, " + std::to_string(failures) +
                    " violations");
}

PropertyResult LaplacianMaxBoundHolds(Context& ctx) {
  constexpr int kGraphs = 200;
  std::size_t failures = 0;
  double tightest = INFINITY;
  for (int trial = 0; trial < kGraphs; ++trial) {
    const std::size_t n = ctx.Uniform(2, 20);
    const LayeredGraph g(n, {RandomConnectedLayer(n, ctx.Real(0.0, 0.5), ctx.rng)});
    const double lambda_max = EigenSym(ctx.Laplacian(g, 0).matrix).eigenvalues.back();
    const double bound = LaplacianMaxBound(g, 0);
    tightest = std::min(tightest, bound - lambda_max);
    if (lambda_max > bound + 1e-9) ++failures;
  }
  return Result("laplacian_max_bound", failures == 0,
                std::to_string(kGraphs) + " graphs, " + std::to_string(failures) +
                    " violations, smallest margin " + Sci(tightest));
}

PropertyResult Perron(Context& ctx) {
  constexpr int kGraphs = 100;
  std::size_t failures = 0;
  for (int trial = 0; trial < kGraphs; ++trial) {
    const auto g = ctx.Graph(2, 15, 4);
    for (std::size_t k = 0; k < g.layer_count(); ++k)
      if (!PerronCheck(BuildLaplacian(g, k).matrix, g.edges(k))) ++failures;
    if (!PerronCheck(BuildCombinedLaplacian(g), UnionEdges(g))) ++failures;
  }
  // Two disjoint triangles: the zero eigenvalue has multiplicity two.
  const LayeredGraph split(6, {{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}});
  const bool control_rejected =
      !PerronCheck(BuildLaplacian(split, 0).matrix, split.edges(0));
  return Result("perron_simple_eigenvalue", failures == 0 && control_rejected,
                std::to_string(kGraphs) + " graphs (layers + combined), " +
                    std::to_string(failures) + " failures, disconnected control " +
                    (control_rejected ? "rejected" : "accepted"));
}

PropertyResult ProofChain(Context& ctx) {
  constexpr int kInstances = 200;
  std::size_t failures = 0;
  double margin = INFINITY;
  for (int trial = 0; trial < kInstances; ++trial) {
    const auto g = ctx.Graph(3, 20, 4);
    const auto report = Analyze(BuildTransitionSystem(g), g);
    margin = std::min(margin, report.spectrum.front() - report.lambda1_lower_bound);
    const bool inside = report.spectrum.front() > -1.0 &&
                        report.spectrum.back() <= 1.0 + 1e-9;
    if (!report.lambda1_bound_ok || !report.weyl_chain_ok || !inside ||
        !report.largest_is_one || !report.one_is_simple || !report.contracts()) {
      ++failures;
    }
  }
  return Result("proof_chain_bounds", failures == 0,
                std::to_string(kInstances) + " connected instances, " +
                    std::to_string(failures) +
                    " failures, smallest lambda1 margin " + Sci(margin));
}

// Single-layer K_n: C = I - L/|E| with |E| = n(n-1)/2, so every non-unit
// eigenvalue is 1 - 2/(n-1) and rho = (n-3)/(n-1). Only K_3 averages in one
// step.
PropertyResult CompleteGraphRho(Context&) {
  double worst = 0.0;
  for (std::size_t n = 3; n <= 10; ++n) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    const LayeredGraph g(n, {edges});
    const double expected =
        static_cast<double>(n - 3) / static_cast<double>(n - 1);
    worst = std::max(worst,
                     std::abs(Analyze(BuildTransitionSystem(g), g).rho - expected));
  }
  return Result("complete_graph_rho", worst <= 1e-9,
                "n = 3..10, max error against (n-3)/(n-1) " + Sci(worst));
}

PropertyResult Conservation(Context& ctx) {
  constexpr int kInstances = 20;
  constexpr int kSteps = 1000;
  double worst_drift = 0.0;
  double lowest = INFINITY;
  std::string failure;
  for (int trial = 0; trial < kInstances && failure.empty(); ++trial) {
    const auto g = ctx.Graph(2, 12, 4);
    const auto ts = ctx.Transition(g);
    GarbageState s = RandomState(g.layer_count(), g.agent_count(), 0.0, 10.0, ctx.rng);
    const double total = s.Total();
    try {
      for (int t = 0; t < kSteps; ++t) {
        s = StepMatrix(s, ts);
        worst_drift = std::max(worst_drift, std::abs(s.Total() - total) / total);
        for (double x : s.values().data()) lowest = std::min(lowest, x);
      }
    } catch (const std::exception& e) {
      failure = e.what();
    }
  }
  const bool ok = failure.empty() && worst_drift <= 1e-10 && lowest >= -1e-12;
  return Result("conservation_nonnegativity", ok,
                failure.empty()
                    ? std::to_string(kInstances) + " instances x " +
                          std::to_string(kSteps) + " steps, max drift " +
                          Sci(worst_drift) + ", min entry " + Sci(lowest)
                    : "step failed: " + failure);
}

PropertyResult OracleEquivalence(Context& ctx) {
  constexpr int kInstances = 100;
  constexpr int kSteps = 50;
  double worst = 0.0;
  for (int trial = 0; trial < kInstances; ++trial) {
    const auto g = ctx.Graph(2, 10, 4);
    const auto ts = BuildTransitionSystem(g);
    GarbageState direct = RandomState(g.layer_count(), g.agent_count(), 0.0, 10.0, ctx.rng);
    GarbageState matrix = direct;
    for (int t = 0; t < kSteps; ++t) {
      direct = StepDirect(direct, g);
      matrix = StepMatrix(matrix, ts);
      worst = std::max(worst, MaxAbsDiff(direct.values(), matrix.values()));
    }
  }
  return Result("step_oracle_equivalence", worst <= 1e-12,
                std::to_string(kInstances) + " instances x " +
                    std::to_string(kSteps) + " steps, max difference " +
                    Sci(worst));
}

// Geometric decay, limit correctness and winner consistency share the runs.
std::vector<PropertyResult> Trajectories(Context& ctx) {
  constexpr int kInstances = 50;
  constexpr double kTol = 1e-8;
  std::size_t decay_failures = 0;
  std::size_t limit_failures = 0;
  std::size_t label_failures = 0;
  std::size_t labels_checked = 0;
  for (int trial = 0; trial < kInstances; ++trial) {
    const auto g = ctx.Graph(3, 30, 4);
    const auto ts = BuildTransitionSystem(g);
    const double rho = Analyze(ts, g).rho;
    const auto x0 = RandomState(g.layer_count(), g.agent_count(), 0.0, 10.0, ctx.rng);
    SimulationOptions options;
    options.tol = kTol;
    const auto trace = Simulate(g, ts, x0, options);

    const auto& res = trace.average_residuals;
    for (std::size_t t = 0; t + 1 < res.size(); ++t)
      if (res[t + 1] > (rho + 1e-9) * res[t]) ++decay_failures;

    const auto& last = trace.states.back();
    if (!trace.converged || MaxResidual(last, trace.limit_value) > kTol) ++limit_failures;

    const auto labels = ClassifyAgents(x0);
    const double m = static_cast<double>(g.layer_count());
    const double eps = 1e-12 * x0.Total();
    for (std::size_t i = 0; i < g.agent_count(); ++i) {
      double start = 0.0;
      double end = 0.0;
      for (std::size_t j = 0; j < g.layer_count(); ++j) {
        start += x0.values()(j, i);
        end += last.values()(j, i);
      }
      // Skip agents whose initial total is within the run's resolution of
      // the long-run total.
      if (std::abs(start - m * trace.limit_value) <= m * kTol + eps) continue;
      ++labels_checked;
      const bool sheds = start > end;
      if (sheds != (labels[i] == AgentLabel::kWinner)) ++label_failures;
    }
  }
  const std::string runs = std::to_string(kInstances) + " runs, ";
  return {
      Result("geometric_decay", decay_failures == 0,
             runs + std::to_string(decay_failures) + " steps above rho"),
      Result("limit_correctness", limit_failures == 0,
             runs + std::to_string(limit_failures) + " not within tol"),
      Result("winner_consistency", label_failures == 0,
             runs + std::to_string(labels_checked) + " agents checked, " +
                 std::to_string(label_failures) + " mislabelled"),
  };
}

}  // namespace

std::vector<PropertyResult> RunPropertySuite(const VerifyOptions& options) {
  using Property = std::function<std::vector<PropertyResult>(Context&)>;
  auto one = [](PropertyResult (*f)(Context&)) -> Property {
    return [f](Context& ctx) { return std::vector<PropertyResult>{f(ctx)}; };
  };
  const std::vector<Property> properties = {
      one(LaplacianStructure), one(CombinedLaplacian), one(ConnectivityClosure),
      one(CycleSpectra),       one(CompleteSpectra),   one(ShiftScale),
      one(Weyl),               one(LaplacianMaxBoundHolds), one(Perron),
      one(ProofChain),         one(CompleteGraphRho),   one(Conservation),
      one(OracleEquivalence),  Trajectories,
  };
  std::vector<PropertyResult> results;
  for (std::size_t p = 0; p < properties.size(); ++p) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(p)};
    Context ctx{Rng(seq), options.fault};
    for (auto& r : properties[p](ctx)) results.push_back(std::move(r));
  }
  return results;
}

}  // namespace mlgd
