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

#include "mlgd/spectral.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mlgd/errors.h"

namespace mlgd {

TransitionSystem BuildTransitionSystem(std::span<const LayerLaplacian> layers) {
  if (layers.empty()) throw DimensionError("transition system needs a layer");
  const std::size_t n = layers[0].matrix.order();
  const std::size_t m = layers.size();
  TransitionSystem ts;
  ts.per_layer.reserve(m);
  Matrix mixing(n, n);
  for (const auto& layer : layers) {
    if (layer.matrix.order() != n) {
      throw DimensionError("transition system: layers disagree on n");
    }
    if (layer.edge_count == 0) {
      throw std::invalid_argument("transition system: empty layer");
    }
    const double inv_edges = 1.0 / static_cast<double>(layer.edge_count);
    Matrix b(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        b(r, c) = (r == c ? 1.0 : 0.0) - layer.matrix(r, c) * inv_edges;
        mixing(r, c) += b(r, c);
      }
    }
    ts.per_layer.push_back(std::move(b));
    ts.layer_edge_counts.push_back(layer.edge_count);
  }
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) mixing(r, c) *= inv_m;
  ts.mixing = SymmetricMatrix(std::move(mixing));
  return ts;
}

TransitionSystem BuildTransitionSystem(const LayeredGraph& g) {
  std::vector<LayerLaplacian> layers;
  layers.reserve(g.layer_count());
  for (std::size_t k = 0; k < g.layer_count(); ++k)
    layers.push_back(BuildLaplacian(g, k));
  return BuildTransitionSystem(layers);
}

bool SpectralReport::hypotheses_hold() const {
  return n >= 3 && std::all_of(layer_connected.begin(), layer_connected.end(),
                               [](bool c) { return c; });
}

bool SpectralReport::contracts() const { return rho < 1.0 - kSimplicityGap; }

std::optional<std::int64_t> SpectralReport::PredictedSteps(
    double tol, double initial_spread) const {
  if (!contracts()) return std::nullopt;
  if (initial_spread <= tol) return 0;
  if (rho <= std::numeric_limits<double>::min()) return 1;
  const double steps = std::ceil(std::log(tol / initial_spread) / std::log(rho));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(steps));
}

double LaplacianMaxBound(const LayeredGraph& g, std::size_t layer) {
  std::size_t best = 0;
  std::vector<std::size_t> merged;
  for (const auto& e : g.edges(layer)) {
    const auto a = g.neighbors(layer, e.u);
    const auto b = g.neighbors(layer, e.v);
    merged.clear();
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(merged));
    best = std::max(best, merged.size());
  }
  return static_cast<double>(best);
}

bool PerronCheck(const SymmetricMatrix& mat, std::span<const Edge> structure) {
  const std::size_t n = mat.order();
  std::vector<std::vector<char>> is_edge(n, std::vector<char>(n, 0));
  for (const auto& e : structure) {
    if (e.v >= n || e.u == e.v) {
      throw std::invalid_argument("perron_check: edge outside the matrix");
    }
    is_edge[e.u][e.v] = is_edge[e.v][e.u] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = mat(i, j);
      if (is_edge[i][j] ? !(x < 0.0) : x != 0.0) {
        throw std::invalid_argument(
            "perron_check: matrix is not a generalized Laplacian of the given "
            "graph at (" +
            std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
      }
    }
  }
  if (n == 1) return true;

  const auto eig = EigenSym(mat);
  if (!(eig.eigenvalues[1] - eig.eigenvalues[0] > kSimplicityGap)) return false;
  Vector v = eig.eigenvector(0);
  const auto pivot = std::max_element(v.begin(), v.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  });
  const double sign = *pivot < 0.0 ? -1.0 : 1.0;
  return std::all_of(v.begin(), v.end(),
                     [sign](double x) { return sign * x > 0.0; });
}

SpectralReport Analyze(const TransitionSystem& ts, const LayeredGraph& g) {
  const std::size_t n = ts.agent_count();
  const std::size_t m = ts.layer_count();
  if (g.agent_count() != n || g.layer_count() != m) {
    throw DimensionError("analyze: transition system does not match graph");
  }
  SpectralReport r;
  r.n = n;
  r.m = m;
  r.edge_counts = ts.layer_edge_counts;
  for (std::size_t k = 0; k < m; ++k) r.layer_connected.push_back(IsConnected(g, k));
  r.union_connected = IsUnionConnected(g);

  r.spectrum = EigenSym(ts.mixing).eigenvalues;
  const double top = r.spectrum.back();
  const double second = n >= 2 ? r.spectrum[n - 2] : -INFINITY;
  r.rho = n >= 2 ? std::max(std::abs(r.spectrum.front()), second) : 0.0;
  r.lambda1_lower_bound = n >= 2 ? -1.0 / static_cast<double>(n - 1) : -INFINITY;
  r.largest_is_one = std::abs(top - 1.0) <= 1e-9;
  r.one_is_simple = second < 1.0 - kSimplicityGap;
  r.lambda1_bound_ok = r.spectrum.front() >= r.lambda1_lower_bound - 1e-9;

  Matrix scaled_sum(n, n);
  double chained = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const auto lap = BuildLaplacian(g, k);
    const double lambda_max = EigenSym(lap.matrix).eigenvalues.back();
    r.layer_lambda_max.push_back(lambda_max);
    r.lambda_max_bounds.push_back(LaplacianMaxBound(g, k));
    const double inv_edges = 1.0 / static_cast<double>(lap.edge_count);
    chained += lambda_max * inv_edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        scaled_sum(i, j) += lap.matrix(i, j) * inv_edges;
  }
  const double sum_lambda_max =
      EigenSym(SymmetricMatrix(std::move(scaled_sum))).eigenvalues.back();
  r.weyl_chain_ok = sum_lambda_max <= chained + 1e-9;

  r.perron_ok = PerronCheck(BuildCombinedLaplacian(g), UnionEdges(g));
  return r;
}

}  // namespace mlgd
