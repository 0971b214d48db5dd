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

#include "mlgd/graph.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace mlgd {
namespace {

std::string Pair1(const Edge& e) {
  return "{" + std::to_string(e.u + 1) + ", " + std::to_string(e.v + 1) + "}";
}

bool Connected(std::size_t n,
               const std::vector<std::vector<std::size_t>>& adjacency) {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t a = frontier.front();
    frontier.pop();
    for (std::size_t b : adjacency[a]) {
      if (!seen[b]) {
        seen[b] = 1;
        ++reached;
        frontier.push(b);
      }
    }
  }
  return reached == n;
}

}  // namespace

LayeredGraph::LayeredGraph(std::size_t n, std::vector<std::vector<Edge>> layers)
    : n_(n), layers_(std::move(layers)) {
  if (n_ == 0) throw std::invalid_argument("graph needs at least one agent");
  if (layers_.empty()) throw std::invalid_argument("graph needs at least one layer");
  adjacency_.resize(layers_.size());
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    auto& edges = layers_[k];
    const std::string where = "layer " + std::to_string(k + 1);
    if (edges.empty()) throw std::invalid_argument(where + " has no edges");
    for (auto& e : edges) {
      e = Edge(e.u, e.v);
      if (e.v >= n_) {
        throw std::invalid_argument(where + ": edge " + Pair1(e) +
                                    " has an endpoint outside [1, " +
                                    std::to_string(n_) + "]");
      }
      if (e.u == e.v) {
        throw std::invalid_argument(where + ": self-loop at agent " +
                                    std::to_string(e.u + 1));
      }
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end());
        dup != edges.end()) {
      throw std::invalid_argument(where + ": duplicate edge " + Pair1(*dup));
    }
    auto& adj = adjacency_[k];
    adj.assign(n_, {});
    for (const auto& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
  }
}

void LayeredGraph::CheckLayer(std::size_t layer) const {
  if (layer >= layers_.size()) {
    throw std::out_of_range("layer index " + std::to_string(layer) +
                            " out of range for " +
                            std::to_string(layers_.size()) + " layers");
  }
}

std::span<const Edge> LayeredGraph::edges(std::size_t layer) const {
  CheckLayer(layer);
  return layers_[layer];
}

std::span<const std::size_t> LayeredGraph::neighbors(std::size_t layer,
                                                     std::size_t agent) const {
  CheckLayer(layer);
  if (agent >= n_) {
    throw std::out_of_range("agent index " + std::to_string(agent) +
                            " out of range for " + std::to_string(n_) +
                            " agents");
  }
  return adjacency_[layer][agent];
}

std::vector<std::size_t> Neighborhood(const LayeredGraph& g, std::size_t layer,
                                      std::size_t agent) {
  const auto nb = g.neighbors(layer, agent);
  return {nb.begin(), nb.end()};
}

bool IsConnected(const LayeredGraph& g, std::size_t layer) {
  const std::size_t n = g.agent_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto nb = g.neighbors(layer, a);
    adj[a].assign(nb.begin(), nb.end());
  }
  return Connected(n, adj);
}

bool IsUnionConnected(const LayeredGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.agent_count());
  for (const auto& e : UnionEdges(g)) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return Connected(g.agent_count(), adj);
}

bool AllLayersConnected(const LayeredGraph& g) {
  for (std::size_t k = 0; k < g.layer_count(); ++k)
    if (!IsConnected(g, k)) return false;
  return true;
}

LayerLaplacian BuildLaplacian(const LayeredGraph& g, std::size_t layer) {
  const std::size_t n = g.agent_count();
  Matrix l(n, n);
  for (const auto& e : g.edges(layer)) {
    l(e.u, e.v) = -1.0;
    l(e.v, e.u) = -1.0;
    l(e.u, e.u) += 1.0;
    l(e.v, e.v) += 1.0;
  }
  return {SymmetricMatrix(std::move(l)), g.edge_count(layer)};
}

SymmetricMatrix BuildCombinedLaplacian(const LayeredGraph& g) {
  const std::size_t m = g.layer_count();
  std::vector<Matrix> laplacians;
  std::vector<double> weights(m, 1.0);
  laplacians.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    laplacians.push_back(BuildLaplacian(g, i).matrix.matrix());
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) weights[i] *= static_cast<double>(g.edge_count(j));
  }
  return SymmetricMatrix(WeightedSum(weights, laplacians));
}

std::vector<Edge> UnionEdges(const LayeredGraph& g) {
  std::vector<Edge> all;
  for (std::size_t k = 0; k < g.layer_count(); ++k) {
    const auto e = g.edges(k);
    all.insert(all.end(), e.begin(), e.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace mlgd
