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

#ifndef MLGD_GRAPH_H_
#define MLGD_GRAPH_H_

#include <cstddef>
#include <span>
#include <vector>

#include "mlgd/linalg.h"

namespace mlgd {

// Undirected edge between two distinct agents, stored with u < v. Indices are
// 0-based; files and user-facing output use 1-based indices.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  Edge() = default;
  Edge(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// n agents shared by m simple undirected layers. Immutable once built.
class LayeredGraph {
 public:
  // Throws std::invalid_argument unless every layer is a nonempty simple
  // graph on [0, n).
  LayeredGraph(std::size_t n, std::vector<std::vector<Edge>> layers);

  std::size_t agent_count() const { return n_; }
  std::size_t layer_count() const { return layers_.size(); }

  std::span<const Edge> edges(std::size_t layer) const;
  std::size_t edge_count(std::size_t layer) const { return edges(layer).size(); }
  // Sorted neighbours of `agent` in `layer`.
  std::span<const std::size_t> neighbors(std::size_t layer,
                                         std::size_t agent) const;

 private:
  void CheckLayer(std::size_t layer) const;

  std::size_t n_;
  std::vector<std::vector<Edge>> layers_;
  // adjacency_[layer][agent]
  std::vector<std::vector<std::vector<std::size_t>>> adjacency_;
};

std::vector<std::size_t> Neighborhood(const LayeredGraph& g, std::size_t layer,
                                      std::size_t agent);

// Breadth-first search from agent 0 over one layer.
bool IsConnected(const LayeredGraph& g, std::size_t layer);
// Connectivity of the union of all layers.
bool IsUnionConnected(const LayeredGraph& g);
bool AllLayersConnected(const LayeredGraph& g);

struct LayerLaplacian {
  SymmetricMatrix matrix;  // degree matrix minus adjacency matrix
  std::size_t edge_count = 0;
};

LayerLaplacian BuildLaplacian(const LayeredGraph& g, std::size_t layer);

// sum_i (prod_{j != i} |E_j|) * L_i, i.e. prod_j |E_j| * sum_i L_i / |E_i|.
// This is the Laplacian of a multigraph on the union of the layers.
SymmetricMatrix BuildCombinedLaplacian(const LayeredGraph& g);

// Union edge set, sorted.
std::vector<Edge> UnionEdges(const LayeredGraph& g);

}  // namespace mlgd

#endif  // MLGD_GRAPH_H_
