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

#include "mlgd/random_instances.h"

#include <stdexcept>

namespace mlgd {

std::vector<Edge> RandomConnectedLayer(std::size_t n,
                                       double extra_edge_probability, Rng& rng) {
  if (n < 2) throw std::invalid_argument("random layer needs n >= 2");
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<char> in_tree(n, 0);
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  edges.reserve(n - 1);

  std::size_t at = pick(rng);
  in_tree[at] = 1;
  std::size_t visited = 1;
  while (visited < n) {
    std::size_t next = pick(rng);
    if (next == at) continue;  // walk on K_n: no self steps
    if (!in_tree[next]) {
      in_tree[next] = 1;
      ++visited;
      edges.emplace_back(at, next);
      used[at][next] = used[next][at] = 1;
    }
    at = next;
  }

  std::bernoulli_distribution coin(extra_edge_probability);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!used[a][b] && coin(rng)) edges.emplace_back(a, b);
  return edges;
}

LayeredGraph RandomConnectedGraph(std::size_t n, std::size_t m,
                                  double extra_edge_probability, Rng& rng) {
  std::vector<std::vector<Edge>> layers;
  layers.reserve(m);
  for (std::size_t k = 0; k < m; ++k)
    layers.push_back(RandomConnectedLayer(n, extra_edge_probability, rng));
  return LayeredGraph(n, std::move(layers));
}

GarbageState RandomState(std::size_t m, std::size_t n, double lo, double hi,
                         Rng& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  Matrix values(m, n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) values(j, i) = u(rng);
  return GarbageState(std::move(values));
}

SymmetricMatrix RandomSymmetric(std::size_t order, double scale, Rng& rng) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix a(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i; j < order; ++j) {
      a(i, j) = u(rng);
      a(j, i) = a(i, j);
    }
  }
  return SymmetricMatrix(std::move(a));
}

}  // namespace mlgd
