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

#ifndef MLGD_RANDOM_INSTANCES_H_
#define MLGD_RANDOM_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mlgd/dynamics.h"
#include "mlgd/graph.h"
#include "mlgd/linalg.h"

namespace mlgd {

using Rng = std::mt19937_64;

// Uniform spanning tree of K_n (Aldous-Broder walk) plus every remaining pair
// independently with probability `extra_edge_probability`. Always connected.
// Requires n >= 2.
std::vector<Edge> RandomConnectedLayer(std::size_t n,
                                       double extra_edge_probability, Rng& rng);

LayeredGraph RandomConnectedGraph(std::size_t n, std::size_t m,
                                  double extra_edge_probability, Rng& rng);

// Entries uniform in [lo, hi].
GarbageState RandomState(std::size_t m, std::size_t n, double lo, double hi,
                         Rng& rng);

// Entries uniform in [-scale, scale], symmetric.
SymmetricMatrix RandomSymmetric(std::size_t order, double scale, Rng& rng);

}  // namespace mlgd

#endif  // MLGD_RANDOM_INSTANCES_H_
