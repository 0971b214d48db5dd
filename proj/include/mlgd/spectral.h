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

#ifndef MLGD_SPECTRAL_H_
#define MLGD_SPECTRAL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mlgd/eigen_sym.h"
#include "mlgd/graph.h"
#include "mlgd/linalg.h"

namespace mlgd {

// Matrix form of the layered update. Row j of the next state is
// per_layer[j] * y, where y is the layer-averaged vector, and y itself evolves
// by `mixing`. The mn x mn block matrix whose block row j repeats
// per_layer[j] is never formed.
struct TransitionSystem {
  // B_j = I - L_j / |E_j|; symmetric and doubly stochastic.
  std::vector<Matrix> per_layer;
  // C = (1/m) sum_j B_j = I - (1/m) sum_j L_j / |E_j|.
  SymmetricMatrix mixing;
  std::vector<std::size_t> layer_edge_counts;

  std::size_t agent_count() const { return mixing.order(); }
  std::size_t layer_count() const { return per_layer.size(); }
};

TransitionSystem BuildTransitionSystem(const LayeredGraph& g);
// Same, from already-assembled Laplacians (one per layer).
TransitionSystem BuildTransitionSystem(std::span<const LayerLaplacian> layers);

inline constexpr double kSimplicityGap = 1e-9;

struct SpectralReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<bool> layer_connected;
  bool union_connected = false;
  std::vector<std::size_t> edge_counts;

  // Eigenvalues of C, ascending.
  Vector spectrum;
  // max(|lambda_1(C)|, lambda_{n-1}(C)).
  double rho = 0.0;
  // -1/(n-1), the lower bound on lambda_1(C) for connected layers.
  double lambda1_lower_bound = 0.0;
  // Per layer: max over edges {i, j} of |N_i u N_j|, and the actual
  // largest Laplacian eigenvalue it bounds.
  std::vector<double> lambda_max_bounds;
  std::vector<double> layer_lambda_max;

  // Smallest eigenvalue of the combined multigraph Laplacian is simple with a
  // positive eigenvector.
  bool perron_ok = false;
  // lambda_{n-1}(C) < 1 - kSimplicityGap.
  bool one_is_simple = false;
  // |lambda_n(C) - 1| <= 1e-9.
  bool largest_is_one = false;
  // lambda_1(C) >= lambda1_lower_bound - 1e-9.
  bool lambda1_bound_ok = false;
  // lambda_n(sum L_i/|E_i|) <= sum lambda_n(L_i)/|E_i| + 1e-9.
  bool weyl_chain_ok = false;

  // Every layer connected and n >= 3.
  bool hypotheses_hold() const;
  // rho < 1 - kSimplicityGap.
  bool contracts() const;

  // Steps after which ||y_t - mu 1||_2 <= rho^t * initial_spread falls below
  // `tol`: ceil(log(tol / initial_spread) / log(rho)). Empty when rho does
  // not contract.
  std::optional<std::int64_t> PredictedSteps(double tol,
                                             double initial_spread) const;
};

// Throws NumericalError if the eigensolver fails.
SpectralReport Analyze(const TransitionSystem& ts, const LayeredGraph& g);

// Largest eigenvalue bound for one layer's Laplacian:
// max over edges {i, j} of |N_i u N_j|.
double LaplacianMaxBound(const LayeredGraph& g, std::size_t layer);

// True iff the smallest eigenvalue of `mat` is simple (gap > kSimplicityGap)
// and its eigenvector, signed so the largest-magnitude entry is positive, is
// entrywise positive. Throws std::invalid_argument unless `mat` is a
// generalized Laplacian of `structure`: negative exactly on the edges and zero
// on every other off-diagonal pair.
bool PerronCheck(const SymmetricMatrix& mat, std::span<const Edge> structure);

}  // namespace mlgd

#endif  // MLGD_SPECTRAL_H_
