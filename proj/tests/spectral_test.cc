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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "mlgd/graph_io.h"
#include "mlgd/random_instances.h"
#include "mlgd/report_json.h"
#include "oracles.h"

namespace mlgd {
namespace {

using testing::CharacteristicPolynomial;
using testing::PolynomialFromRoots;

LayeredGraph Triangle() { return ParseLayeredGraph("n=3 m=1\nlayer 1\n1 2\n1 3\n2 3\n"); }
LayeredGraph Path3() { return ParseLayeredGraph("n=3 m=1\nlayer 1\n1 2\n2 3\n"); }
LayeredGraph TrianglePlusPath() {
  return ParseLayeredGraph("n=3 m=2\nlayer 1\n1 2\n1 3\n2 3\nlayer 2\n1 2\n2 3\n");
}
LayeredGraph SingleEdge() { return ParseLayeredGraph("n=2 m=1\nlayer 1\n1 2\n"); }
LayeredGraph Star4() { return ParseLayeredGraph("n=4 m=1\nlayer 1\n1 2\n1 3\n1 4\n"); }

LayeredGraph Complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return LayeredGraph(n, {edges});
}

void ExpectMatrixNear(const Matrix& got, const Matrix& expected, double tol) {
  ASSERT_EQ(got.rows(), expected.rows());
  ASSERT_EQ(got.cols(), expected.cols());
  EXPECT_LE(MaxAbsDiff(got, expected), tol);
}

TEST(TransitionSystemTest, TriangleIsRankOneAveraging) {
  const auto ts = BuildTransitionSystem(Triangle());
  const Matrix avg(3, 3, 1.0 / 3.0);
  ExpectMatrixNear(ts.per_layer[0], avg, 1e-15);
  ExpectMatrixNear(ts.mixing.matrix(), avg, 1e-15);
  EXPECT_EQ(ts.layer_edge_counts, (std::vector<std::size_t>{3}));
}

TEST(TransitionSystemTest, TrianglePlusPathMixingMatrix) {
  const Matrix expected = {{5.0 / 12, 5.0 / 12, 2.0 / 12},
                           {5.0 / 12, 2.0 / 12, 5.0 / 12},
                           {2.0 / 12, 5.0 / 12, 5.0 / 12}};
  // Hand value checked against the defining formula I - (L_K3/3 + L_P3/2)/2.
  const Matrix lk = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  const Matrix lp = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  Matrix formula = Matrix::Identity(3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      formula(r, c) -= 0.5 * (lk(r, c) / 3.0 + lp(r, c) / 2.0);
  ExpectMatrixNear(formula, expected, 1e-15);

  const auto ts = BuildTransitionSystem(TrianglePlusPath());
  ExpectMatrixNear(ts.mixing.matrix(), expected, 1e-15);
  const Matrix b2 = {{0.5, 0.5, 0}, {0.5, 0, 0.5}, {0, 0.5, 0.5}};
  ExpectMatrixNear(ts.per_layer[1], b2, 1e-15);
}

TEST(TransitionSystemTest, InvariantsOnRandomGraphs) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = RandomConnectedGraph(2 + trial % 14, 1 + trial % 4, 0.3, rng);
    const auto ts = BuildTransitionSystem(g);
    const std::size_t n = g.agent_count();
    Matrix mean(n, n);
    for (std::size_t k = 0; k < g.layer_count(); ++k) {
      const auto& b = ts.per_layer[k];
      const auto lap = BuildLaplacian(g, k);
      for (std::size_t c = 0; c < n; ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          EXPECT_EQ(b(r, c), b(c, r));
          EXPECT_GE(b(r, c), 0.0);
          EXPECT_NEAR(b(r, c),
                      (r == c ? 1.0 : 0.0) -
                          lap.matrix(r, c) / static_cast<double>(lap.edge_count),
                      1e-12);
          col += b(r, c);
          mean(r, c) += b(r, c) / static_cast<double>(g.layer_count());
        }
        EXPECT_NEAR(col, 1.0, 1e-12);
      }
    }
    ExpectMatrixNear(ts.mixing.matrix(), mean, 1e-12);
    for (double x : MatVec(ts.mixing.matrix(), Vector(n, 1.0))) EXPECT_NEAR(x, 1.0, 1e-12);
  }
}

TEST(AnalyzeTest, TriangleConvergesInOneStep) {
  const auto g = Triangle();
  const auto r = Analyze(BuildTransitionSystem(g), g);
  ASSERT_EQ(r.spectrum.size(), 3u);
  EXPECT_NEAR(r.spectrum[0], 0.0, 1e-12);
  EXPECT_NEAR(r.spectrum[1], 0.0, 1e-12);
  EXPECT_NEAR(r.spectrum[2], 1.0, 1e-12);
  EXPECT_NEAR(r.rho, 0.0, 1e-12);
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_TRUE(r.contracts());
}

TEST(AnalyzeTest, TrianglePlusPathSpectrum) {
  const Matrix c = {{5.0 / 12, 5.0 / 12, 2.0 / 12},
                    {5.0 / 12, 2.0 / 12, 5.0 / 12},
                    {2.0 / 12, 5.0 / 12, 5.0 / 12}};
  const auto from_matrix = CharacteristicPolynomial(c);
  const auto from_roots = PolynomialFromRoots({-0.25, 0.25, 1.0});
  for (std::size_t k = 0; k < from_roots.size(); ++k)
    EXPECT_NEAR(from_matrix[k], from_roots[k], 1e-14);

  const auto g = TrianglePlusPath();
  const auto r = Analyze(BuildTransitionSystem(g), g);
  EXPECT_NEAR(r.spectrum[0], -0.25, 1e-12);
  EXPECT_NEAR(r.spectrum[1], 0.25, 1e-12);
  EXPECT_NEAR(r.spectrum[2], 1.0, 1e-12);
  EXPECT_NEAR(r.rho, 0.25, 1e-12);
  EXPECT_DOUBLE_EQ(r.lambda1_lower_bound, -0.5);
  EXPECT_TRUE(r.perron_ok);
  EXPECT_TRUE(r.one_is_simple);
  EXPECT_TRUE(r.largest_is_one);
  EXPECT_TRUE(r.lambda1_bound_ok);
  EXPECT_TRUE(r.weyl_chain_ok);
  EXPECT_EQ(r.edge_counts, (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(r.lambda_max_bounds, (std::vector<double>{3, 3}));
}

TEST(AnalyzeTest, TwoAgentsOscillate) {
  const auto g = SingleEdge();
  const auto r = Analyze(BuildTransitionSystem(g), g);
  EXPECT_NEAR(r.spectrum[0], -1.0, 1e-12);
  EXPECT_NEAR(r.spectrum[1], 1.0, 1e-12);
  EXPECT_NEAR(r.rho, 1.0, 1e-12);
  EXPECT_TRUE(r.one_is_simple);
  EXPECT_FALSE(r.contracts());
  EXPECT_FALSE(r.hypotheses_hold());
  EXPECT_FALSE(r.PredictedSteps(1e-10, 1.0).has_value());
}

TEST(AnalyzeTest, DisconnectedLayerLosesSimpleUnitEigenvalue) {
  const LayeredGraph g(4, {{{0, 1}, {2, 3}}});
  const auto r = Analyze(BuildTransitionSystem(g), g);
  EXPECT_FALSE(r.layer_connected[0]);
  EXPECT_FALSE(r.union_connected);
  EXPECT_FALSE(r.one_is_simple);
  EXPECT_FALSE(r.perron_ok);
  EXPECT_FALSE(r.contracts());
}

TEST(AnalyzeTest, UnionConnectivityIsReportedSeparately) {
  const LayeredGraph g(3, {{{0, 1}}, {{1, 2}}});
  const auto r = Analyze(BuildTransitionSystem(g), g);
  EXPECT_TRUE(r.union_connected);
  EXPECT_FALSE(r.hypotheses_hold());
  EXPECT_TRUE(r.perron_ok);
}

TEST(AnalyzeTest, CompleteGraphRho) {
  // C = I - L/|E| with |E| = n(n-1)/2 has non-unit eigenvalue 1 - 2/(n-1).
  for (std::size_t n = 3; n <= 10; ++n) {
    const auto g = Complete(n);
    const double expected = static_cast<double>(n - 3) / static_cast<double>(n - 1);
    EXPECT_NEAR(Analyze(BuildTransitionSystem(g), g).rho, expected, 1e-9) << n;
  }
}

TEST(AnalyzeTest, ProofChainBoundsOnRandomConnectedInstances) {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 18;
    const auto g = RandomConnectedGraph(n, 1 + trial % 4, 0.2, rng);
    const auto r = Analyze(BuildTransitionSystem(g), g);
    EXPECT_GE(r.spectrum.front(), -1.0 / static_cast<double>(n - 1) - 1e-9);
    EXPECT_GT(r.spectrum.front(), -1.0);
    EXPECT_LE(r.spectrum.back(), 1.0 + 1e-9);
    EXPECT_TRUE(r.largest_is_one);
    EXPECT_TRUE(r.one_is_simple);
    EXPECT_TRUE(r.weyl_chain_ok);
    EXPECT_TRUE(r.perron_ok);
    EXPECT_LT(r.rho, 1.0);
  }
}

TEST(PredictedStepsTest, Formula) {
  SpectralReport r;
  r.rho = 0.25;
  EXPECT_EQ(r.PredictedSteps(1e-10, 3.0), 18);  // ceil(17.40)
  EXPECT_EQ(r.PredictedSteps(1e-10, 1e-11), 0);
  r.rho = 0.0;
  EXPECT_EQ(r.PredictedSteps(1e-10, 3.0), 1);
  r.rho = 1.0;
  EXPECT_FALSE(r.PredictedSteps(1e-10, 3.0).has_value());
}

TEST(LaplacianMaxBoundTest, Examples) {
  EXPECT_EQ(LaplacianMaxBound(Path3(), 0), 3.0);
  EXPECT_EQ(LaplacianMaxBound(Triangle(), 0), 3.0);
  EXPECT_EQ(LaplacianMaxBound(Star4(), 0), 4.0);

  // Star Laplacian spectrum {0, 1, 1, 4}: the bound is attained.
  const auto star = BuildLaplacian(Star4(), 0).matrix;
  const auto from_matrix = CharacteristicPolynomial(star.matrix());
  const auto from_roots = PolynomialFromRoots({0, 1, 1, 4});
  for (std::size_t k = 0; k < from_roots.size(); ++k)
    EXPECT_NEAR(from_matrix[k], from_roots[k], 1e-12);
  EXPECT_NEAR(EigenSym(star).eigenvalues.back(), 4.0, 1e-12);
}

TEST(LaplacianMaxBoundTest, DominatesLargestEigenvalue) {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 19;
    const LayeredGraph g(n, {RandomConnectedLayer(n, 0.05 * (trial % 10), rng)});
    EXPECT_LE(EigenSym(BuildLaplacian(g, 0).matrix).eigenvalues.back(),
              LaplacianMaxBound(g, 0) + 1e-9);
  }
}

TEST(PerronCheckTest, Examples) {
  const auto path = Path3();
  EXPECT_TRUE(PerronCheck(BuildLaplacian(path, 0).matrix, path.edges(0)));
  const auto two = TrianglePlusPath();
  EXPECT_TRUE(PerronCheck(BuildCombinedLaplacian(two), UnionEdges(two)));
  const LayeredGraph split(6, {{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}});
  EXPECT_FALSE(PerronCheck(BuildLaplacian(split, 0).matrix, split.edges(0)));
}

TEST(PerronCheckTest, GeneralizedLaplacianWithNonConstantEigenvector) {
  // Diagonal shift on agent 1 keeps the sign pattern of P_3.
  const SymmetricMatrix m(Matrix{{3, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
  const std::vector<Edge> p3 = {{0, 1}, {1, 2}};
  EXPECT_TRUE(PerronCheck(m, p3));
}

TEST(PerronCheckTest, StructureMismatchThrows) {
  const auto lap = BuildLaplacian(Path3(), 0).matrix;
  const std::vector<Edge> triangle = {{0, 1}, {0, 2}, {1, 2}};
  EXPECT_THROW(PerronCheck(lap, triangle), std::invalid_argument);
  const std::vector<Edge> partial = {{0, 1}};
  EXPECT_THROW(PerronCheck(lap, partial), std::invalid_argument);
}

TEST(SpectralReportJsonTest, HasDocumentedFields) {
  const auto g = TrianglePlusPath();
  const auto doc = SpectralReportToJson(Analyze(BuildTransitionSystem(g), g));
  for (const char* key : {"n", "m", "layer_connected", "edge_counts", "spectrum",
                          "rho", "lambda1_lower_bound", "lemma2_bounds",
                          "perron_ok", "one_is_simple"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["m"], 2);
  EXPECT_EQ(doc["spectrum"].size(), 3u);
  EXPECT_EQ(doc["layer_connected"], Json::array({true, true}));
  EXPECT_EQ(doc["perron_ok"], true);
}

}  // namespace
}  // namespace mlgd
