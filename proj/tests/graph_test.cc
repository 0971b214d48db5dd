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

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "mlgd/errors.h"
#include "mlgd/graph_io.h"
#include "mlgd/random_instances.h"
#include "oracles.h"

namespace mlgd {
namespace {

constexpr char kPath3[] = "n=3 m=1\nlayer 1\n1 2\n2 3\n";
constexpr char kTrianglePlusPath[] =
    "# triangle and path\n"
    "n=3 m=2\n"
    "layer 1\n1 2\n1 3\n2 3\n"
    "layer 2\n1 2\n2 3\n";

std::size_t ParseErrorLine(const std::string& text) {
  try {
    ParseLayeredGraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 0;
}

TEST(ParseLayeredGraphTest, Path) {
  const auto g = ParseLayeredGraph(kPath3);
  EXPECT_EQ(g.agent_count(), 3u);
  EXPECT_EQ(g.layer_count(), 1u);
  const std::vector<Edge> expected = {{0, 1}, {1, 2}};
  EXPECT_EQ(std::vector<Edge>(g.edges(0).begin(), g.edges(0).end()), expected);
}

TEST(ParseLayeredGraphTest, TwoLayersWithComment) {
  const auto g = ParseLayeredGraph(kTrianglePlusPath);
  EXPECT_EQ(g.layer_count(), 2u);
  EXPECT_EQ(g.edge_count(0), 3u);
  EXPECT_EQ(g.edge_count(1), 2u);
}

TEST(ParseLayeredGraphTest, ToleratesBlankLinesAndCrlf) {
  const auto g = ParseLayeredGraph("n=3 m=1\r\n\r\nlayer 1\r\n 1   2 \r\n2\t3\r\n");
  EXPECT_EQ(g.edge_count(0), 2u);
}

TEST(ParseLayeredGraphTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(ParseErrorLine("n=3 m=1\nlayer 1\n1 1\n"), 3u);       // self-loop
  EXPECT_EQ(ParseErrorLine("n=3 m=1\nlayer 1\n1 4\n"), 3u);       // range
  EXPECT_EQ(ParseErrorLine("n=3 m=1\nlayer 1\n0 1\n"), 3u);       // range
  EXPECT_EQ(ParseErrorLine("n=3 m=1\nlayer 1\n1 2\n2 1\n"), 4u);  // duplicate
  EXPECT_EQ(ParseErrorLine("n=3 m=1\nlayer 1\n1 2 3\n"), 3u);     // malformed
  EXPECT_EQ(ParseErrorLine("n=3 m=1\nlayer 1\n1 x\n"), 3u);
  EXPECT_EQ(ParseErrorLine("n=3 m=1\nlayer 1\n-1 2\n"), 3u);
  EXPECT_EQ(ParseErrorLine("n=3 m=2\nlayer 1\nlayer 2\n1 2\n"), 2u);  // empty
  EXPECT_EQ(ParseErrorLine("n=3 m=2\nlayer 1\n1 2\nlayer 2\n"), 4u);  // empty
  EXPECT_EQ(ParseErrorLine("n=3 m=2\nlayer 2\n1 2\n"), 2u);  // order
  EXPECT_EQ(ParseErrorLine("n=3 m=1\nlayer 1\n1 2\nlayer 2\n1 2\n"), 4u);
  EXPECT_EQ(ParseErrorLine("# c\nn=3\n"), 2u);
  EXPECT_EQ(ParseErrorLine("n=0 m=1\n"), 1u);
  EXPECT_EQ(ParseErrorLine("n=3 m=1\n1 2\n"), 2u);  // edge before layer
  EXPECT_THROW(ParseLayeredGraph(""), ParseError);
  EXPECT_THROW(ParseLayeredGraph("n=3 m=2\nlayer 1\n1 2\n"), ParseError);
}

TEST(ParseLayeredGraphTest, SelfLoopMessage) {
  try {
    ParseLayeredGraph("n=3 m=1\nlayer 1\n1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()), "line 3: self-loop at vertex 1");
  }
}

TEST(ParseLayeredGraphTest, FormatRoundTrips) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = RandomConnectedGraph(2 + trial % 9, 1 + trial % 3, 0.3, rng);
    const auto text = FormatLayeredGraph(g);
    EXPECT_EQ(FormatLayeredGraph(ParseLayeredGraph(text)), text);
  }
}

TEST(ReadLayeredGraphFileTest, MissingFile) {
  EXPECT_THROW(ReadLayeredGraphFile("/nonexistent/graph.txt"), ParseError);
}

TEST(LayeredGraphTest, ConstructorValidates) {
  EXPECT_THROW(LayeredGraph(3, {{}}), std::invalid_argument);
  EXPECT_THROW(LayeredGraph(3, {{{0, 3}}}), std::invalid_argument);
  EXPECT_THROW(LayeredGraph(3, {{{1, 1}}}), std::invalid_argument);
  EXPECT_THROW(LayeredGraph(3, {{{0, 1}, {1, 0}}}), std::invalid_argument);
  EXPECT_THROW(LayeredGraph(3, {}), std::invalid_argument);
}

TEST(NeighborhoodTest, Examples) {
  const auto path = ParseLayeredGraph(kPath3);
  EXPECT_EQ(Neighborhood(path, 0, 1), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(Neighborhood(path, 0, 0), (std::vector<std::size_t>{1}));
  const auto two = ParseLayeredGraph(kTrianglePlusPath);
  EXPECT_EQ(Neighborhood(two, 0, 2), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(Neighborhood(two, 2, 0), std::out_of_range);
  EXPECT_THROW(Neighborhood(two, 0, 3), std::out_of_range);
}

TEST(IsConnectedTest, Examples) {
  EXPECT_TRUE(IsConnected(ParseLayeredGraph(kPath3), 0));
  EXPECT_FALSE(IsConnected(LayeredGraph(3, {{{0, 1}}}), 0));
  const auto two = ParseLayeredGraph(kTrianglePlusPath);
  EXPECT_TRUE(IsConnected(two, 0));
  EXPECT_TRUE(AllLayersConnected(two));
  EXPECT_THROW(IsConnected(two, 5), std::out_of_range);
}

TEST(IsConnectedTest, UnionCanConnectDisconnectedLayers) {
  const LayeredGraph g(3, {{{0, 1}}, {{1, 2}}});
  EXPECT_FALSE(IsConnected(g, 0));
  EXPECT_FALSE(IsConnected(g, 1));
  EXPECT_FALSE(AllLayersConnected(g));
  EXPECT_TRUE(IsUnionConnected(g));
}

// Every graph with at least one edge on n <= 7 vertices.
TEST(IsConnectedTest, AgreesWithTransitiveClosureExhaustively) {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    const std::uint32_t count = 1u << pairs.size();
    std::size_t disagreements = 0;
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      std::vector<Edge> edges;
      std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask & (1u << k)) {
          edges.emplace_back(pairs[k].first, pairs[k].second);
          adj[pairs[k].first][pairs[k].second] = 1;
          adj[pairs[k].second][pairs[k].first] = 1;
        }
      }
      const LayeredGraph g(n, {std::move(edges)});
      if (IsConnected(g, 0) != testing::ClosureConnected(std::move(adj)))
        ++disagreements;
    }
    EXPECT_EQ(disagreements, 0u) << "n = " << n;
  }
}

TEST(BuildLaplacianTest, Examples) {
  const auto path = BuildLaplacian(ParseLayeredGraph(kPath3), 0);
  EXPECT_EQ(path.matrix.matrix(), (Matrix{{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}));
  EXPECT_EQ(path.edge_count, 2u);

  const auto tri = BuildLaplacian(ParseLayeredGraph(kTrianglePlusPath), 0);
  EXPECT_EQ(tri.matrix.matrix(), (Matrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  EXPECT_EQ(tri.edge_count, 3u);

  const auto edge = BuildLaplacian(LayeredGraph(2, {{{0, 1}}}), 0);
  EXPECT_EQ(edge.matrix.matrix(), (Matrix{{1, -1}, {-1, 1}}));
}

TEST(BuildLaplacianTest, MatchesDegreeMinusAdjacencyOnRandomGraphs) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = RandomConnectedGraph(2 + trial % 15, 1 + trial % 4, 0.25, rng);
    const std::size_t n = g.agent_count();
    for (std::size_t k = 0; k < g.layer_count(); ++k) {
      const auto lap = BuildLaplacian(g, k);
      for (std::size_t c = 0; c < n; ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < n; ++r) col += lap.matrix(r, c);
        EXPECT_EQ(col, 0.0);
      }
      for (std::size_t i = 0; i < n; ++i) {
        const auto nb = Neighborhood(g, k, i);
        EXPECT_EQ(lap.matrix(i, i), static_cast<double>(nb.size()));
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const bool adjacent = std::find(nb.begin(), nb.end(), j) != nb.end();
          EXPECT_EQ(lap.matrix(i, j), adjacent ? -1.0 : 0.0);
        }
      }
    }
  }
}

TEST(BuildCombinedLaplacianTest, SingleLayerIsItsLaplacian) {
  const auto g = ParseLayeredGraph(kPath3);
  EXPECT_EQ(BuildCombinedLaplacian(g).matrix(), BuildLaplacian(g, 0).matrix.matrix());
}

TEST(BuildCombinedLaplacianTest, TrianglePlusPath) {
  const auto g = ParseLayeredGraph(kTrianglePlusPath);
  // 2 * L(K3) + 3 * L(P3).
  const Matrix expected = {{7, -5, -2}, {-5, 10, -5}, {-2, -5, 7}};
  EXPECT_EQ(BuildCombinedLaplacian(g).matrix(), expected);
}

TEST(BuildCombinedLaplacianTest, IdenticalTriangles) {
  const auto tri = ParseLayeredGraph(kTrianglePlusPath);
  const auto k3 = std::vector<Edge>(tri.edges(0).begin(), tri.edges(0).end());
  const LayeredGraph g(3, {k3, k3});
  const Matrix expected = {{12, -6, -6}, {-6, 12, -6}, {-6, -6, 12}};
  EXPECT_EQ(BuildCombinedLaplacian(g).matrix(), expected);
}

TEST(BuildCombinedLaplacianTest, EqualsScaledSumOfNormalizedLaplacians) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = RandomConnectedGraph(2 + trial % 12, 1 + trial % 4, 0.3, rng);
    const std::size_t n = g.agent_count();
    double product = 1.0;
    Matrix normalized(n, n);
    for (std::size_t k = 0; k < g.layer_count(); ++k) {
      const auto lap = BuildLaplacian(g, k);
      product *= static_cast<double>(lap.edge_count);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          normalized(r, c) += lap.matrix(r, c) / static_cast<double>(lap.edge_count);
    }
    const auto combined = BuildCombinedLaplacian(g).matrix();
    for (std::size_t r = 0; r < n; ++r) {
      double row = 0.0;
      for (std::size_t c = 0; c < n; ++c) {
        row += combined(r, c);
        EXPECT_NEAR(combined(r, c), product * normalized(r, c),
                    1e-12 * std::abs(product * normalized(r, c)) + 1e-12);
      }
      EXPECT_EQ(row, 0.0);
    }
  }
}

TEST(RandomConnectedLayerTest, ConnectedAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng a(seed);
    Rng b(seed);
    const std::size_t n = 2 + seed;
    const auto edges = RandomConnectedLayer(n, 0.1, a);
    EXPECT_EQ(RandomConnectedLayer(n, 0.1, b), edges);
    EXPECT_TRUE(IsConnected(LayeredGraph(n, {edges}), 0));
  }
  Rng rng(0);
  EXPECT_EQ(RandomConnectedLayer(10, 0.0, rng).size(), 9u);  // a tree
}

}  // namespace
}  // namespace mlgd
