#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "approxsym/generators.hpp"
#include "centrality_oracles.hpp"

namespace approxsym {
namespace {

using centrality_oracles::is_connected;

// Independent count: along dimension i there are (l_i - 1) * prod_{j != i} l_j edges.
std::size_t grid_edge_formula(const std::vector<std::size_t>& lengths) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    std::size_t e = lengths[i] - 1;
    for (std::size_t j = 0; j < lengths.size(); ++j)
      if (j != i) e *= lengths[j];
    total += e;
  }
  return total;
}

TEST(GridTest, SmallExamples) {
  const Graph g = grid_graph({5, 2});
  EXPECT_EQ(g.size(), 10U);
  EXPECT_EQ(g.edge_count(), 13U);
  EXPECT_EQ(grid_graph({2, 5, 5}).size(), 50U);
  EXPECT_EQ(grid_graph({5, 20}).edge_count(), 175U);
  // Index layout: (r, c) -> r * cols + c.
  const Graph r34 = grid_graph({3, 4});
  EXPECT_TRUE(r34.has_edge(0, 1));
  EXPECT_TRUE(r34.has_edge(0, 4));
  EXPECT_FALSE(r34.has_edge(3, 4));
}

TEST(GridTest, CountsMatchFormula) {
  Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::size_t> lengths(1 + rng.below(3));
    for (auto& l : lengths) l = 1 + rng.below(7);
    const Graph g = grid_graph(lengths);
    EXPECT_EQ(g.size(), std::accumulate(lengths.begin(), lengths.end(), std::size_t{1}, std::multiplies<>()));
    EXPECT_EQ(g.edge_count(), grid_edge_formula(lengths));
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(GridTest, Errors) {
  EXPECT_THROW(grid_graph(std::span<const std::size_t>{}), std::invalid_argument);
  EXPECT_THROW(grid_graph({3, 0}), std::invalid_argument);
  EXPECT_EQ(grid_lengths_for(100, 2), (std::vector<std::size_t>{5, 20}));
  EXPECT_EQ(grid_lengths_for(100, 3), (std::vector<std::size_t>{2, 5, 10}));
  EXPECT_THROW(grid_lengths_for(101, 2), ConfigError);
}

TEST(ErdosRenyiTest, EdgeCountMoments) {
  Rng rng(52);
  const int samples = 200;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const auto m = static_cast<double>(erdos_renyi(100, 0.1, rng).edge_count());
    sum += m;
    sum_sq += m * m;
  }
  const double mean = sum / samples;
  const double sd = std::sqrt((sum_sq - samples * mean * mean) / (samples - 1));
  const double expected_sd = std::sqrt(4950 * 0.1 * 0.9);  // about 21.1
  EXPECT_NEAR(mean, 495.0, 4 * expected_sd / std::sqrt(samples));
  EXPECT_NEAR(sd, expected_sd, 0.2 * expected_sd);
}

TEST(ErdosRenyiTest, Extremes) {
  Rng rng(53);
  EXPECT_EQ(erdos_renyi(12, 0.0, rng).edge_count(), 0U);
  EXPECT_EQ(erdos_renyi(12, 1.0, rng).edge_count(), 66U);
  EXPECT_THROW(erdos_renyi(5, 1.5, rng), std::invalid_argument);
}

TEST(BarabasiAlbertTest, EdgeCountAndConnectivity) {
  Rng rng(54);
  for (int i = 0; i < 5; ++i) {
    const Graph g = barabasi_albert(150, 5, 5, rng);
    EXPECT_EQ(g.edge_count(), 729U);  // 4 seed-path edges + 5 * 145
    EXPECT_TRUE(is_connected(g));
    for (Vertex v = 5; v < 150; ++v) EXPECT_GE(g.degree(v), 5U);
  }
}

TEST(BarabasiAlbertTest, SingleLinkGrowsATree) {
  Rng rng(55);
  const Graph g = barabasi_albert(200, 1, 1, rng);
  EXPECT_EQ(g.edge_count(), 199U);
  EXPECT_TRUE(is_connected(g));
}

TEST(BarabasiAlbertTest, HeavyTail) {
  // Preferential attachment makes the maximum degree grow like sqrt(n);
  // a uniform-attachment graph of the same size stays near log(n).
  Rng rng(56);
  std::size_t max_deg = 0;
  const Graph g = barabasi_albert(2000, 2, 2, rng);
  for (Vertex v = 0; v < g.size(); ++v) max_deg = std::max(max_deg, g.degree(v));
  EXPECT_GT(max_deg, 40U);
  EXPECT_THROW(barabasi_albert(5, 3, 2, rng), std::invalid_argument);
}

TEST(DuplicationDivergenceTest, FullRetentionFromTwoVertices) {
  Rng rng(57);
  const Graph p3 = duplication_divergence(3, 1.0, rng);
  EXPECT_EQ(p3.edge_count(), 2U);
  std::vector<std::size_t> deg{p3.degree(0), p3.degree(1), p3.degree(2)};
  std::sort(deg.begin(), deg.end());
  EXPECT_EQ(deg, (std::vector<std::size_t>{1, 1, 2}));
}

TEST(DuplicationDivergenceTest, ConnectedAndSized) {
  Rng rng(58);
  for (int i = 0; i < 10; ++i) {
    const Graph g = duplication_divergence(150, 0.1, rng);
    EXPECT_EQ(g.size(), 150U);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(DuplicationDivergenceTest, GivesUpAfterTooManyDiscards) {
  Rng rng(59);
  EXPECT_THROW(duplication_divergence(50, 1e-12, rng, 100), GenerationError);
  EXPECT_THROW(duplication_divergence(50, 0.0, rng), std::invalid_argument);
}

TEST(ModelSpecTest, GenerateIsDeterministic) {
  for (auto family : {ModelFamily::er, ModelFamily::ba, ModelFamily::dd}) {
    ModelSpec spec;
    spec.family = family;
    spec.n = 60;
    spec.p = 0.1;
    spec.k = 3;
    spec.sigma = 0.2;
    EXPECT_EQ(generate(spec, 123), generate(spec, 123)) << to_string(family);
    EXPECT_FALSE(generate(spec, 123) == generate(spec, 124)) << to_string(family);
  }
}

TEST(ModelSpecTest, ParamsAndValidation) {
  ModelSpec ba{ModelFamily::ba, {}, 150, 0.0, 5, 0, 0.0};
  EXPECT_EQ(ba.params(), "n=150 k=5 m0=5");
  ModelSpec grid{ModelFamily::grid, {2, 5, 10}, 0, 0.0, 0, 0, 0.0};
  EXPECT_EQ(grid.params(), "lengths=2x5x10");
  EXPECT_EQ(grid.vertex_count(), 100U);
  ModelSpec bad = ba;
  bad.k = 200;
  EXPECT_THROW(bad.validate(), ConfigError);
  EXPECT_EQ(parse_model_family("dd"), ModelFamily::dd);
  EXPECT_THROW(parse_model_family("ws"), ConfigError);
}

}  // namespace
}  // namespace approxsym
