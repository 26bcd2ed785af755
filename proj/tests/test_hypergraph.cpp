#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "test_support.hpp"
#include "treecolor/hypergraph.hpp"

using namespace treecolor;

TEST_CASE("[hypergraph] construction validates edges") {
  Hypergraph k4(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.uniformity() == 3);
  CHECK(k4.edge_count() == 4);

  CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 2}, {0, 1, 2}}),
                  std::invalid_argument);  // duplicate edge
  CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 5}}),
                  std::invalid_argument);  // vertex out of range
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1}}),
                  std::invalid_argument);  // wrong edge size
  CHECK_THROWS_AS(Hypergraph(4, 3, {{0, 1, 1}}),
                  std::invalid_argument);  // repeated vertex
}

TEST_CASE("[hypergraph] edges are stored sorted, insertion order kept") {
  Hypergraph h(5, 3, {{4, 2, 0}, {1, 3, 2}});
  CHECK(h.edge(0) == Edge{0, 2, 4});
  CHECK(h.edge(1) == Edge{1, 2, 3});
  h.add_edge({4, 3, 1});
  CHECK(h.edge(2) == Edge{1, 3, 4});
  CHECK_THROWS_AS(h.add_edge({0, 2, 4}), std::invalid_argument);
}

TEST_CASE("[hypergraph] is_proper") {
  Hypergraph one(3, 3, {{0, 1, 2}});
  CHECK(is_proper(one, Coloring{{1, 1, 2}, 2}));
  CHECK_FALSE(is_proper(one, Coloring{{1, 1, 1}, 2}));

  Hypergraph k4(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(is_proper(k4, Coloring{{1, 1, 2, 2}, 2}));

  CHECK_THROWS_AS(is_proper(one, Coloring{{1, 1}, 2}), std::invalid_argument);
}

TEST_CASE("[hypergraph] monochromatic_edges") {
  Hypergraph one(3, 3, {{0, 1, 2}});
  CHECK(monochromatic_edges(one, Coloring{{1, 1, 1}, 1}) ==
        std::vector<int>{0});
  CHECK(monochromatic_edges(one, Coloring{{1, 2, 1}, 2}).empty());

  Hypergraph two(5, 3, {{0, 1, 2}, {2, 3, 4}});
  CHECK(monochromatic_edges(two, Coloring{{1, 1, 1, 1, 1}, 1}) ==
        std::vector<int>{0, 1});
}

TEST_CASE("[hypergraph] connected_components") {
  Hypergraph chain(5, 3, {{0, 1, 2}, {2, 3, 4}});
  auto comps = connected_components(chain);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == std::vector<int>{0, 1, 2, 3, 4});

  Hypergraph split(6, 3, {{0, 1, 2}, {3, 4, 5}});
  CHECK(connected_components(split).size() == 2);

  Hypergraph bare(2, 3, {});
  auto singles = connected_components(bare);
  REQUIRE(singles.size() == 2);
  CHECK(singles[0] == std::vector<int>{0});
  CHECK(singles[1] == std::vector<int>{1});
}

TEST_CASE("[hypergraph] min_degree") {
  Hypergraph k4(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(min_degree(k4) == 3);

  // All triples through vertex 0 on 6 vertices: the non-center vertices have
  // the smaller degree, 4.
  std::vector<Edge> star;
  for (int i = 1; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) star.push_back({0, i, j});
  CHECK(min_degree(Hypergraph(6, 3, star)) == 4);

  CHECK(min_degree(Hypergraph(3, 3, {})) == 0);
}

TEST_CASE("[hypergraph] is_proper agrees with monochromatic_edges") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    int r = 2 + static_cast<int>(seed % 2);
    Hypergraph h = testing::random_hypergraph(n, r, 50, seed);
    Coloring c = testing::random_coloring(n, 1 + seed % 3, seed ^ 0x9e37);
    CHECK(is_proper(h, c) == monochromatic_edges(h, c).empty());
  }
}

TEST_CASE("[hypergraph] components always partition the vertex set") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 1 + static_cast<int>(seed % 9);
    Hypergraph h = testing::random_hypergraph(n, std::min(3, n), 30, seed);
    auto comps = connected_components(h);
    std::vector<int> all;
    for (const auto& block : comps) {
      CHECK(std::is_sorted(block.begin(), block.end()));
      all.insert(all.end(), block.begin(), block.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<int> expect(n);
    for (int v = 0; v < n; ++v) expect[v] = v;
    CHECK(all == expect);
  }
}

TEST_CASE("[hypergraph] valid_embedding") {
  Hypergraph pattern(3, 3, {{0, 1, 2}});
  Hypergraph host(5, 3, {{0, 1, 2}, {2, 3, 4}});
  CHECK(valid_embedding(pattern, host, Embedding{{2, 3, 4}, {1}}));
  CHECK_FALSE(valid_embedding(pattern, host, Embedding{{2, 3, 3}, {1}}));
  CHECK_FALSE(valid_embedding(pattern, host, Embedding{{0, 1, 3}, {0}}));
  CHECK_FALSE(valid_embedding(pattern, host, Embedding{{2, 3, 4}, {0}}));
  CHECK_FALSE(valid_embedding(pattern, host, Embedding{{2, 3}, {1}}));
}
