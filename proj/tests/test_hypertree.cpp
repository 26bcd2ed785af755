#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "treecolor/constructions.hpp"
#include "treecolor/hypertree.hpp"
#include "treecolor/oracles.hpp"

using namespace treecolor;

TEST_CASE("[hypertree] recognize accepts the loose path") {
  Hypergraph path(7, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  auto res = recognize_rtree(path);
  REQUIRE(std::holds_alternative<RTree>(res));
  CHECK(std::get<RTree>(res).t == 3);
}

TEST_CASE("[hypertree] recognize rejections") {
  Hypergraph overlap(4, 3, {{0, 1, 2}, {1, 2, 3}});
  auto res = recognize_rtree(overlap);
  REQUIRE(std::holds_alternative<TreeDefect>(res));
  CHECK(std::get<TreeDefect>(res) == TreeDefect::NotLinear);

  Hypergraph k4(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(std::holds_alternative<TreeDefect>(recognize_rtree(k4)));

  Hypergraph split(6, 3, {{0, 1, 2}, {3, 4, 5}});
  CHECK(std::get<TreeDefect>(recognize_rtree(split)) ==
        TreeDefect::NotConnected);

  Hypergraph triangle(3, 2, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(std::get<TreeDefect>(recognize_rtree(triangle)) ==
        TreeDefect::HasBergeCycle);

  CHECK_THROWS_AS(recognize_rtree(Hypergraph(3, 3, {})), std::invalid_argument);
}

TEST_CASE("[hypertree] preprocess labels the loose path in order") {
  RTree path = tree_path(3, 3);
  PreprocessedTree pt = preprocess(path, 0);
  CHECK(pt.edge_order == std::vector<int>{0, 1, 2});
  CHECK(pt.vertex_color == std::vector<int>{1, 1, 1, 2, 2, 3, 3});
  CHECK(pt.attachment_vertex(2) == 2);
  CHECK(pt.attachment_vertex(3) == 4);
}

TEST_CASE("[hypertree] preprocess on a single edge") {
  RTree one = tree_path(3, 1);
  PreprocessedTree pt = preprocess(one, 0);
  CHECK(pt.edge_order == std::vector<int>{0});
  CHECK(pt.vertex_color == std::vector<int>{1, 1, 1});
}

TEST_CASE("[hypertree] preprocess on the 3-edge star") {
  RTree star = tree_star(3, 3);
  PreprocessedTree pt = preprocess(star, 0);
  CHECK(pt.vertex_color == std::vector<int>{1, 1, 1, 2, 2, 3, 3});
  CHECK(pt.attachment_vertex(2) == 0);
  CHECK(pt.attachment_vertex(3) == 0);
}

TEST_CASE("[hypertree] preprocess rejects a bad root index") {
  RTree path = tree_path(3, 2);
  CHECK_THROWS_AS(preprocess(path, 2), std::invalid_argument);
  CHECK_THROWS_AS(preprocess(path, -1), std::invalid_argument);
}

TEST_CASE("[hypertree] path and star generators") {
  RTree p33 = tree_path(3, 3);
  CHECK(p33.tree.edges() ==
        std::vector<Edge>{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});

  RTree p22 = tree_path(2, 2);
  CHECK(p22.tree.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  RTree p41 = tree_path(4, 1);
  CHECK(p41.tree.edges() == std::vector<Edge>{{0, 1, 2, 3}});

  RTree s33 = tree_star(3, 3);
  CHECK(s33.tree.edges() ==
        std::vector<Edge>{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});

  RTree s23 = tree_star(2, 3);
  CHECK(s23.tree.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});

  RTree s31 = tree_star(3, 1);
  CHECK(s31.tree.edges() == std::vector<Edge>{{0, 1, 2}});

  CHECK_THROWS_AS(tree_path(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(tree_star(3, 0), std::invalid_argument);
}

TEST_CASE("[hypertree] random trees are deterministic and recognized") {
  RTree single = random_tree(4, 1, 99);
  CHECK(single.tree.edge_count() == 1);

  RTree a = random_tree(3, 4, 7);
  RTree b = random_tree(3, 4, 7);
  CHECK(a.tree == b.tree);

  RTree two = random_tree(3, 2, 5);
  CHECK(std::holds_alternative<RTree>(recognize_rtree(two.tree)));
  CHECK(two.tree.vertex_count() == 5);

  for (int r = 2; r <= 5; ++r)
    for (int t = 1; t <= 4; ++t)
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RTree tr = random_tree(r, t, seed);
        CHECK(std::holds_alternative<RTree>(recognize_rtree(tr.tree)));
      }
}

TEST_CASE("[hypertree] fixed generators are recognized across the sweep") {
  for (int r = 2; r <= 5; ++r)
    for (int t = 1; t <= 4; ++t) {
      CHECK(std::holds_alternative<RTree>(recognize_rtree(tree_path(r, t).tree)));
      CHECK(std::holds_alternative<RTree>(recognize_rtree(tree_star(r, t).tree)));
    }
}

TEST_CASE("[hypertree] all_trees counts") {
  CHECK(all_trees(3, 1).size() == 1);
  CHECK(all_trees(3, 2).size() == 1);
  CHECK(all_trees(2, 2).size() == 1);
  // Graph trees on 4 and 5 nodes: 2 and 3 isomorphism classes.
  CHECK(all_trees(2, 3).size() == 2);
  CHECK(all_trees(2, 4).size() == 3);
  CHECK_THROWS_AS(all_trees(3, 5), std::invalid_argument);
}

TEST_CASE("[hypertree] all_trees(2,3) holds the path and the star") {
  std::set<std::string> codes;
  for (const RTree& tr : all_trees(2, 3)) codes.insert(canonical_tree_code(tr));
  CHECK(codes.count(canonical_tree_code(tree_path(2, 3))) == 1);
  CHECK(codes.count(canonical_tree_code(tree_star(2, 3))) == 1);
}

TEST_CASE("[hypertree] all_trees outputs are recognized and distinct") {
  for (int r = 2; r <= 5; ++r)
    for (int t = 1; t <= 4; ++t) {
      std::set<std::string> codes;
      for (const RTree& tr : all_trees(r, t)) {
        CHECK(std::holds_alternative<RTree>(recognize_rtree(tr.tree)));
        CHECK(codes.insert(canonical_tree_code(tr)).second);
      }
    }
}

TEST_CASE("[hypertree] star and path stay distinct for r >= 2, t >= 3") {
  for (int r = 2; r <= 5; ++r) {
    CHECK(canonical_tree_code(tree_path(r, 2)) ==
          canonical_tree_code(tree_star(r, 2)));
    CHECK(canonical_tree_code(tree_path(r, 3)) !=
          canonical_tree_code(tree_star(r, 3)));
  }
}

TEST_CASE("[hypertree] tree codes are invariant under relabeling") {
  std::mt19937_64 rng(424242);
  for (int round = 0; round < 60; ++round) {
    const int r = 2 + round % 3;
    const int t = 1 + round % 4;
    RTree tr = random_tree(r, t, rng());
    const int n = tr.tree.vertex_count();

    std::vector<int> relabel(n);
    for (int v = 0; v < n; ++v) relabel[v] = v;
    for (int v = n - 1; v > 0; --v)
      std::swap(relabel[v], relabel[rng() % (v + 1)]);

    std::vector<Edge> shuffled;
    for (const Edge& e : tr.tree.edges()) {
      Edge img;
      for (int v : e) img.push_back(relabel[v]);
      shuffled.push_back(std::move(img));
    }
    for (int i = static_cast<int>(shuffled.size()) - 1; i > 0; --i)
      std::swap(shuffled[i], shuffled[rng() % (i + 1)]);

    RTree twin{Hypergraph(n, r, std::move(shuffled)), t};
    CHECK(canonical_tree_code(twin) == canonical_tree_code(tr));
  }
}

TEST_CASE("[hypertree] every random tree matches an enumerated class") {
  for (int r = 2; r <= 3; ++r)
    for (int t = 1; t <= 4; ++t) {
      std::set<std::string> codes;
      for (const RTree& tr : all_trees(r, t))
        codes.insert(canonical_tree_code(tr));
      for (std::uint64_t seed = 0; seed < 50; ++seed)
        CHECK(codes.count(canonical_tree_code(random_tree(r, t, seed))) == 1);
    }
}

TEST_CASE("[hypertree] preprocess invariants for every tree and root") {
  std::vector<RTree> trees;
  for (int r = 2; r <= 3; ++r)
    for (int t = 1; t <= 4; ++t)
      for (const RTree& tr : all_trees(r, t)) trees.push_back(tr);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    trees.push_back(random_tree(2 + seed % 3, 1 + seed % 4, seed));

  for (const RTree& tr : trees) {
    const int r = tr.tree.uniformity();
    for (int root = 0; root < tr.t; ++root) {
      PreprocessedTree pt = preprocess(tr, root);
      PreprocessedTree again = preprocess(tr, root);
      CHECK(pt.edge_order == again.edge_order);

      // Label 1 is the root; all its vertices carry color 1.
      CHECK(pt.edge_order[0] == root);
      for (int v : pt.label_edge(1)) CHECK(pt.vertex_color[v] == 1);

      for (int label = 2; label <= tr.t; ++label) {
        const Edge& e = pt.label_edge(label);
        int below = 0, exact = 0;
        for (int v : e) {
          CHECK(pt.vertex_color[v] <= label);
          if (pt.vertex_color[v] < label) {
            ++below;
            CHECK(v == pt.attachment_vertex(label));
          } else {
            ++exact;
          }
        }
        CHECK(below == 1);      // unique attachment vertex
        CHECK(exact == r - 1);  // the fresh vertices carry this label

        // The path back to the root passes strictly smaller labels: the next
        // edge toward the root from label l is e_{color(attachment(l))}.
        int cur = label;
        int steps = 0;
        while (cur != 1) {
          int next = pt.vertex_color[pt.attachment_vertex(cur)];
          CHECK(next < cur);
          cur = next;
          REQUIRE(++steps <= tr.t);
        }
      }

      // Every vertex color is the minimal label of an incident edge.
      for (int v = 0; v < tr.tree.vertex_count(); ++v) {
        int minimal = tr.t + 1;
        for (int label = 1; label <= tr.t; ++label) {
          const Edge& e = pt.label_edge(label);
          if (std::binary_search(e.begin(), e.end(), v))
            minimal = std::min(minimal, label);
        }
        CHECK(pt.vertex_color[v] == minimal);
      }
    }
  }
}

TEST_CASE("[hypertree] count criterion matches the cycle oracle exhaustively") {
  // All connected 3-graphs with up to 3 edges on up to 7 vertices: recognized
  // implies no Berge cycle; connected and linear with a vertex-count deficit
  // implies the oracle finds one.
  oracles::OracleBudget budget;
  for (int n = 3; n <= 7; ++n) {
    const std::vector<Edge> pool = complete_r_graph(n, 3).edges();
    const int m = static_cast<int>(pool.size());
    std::vector<int> pick;
    auto run = [&]() {
      std::vector<Edge> edges;
      for (int i : pick) edges.push_back(pool[i]);
      Hypergraph h(n, 3, std::move(edges));
      if (connected_components(h).size() != 1) return;
      auto res = recognize_rtree(h);
      auto cycle = oracles::berge_cycle_exists(h, budget);
      if (std::holds_alternative<RTree>(res)) {
        CHECK_FALSE(cycle.has_value());
      } else if (std::get<TreeDefect>(res) == TreeDefect::HasBergeCycle ||
                 std::get<TreeDefect>(res) == TreeDefect::NotLinear) {
        REQUIRE(cycle.has_value());
        CHECK(oracles::valid_berge_cycle(h, *cycle));
      }
    };
    auto rec = [&](auto&& self, int from, int left) -> void {
      if (!pick.empty()) run();
      if (left == 0) return;
      for (int i = from; i < m; ++i) {
        pick.push_back(i);
        self(self, i + 1, left - 1);
        pick.pop_back();
      }
    };
    rec(rec, 0, 3);
  }
}
