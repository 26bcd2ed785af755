#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "treecolor/hypergraph.hpp"

namespace treecolor {

/// A connected, linear, Berge-acyclic r-graph with t edges. Such a hypergraph
/// has exactly 1 + (r-1)t vertices; recognize_rtree enforces all invariants.
struct RTree {
  Hypergraph tree;
  int t = 0;
};

enum class TreeDefect { NotConnected, NotLinear, HasBergeCycle, WrongVertexCount };

const char* to_string(TreeDefect d);

/// Accepts h as an r-tree or reports the first failed criterion, checked in
/// the order: connectivity, linearity, vertex-count identity. For a connected
/// linear r-graph the identity |V| = 1 + (r-1)t holds exactly when there is
/// no Berge cycle, so an identity deficit is reported as HasBergeCycle.
/// Throws on an empty edge list.
std::variant<RTree, TreeDefect> recognize_rtree(const Hypergraph& h);

/// An r-tree with edges relabeled e_1..e_t by a breadth-first traversal from
/// a chosen root edge, plus the induced vertex coloring: each vertex gets the
/// minimal label of an edge containing it. Every edge e_i with i >= 2 meets
/// the union of lower-labeled edges in exactly one vertex (its attachment),
/// which carries a color < i; the other r-1 vertices carry color i.
struct PreprocessedTree {
  RTree rtree;
  std::vector<int> edge_order;     // edge_order[i] = tree edge index of label i+1
  std::vector<int> label_of_edge;  // inverse permutation, 1-based labels
  std::vector<int> vertex_color;   // 1-based, minimal incident label
  std::vector<int> attachment;     // attachment[i] = attachment vertex of label
                                   // i+1; attachment[0] = -1 for the root
  int root_edge = 0;               // tree edge index carrying label 1

  int t() const { return rtree.t; }
  int label_edge_index(int label) const { return edge_order[label - 1]; }
  const Edge& label_edge(int label) const {
    return rtree.tree.edge(edge_order[label - 1]);
  }
  int attachment_vertex(int label) const { return attachment[label - 1]; }
};

/// BFS edge labeling from root_choice; frontier edges of each layer are
/// explored in increasing canonical (sorted-tuple lexicographic) order, which
/// makes the labeling deterministic. Throws on an invalid edge index.
PreprocessedTree preprocess(const RTree& tr, int root_choice);

/// Loose path: edge i (0-based) covers vertices i(r-1) .. i(r-1)+r-1.
RTree tree_path(int r, int t);

/// t edges pairwise sharing exactly the single vertex 0.
RTree tree_star(int r, int t);

/// Random r-tree grown by t-1 attachment steps; each new edge picks a
/// uniformly random existing vertex and r-1 fresh vertices. Deterministic in
/// the seed.
RTree random_tree(int r, int t, std::uint64_t seed);

/// All r-trees with t edges up to isomorphism (t <= 4), each given by one
/// attachment-labeled representative. Enumerates every attachment choice and
/// collapses duplicates by a canonical code of the vertex-edge incidence tree.
std::vector<RTree> all_trees(int r, int t);

/// Isomorphism-invariant code (equal codes iff isomorphic r-trees); used to
/// deduplicate all_trees and exposed for tests.
std::string canonical_tree_code(const RTree& tr);

}  // namespace treecolor
