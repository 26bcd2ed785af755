#pragma once

#include <stdexcept>
#include <vector>

namespace treecolor {

/// An edge is a sorted list of r distinct vertex indices.
using Edge = std::vector<int>;

/// Uniform hypergraph on vertices 0..n-1. Every edge has exactly r distinct
/// vertices and is stored as a sorted tuple; duplicate edges are rejected.
/// Edge list order is preserved as given (constructions emit lexicographic
/// order, but incremental callers may append in any order).
class Hypergraph {
 public:
  Hypergraph() = default;  // empty 1-uniform hypergraph on 0 vertices
  Hypergraph(int n, int r, std::vector<Edge> edges);

  static Hypergraph edgeless(int n, int r) { return Hypergraph(n, r, {}); }

  int vertex_count() const { return n_; }
  int uniformity() const { return r_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Appends one edge, enforcing the same invariants as construction.
  void add_edge(Edge e);

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_ = 0;
  int r_ = 1;
  std::vector<Edge> edges_;
};

/// Vertex coloring with palette {1,...,palette}; colors[i] is vertex i's color.
struct Coloring {
  std::vector<int> colors;
  int palette = 0;
};

/// True iff every entry lies in 1..palette.
bool coloring_in_range(const Coloring& c);

/// True iff no edge of h is monochromatic. Throws if c.colors.size() != n.
bool is_proper(const Hypergraph& h, const Coloring& c);

/// Indices of all monochromatic edges, increasing. Empty iff is_proper.
std::vector<int> monochromatic_edges(const Hypergraph& h, const Coloring& c);

/// Partition of 0..n-1 into components connected via shared edges.
/// Each block is sorted; blocks are ordered by smallest element.
std::vector<std::vector<int>> connected_components(const Hypergraph& h);

/// Minimum over vertices of the number of incident edges (0 for n = 0).
int min_degree(const Hypergraph& h);

/// Injective map of a pattern hypergraph into a host: pattern vertex i goes
/// to vertex_map[i], pattern edge j to host edge edge_map[j].
struct Embedding {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

/// Checks the full embedding contract: sizes, ranges, injectivity, and that
/// the image of every pattern edge equals the mapped host edge as a set.
bool valid_embedding(const Hypergraph& pattern, const Hypergraph& host,
                     const Embedding& emb);

}  // namespace treecolor
