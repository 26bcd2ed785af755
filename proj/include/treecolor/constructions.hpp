#pragma once

#include <string>
#include <vector>

#include "treecolor/hypergraph.hpp"

namespace treecolor {

/// All C(n,r) r-subsets of 0..n-1 in lexicographic order.
Hypergraph complete_r_graph(int n, int r);

/// Complete r-graph on (r-1)t vertices: chromatic number exactly t, yet free
/// of every r-tree with t edges. For t = 1 the vertex count (r-1) drops below
/// r, giving the edgeless hypergraph on r-1 vertices.
Hypergraph tight_gadget(int r, int t);

/// 3-graph on n vertices whose edges are all triples containing vertex 0.
/// Minimum degree n-2 (for n >= 5) yet no loose path with 3 edges.
Hypergraph star_example(int n);

/// Disjoint union of floor((k-1)/(r-1)) copies of the complete r-graph on
/// (r-1)t vertices, in consecutive index blocks: independence number at most
/// k-1 and no r-tree with t edges.
Hypergraph ramsey_lower(int r, int k, int t);

/// Parameter record for the named families, as exposed by the CLI.
struct NamedFamily {
  enum class Tag { Complete, TightGadget, StarExample, RamseyLower };
  Tag tag;
  int n = 0, r = 0, k = 0, t = 0;
};

Hypergraph build_family(const NamedFamily& f);

}  // namespace treecolor
