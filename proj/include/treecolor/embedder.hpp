#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "treecolor/hypergraph.hpp"
#include "treecolor/hypertree.hpp"

namespace treecolor {

/// A color-preserving injective copy of a subtree of the preprocessed tree in
/// a host: the placed labels always form a subtree containing label 1, phi is
/// injective, every placed vertex lands on a host vertex of its own color, and
/// every placed tree edge maps onto a host edge as a set.
struct ColoredCopy {
  const PreprocessedTree* pt = nullptr;
  std::vector<bool> placed;        // placed[i]: label i+1 is in the copy
  std::vector<int> phi;            // tree vertex -> host vertex, -1 if absent
  std::vector<int> host_edge_of;   // label i+1 -> host edge index, -1 if absent
  std::vector<bool> image;         // host vertex -> lies in the image of phi

  int placed_count() const {
    int k = 0;
    for (bool b : placed) k += b;
    return k;
  }
  std::vector<int> placed_labels() const {
    std::vector<int> out;
    for (size_t i = 0; i < placed.size(); ++i)
      if (placed[i]) out.push_back(static_cast<int>(i) + 1);
    return out;
  }
};

/// Copy consisting of label 1 alone, mapping the root edge's vertices onto
/// seed_edge's vertices in sorted order. Requires seed_edge monochromatic in
/// color 1 under c.
ColoredCopy seed_copy(const PreprocessedTree& pt, const Hypergraph& h,
                      const Coloring& c, int seed_edge);

/// Smallest unplaced label i whose attachment vertex is placed and for which
/// some host edge (smallest index first) contains phi(attachment), meets the
/// image only there, and carries color i on its other r-1 vertices. Returns
/// (label, host edge index), or nullopt when the copy is maximal.
std::optional<std::pair<int, int>> find_extension(const Hypergraph& h,
                                                  const Coloring& c,
                                                  const ColoredCopy& copy);

/// Adds one extension found by find_extension, mapping the label's fresh tree
/// vertices onto the host edge's fresh vertices in sorted order.
void apply_extension(ColoredCopy& copy, const Hypergraph& h, int label,
                     int host_edge);

/// Grows seed_copy by find_extension until maximal; if all labels get placed
/// the host contains the tree and the full embedding is returned instead.
std::variant<ColoredCopy, Embedding> maximal_colored_copy(
    const Hypergraph& h, const Coloring& c, const PreprocessedTree& pt,
    int seed_edge);

/// Full invariant check for tests.
bool valid_colored_copy(const Hypergraph& h, const Coloring& c,
                        const ColoredCopy& copy);

struct RecolorStep {
  int s;            // label of the blocking tree edge
  int tree_vertex;  // its attachment vertex
  int host_vertex;  // phi(tree_vertex)
  int old_color;
  int new_color;    // always s
};

/// Either a proper coloring of the host or an injective copy of the tree.
struct Certificate {
  std::variant<Coloring, Embedding> value;

  bool is_coloring() const { return std::holds_alternative<Coloring>(value); }
  const Coloring& coloring() const { return std::get<Coloring>(value); }
  const Embedding& embedding() const { return std::get<Embedding>(value); }
};

struct EdgeInserted {
  int host_edge;
};
struct CopyRebuilt {
  std::vector<int> placed_labels;
};
struct Recolored {
  RecolorStep step;
};
struct Terminated {
  enum class Reason { Proper, CopyFound };
  Reason reason;
};
using TraceEvent = std::variant<EdgeInserted, CopyRebuilt, Recolored, Terminated>;
using Trace = std::vector<TraceEvent>;

/// The recoloring loop. Requires c proper on h minus bad_edge, bad_edge
/// monochromatic, and c.palette equal to the tree's edge count. First swaps
/// the palette so bad_edge carries color 1, then alternates rebuilding a
/// maximal colored copy seeded at bad_edge with recoloring the blocking
/// attachment image to the smallest blocking label, stopping when the copy is
/// full (embedding) or the recolored vertex lies in bad_edge (proper coloring,
/// returned with the palette swap undone; c then equals that coloring).
///
/// Structural checks stay on in every build: each recolor strictly increases
/// the vertex's color, never creates a monochromatic edge other than
/// bad_edge, and at most n(t-1) recolors happen; a violation throws
/// std::logic_error.
Certificate repair(const Hypergraph& h, Coloring& c, int bad_edge,
                   const PreprocessedTree& pt, Trace* trace = nullptr);

/// Inserts host edges one at a time onto an all-1-colored edgeless host,
/// repairing after each insertion that goes monochromatic. Returns the first
/// tree copy found, or a proper t-coloring of all of h. A host that contains
/// no copy of the tree always ends in a coloring; a host with chromatic
/// number above t always ends in a copy.
Certificate color_or_embed(const Hypergraph& h, const RTree& tr, int t,
                           int root_choice, Trace* trace = nullptr);

/// Overload picking the default root: the canonically smallest tree edge.
Certificate color_or_embed(const Hypergraph& h, const RTree& tr, int t);

/// Index of the canonically smallest tree edge.
int default_root_choice(const RTree& tr);

/// Independent certificate checker built on hypergraph-core primitives only:
/// a coloring must be in range, have palette at most t, and be proper; an
/// embedding must satisfy the full embedding contract against the tree.
bool validate_certificate(const Hypergraph& h, const RTree& tr, int t,
                          const Certificate& cert);

}  // namespace treecolor
