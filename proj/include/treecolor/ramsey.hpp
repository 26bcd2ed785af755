#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "treecolor/embedder.hpp"
#include "treecolor/hypergraph.hpp"
#include "treecolor/hypertree.hpp"

namespace treecolor {
namespace ramsey {

/// Red/blue edge coloring of a complete r-graph in canonical edge order:
/// red[i] set means host edge i is red, clear means blue.
struct TwoColoring {
  Hypergraph host;
  std::vector<bool> red;
};

struct RedClique {
  std::vector<int> vertices;  // k vertices whose r-subsets are all red
};

struct BlueTree {
  Embedding emb;  // edge_map holds host edge indices, all blue
};

struct RamseyWitness {
  std::variant<RedClique, BlueTree> value;

  bool is_red_clique() const {
    return std::holds_alternative<RedClique>(value);
  }
  const RedClique& red_clique() const { return std::get<RedClique>(value); }
  const BlueTree& blue_tree() const { return std::get<BlueTree>(value); }
};

/// Finds a red K_k^(r) or a blue copy of the tree on a complete r-graph with
/// at least (k-1)t + 1 vertices. Runs color_or_embed on the blue hypergraph:
/// a tree copy is a blue tree; a proper t-coloring has a color class of size
/// at least k, which is blue-independent, so its k smallest vertices span a
/// red clique. Class ties break toward the smallest color index.
RamseyWitness analyze_coloring(const TwoColoring& tc, int k, const RTree& tr,
                               int t);

/// Independent witness check against the host and mask only.
bool validate_witness(const TwoColoring& tc, int k, const RTree& tr,
                      const RamseyWitness& w);

struct UpperReport {
  int r = 0, k = 0, t = 0, n = 0;
  long long total = 0;
  long long red_cliques = 0;
  long long blue_trees = 0;
  std::vector<std::uint32_t> failures;  // masks without a valid witness
};

inline constexpr int kDefaultMaskBits = 16;
inline constexpr int kMaxMaskBits = 21;

/// Exhausts all 2^C(n,r) red/blue colorings of the complete r-graph on
/// n = (k-1)t + 1 vertices and analyzes each one. Refuses hosts with more
/// than max_mask_bits edges (hard cap kMaxMaskBits).
UpperReport verify_upper(int r, int k, int t, const RTree& tr,
                         int max_mask_bits = kDefaultMaskBits);

struct LowerReport {
  int r = 0, k = 0, t = 0;
  int n = 0;                   // construction size
  int blue_independence = 0;
  bool independence_ok = false;  // blue independence <= k-1, so no red clique
  int trees_checked = 0;
  bool blue_tree_free = false;
  bool divisible = false;  // r-1 divides k-1
  bool tight = false;      // divisible and n == (k-1)t, one below the bound
  int upper_bound_n = 0;   // (k-1)t + 1
};

/// Checks the blue-blocks construction: blue edges form disjoint complete
/// r-graphs on (r-1)t vertices, everything else is red. Verifies by oracle
/// that blue independence is at most k-1 and that no enumerated t-edge tree
/// embeds in blue.
LowerReport verify_lower(int r, int k, int t);

}  // namespace ramsey
}  // namespace treecolor
