#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "treecolor/hypergraph.hpp"
#include "treecolor/hypertree.hpp"

namespace treecolor {
namespace oracles {

/// Explicit enumeration limits; oracle calls refuse oversized inputs instead
/// of running unbounded, so CI behavior does not depend on wall clocks.
struct OracleBudget {
  int max_vertices = 12;
  long long max_assignments = 50'000'000;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Backtracking search for a proper k-coloring with first-use symmetry
/// breaking: vertex i may use at most one color beyond those used on 0..i-1.
/// Returns a witness coloring, or nullopt if none exists.
std::optional<Coloring> is_k_colorable(const Hypergraph& h, int k,
                                       const OracleBudget& budget = {});

/// Least k >= 1 admitting a proper k-coloring (1 for edgeless hypergraphs).
int chromatic_number(const Hypergraph& h, const OracleBudget& budget = {});

/// Backtracking over the tree's edges in breadth-first order, mapping each to
/// a compatible host edge with an injective vertex map. Shares no code with
/// the embedder module.
std::optional<Embedding> brute_contains_tree(const Hypergraph& h,
                                             const RTree& tr,
                                             const OracleBudget& budget = {});

/// Alternating sequence of k >= 2 distinct vertices and k distinct edges,
/// each edge containing its two cyclically neighboring vertices.
struct BergeCycle {
  std::vector<int> vertices;
  std::vector<int> edges;
};

std::optional<BergeCycle> berge_cycle_exists(const Hypergraph& h,
                                             const OracleBudget& budget = {});

/// True iff the witness satisfies the cycle definition against h.
bool valid_berge_cycle(const Hypergraph& h, const BergeCycle& cycle);

struct IndependentSet {
  int size = 0;
  std::vector<int> vertices;
};

/// Maximum size of a vertex set containing no edge of h entirely.
IndependentSet independence_number(const Hypergraph& h,
                                   const OracleBudget& budget = {});

}  // namespace oracles
}  // namespace treecolor
