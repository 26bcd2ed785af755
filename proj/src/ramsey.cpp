#include "treecolor/ramsey.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "treecolor/constructions.hpp"
#include "treecolor/oracles.hpp"

namespace treecolor {
namespace ramsey {

namespace {

/// Index of a sorted r-set in the canonical edge list of a complete r-graph.
int host_edge_index(const Hypergraph& host, const Edge& e) {
  auto it = std::lower_bound(host.edges().begin(), host.edges().end(), e);
  if (it == host.edges().end() || *it != e)
    throw std::logic_error("edge not present in the complete host");
  return static_cast<int>(it - host.edges().begin());
}

void check_inputs(const Hypergraph& host, const std::vector<bool>& red, int k,
                  const RTree& tr, int t) {
  if (host.uniformity() != tr.tree.uniformity())
    throw std::invalid_argument("host and tree uniformity differ");
  if (tr.t != t)
    throw std::invalid_argument("palette size must equal the tree edge count");
  if (k < host.uniformity())
    throw std::invalid_argument("clique size below the uniformity");
  if (host.vertex_count() < (k - 1) * t + 1)
    throw std::invalid_argument("need at least (k-1)t + 1 vertices");
  if (static_cast<int>(red.size()) != host.edge_count())
    throw std::invalid_argument("mask length must equal the edge count");
}

RamseyWitness analyze_impl(const Hypergraph& host, const std::vector<bool>& red,
                           int k, const RTree& tr, int t) {
  const int n = host.vertex_count();
  std::vector<Edge> blue_edges;
  std::vector<int> blue_to_host;
  for (int i = 0; i < host.edge_count(); ++i)
    if (!red[i]) {
      blue_edges.push_back(host.edge(i));
      blue_to_host.push_back(i);
    }
  Hypergraph blue(n, host.uniformity(), std::move(blue_edges));

  Certificate cert = color_or_embed(blue, tr, t);
  if (!cert.is_coloring()) {
    Embedding emb = cert.embedding();
    for (int& he : emb.edge_map) he = blue_to_host[he];
    return RamseyWitness{BlueTree{std::move(emb)}};
  }

  const Coloring& col = cert.coloring();
  std::vector<int> class_size(t + 1, 0);
  for (int q : col.colors) ++class_size[q];
  int best = 1;
  for (int q = 2; q <= t; ++q)
    if (class_size[q] > class_size[best]) best = q;
  std::vector<int> verts;
  for (int v = 0; v < n && static_cast<int>(verts.size()) < k; ++v)
    if (col.colors[v] == best) verts.push_back(v);
  if (static_cast<int>(verts.size()) < k)
    throw std::logic_error("largest color class is below the pigeonhole bound");

  // A color class of a proper coloring of blue spans no blue edge, so every
  // r-subset of it must be red in the complete host.
  Edge combo(host.uniformity());
  const int r = host.uniformity();
  auto sweep = [&](auto&& self, int pos, int from) -> void {
    if (pos == r) {
      if (!red[host_edge_index(host, combo)])
        throw std::logic_error("blue edge inside a blue color class");
      return;
    }
    for (int i = from; i <= k - (r - pos); ++i) {
      combo[pos] = verts[i];
      self(self, pos + 1, i + 1);
    }
  };
  sweep(sweep, 0, 0);
  return RamseyWitness{RedClique{std::move(verts)}};
}

}  // namespace

RamseyWitness analyze_coloring(const TwoColoring& tc, int k, const RTree& tr,
                               int t) {
  check_inputs(tc.host, tc.red, k, tr, t);
  return analyze_impl(tc.host, tc.red, k, tr, t);
}

namespace {

bool validate_impl(const Hypergraph& host, const std::vector<bool>& red, int k,
                   const RTree& tr, const RamseyWitness& w) {
  const int r = host.uniformity();
  if (w.is_red_clique()) {
    const std::vector<int>& verts = w.red_clique().vertices;
    if (static_cast<int>(verts.size()) != k) return false;
    for (int v : verts)
      if (v < 0 || v >= host.vertex_count()) return false;
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return false;
    Edge combo(r);
    bool all_red = true;
    auto sweep = [&](auto&& self, int pos, int from) -> void {
      if (!all_red) return;
      if (pos == r) {
        auto it = std::lower_bound(host.edges().begin(), host.edges().end(),
                                   combo);
        if (it == host.edges().end() || *it != combo ||
            !red[it - host.edges().begin()])
          all_red = false;
        return;
      }
      for (int i = from; i <= k - (r - pos); ++i) {
        combo[pos] = sorted[i];
        self(self, pos + 1, i + 1);
      }
    };
    sweep(sweep, 0, 0);
    return all_red;
  }
  const Embedding& emb = w.blue_tree().emb;
  if (!valid_embedding(tr.tree, host, emb)) return false;
  for (int he : emb.edge_map)
    if (red[he]) return false;
  return true;
}

}  // namespace

bool validate_witness(const TwoColoring& tc, int k, const RTree& tr,
                      const RamseyWitness& w) {
  return validate_impl(tc.host, tc.red, k, tr, w);
}

UpperReport verify_upper(int r, int k, int t, const RTree& tr,
                         int max_mask_bits) {
  if (max_mask_bits > kMaxMaskBits)
    throw std::invalid_argument("mask cap above " +
                                std::to_string(kMaxMaskBits) + " bits");
  if (k < r) throw std::invalid_argument("clique size below the uniformity");
  const int n = (k - 1) * t + 1;
  const Hypergraph host = complete_r_graph(n, r);
  const int m = host.edge_count();
  if (m > max_mask_bits)
    throw oracles::BudgetExceeded(
        "enumerating 2^" + std::to_string(m) +
        " colorings exceeds the cap of 2^" + std::to_string(max_mask_bits));

  UpperReport report;
  report.r = r;
  report.k = k;
  report.t = t;
  report.n = n;
  std::vector<bool> red(m);
  const std::uint32_t masks = static_cast<std::uint32_t>(1) << m;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    for (int i = 0; i < m; ++i) red[i] = (mask >> i) & 1;
    RamseyWitness w = analyze_impl(host, red, k, tr, t);
    if (!validate_impl(host, red, k, tr, w)) {
      report.failures.push_back(mask);
    } else if (w.is_red_clique()) {
      ++report.red_cliques;
    } else {
      ++report.blue_trees;
    }
    ++report.total;
  }
  return report;
}

LowerReport verify_lower(int r, int k, int t) {
  const Hypergraph blue = ramsey_lower(r, k, t);
  LowerReport report;
  report.r = r;
  report.k = k;
  report.t = t;
  report.n = blue.vertex_count();
  report.upper_bound_n = (k - 1) * t + 1;
  report.divisible = (k - 1) % (r - 1) == 0;
  report.tight = report.divisible && report.n == (k - 1) * t;

  oracles::OracleBudget budget;
  report.blue_independence = oracles::independence_number(blue, budget).size;
  report.independence_ok = report.blue_independence <= k - 1;

  report.blue_tree_free = true;
  for (const RTree& tree : all_trees(r, t)) {
    ++report.trees_checked;
    if (oracles::brute_contains_tree(blue, tree, budget))
      report.blue_tree_free = false;
  }
  return report;
}

}  // namespace ramsey
}  // namespace treecolor
