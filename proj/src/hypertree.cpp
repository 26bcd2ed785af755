#include "treecolor/hypertree.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace treecolor {

const char* to_string(TreeDefect d) {
  switch (d) {
    case TreeDefect::NotConnected: return "not-connected";
    case TreeDefect::NotLinear: return "not-linear";
    case TreeDefect::HasBergeCycle: return "has-berge-cycle";
    case TreeDefect::WrongVertexCount: return "wrong-vertex-count";
  }
  return "unknown";
}

std::variant<RTree, TreeDefect> recognize_rtree(const Hypergraph& h) {
  if (h.edge_count() == 0)
    throw std::invalid_argument("cannot recognize a tree without edges");
  if (connected_components(h).size() != 1) return TreeDefect::NotConnected;
  const int m = h.edge_count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Edge& a = h.edge(i);
      const Edge& b = h.edge(j);
      int shared = 0;
      for (size_t p = 0, q = 0; p < a.size() && q < b.size();) {
        if (a[p] < b[q]) ++p;
        else if (a[p] > b[q]) ++q;
        else { ++shared; ++p; ++q; }
      }
      if (shared > 1) return TreeDefect::NotLinear;
    }
  const int expected = 1 + (h.uniformity() - 1) * m;
  if (h.vertex_count() < expected) return TreeDefect::HasBergeCycle;
  if (h.vertex_count() > expected) return TreeDefect::WrongVertexCount;
  return RTree{h, m};
}

PreprocessedTree preprocess(const RTree& tr, int root_choice) {
  const Hypergraph& h = tr.tree;
  const int t = tr.t;
  if (t != h.edge_count())
    throw std::invalid_argument("tree edge count does not match its hypergraph");
  if (root_choice < 0 || root_choice >= t)
    throw std::invalid_argument("root edge index out of range");

  std::vector<std::vector<int>> incident(h.vertex_count());
  for (int i = 0; i < t; ++i)
    for (int v : h.edge(i)) incident[v].push_back(i);

  PreprocessedTree pt;
  pt.rtree = tr;
  pt.root_edge = root_choice;
  pt.label_of_edge.assign(t, 0);
  pt.vertex_color.assign(h.vertex_count(), 0);
  pt.attachment.assign(t, -1);

  std::vector<bool> visited(t, false);
  std::vector<bool> placed_vertex(h.vertex_count(), false);
  std::vector<int> layer{root_choice};
  visited[root_choice] = true;
  while (!layer.empty()) {
    std::vector<int> next;
    for (int ei : layer) {
      const int label = static_cast<int>(pt.edge_order.size()) + 1;
      pt.edge_order.push_back(ei);
      pt.label_of_edge[ei] = label;
      int shared = -1;
      int shared_count = 0;
      for (int v : h.edge(ei)) {
        if (placed_vertex[v]) {
          shared = v;
          ++shared_count;
        } else {
          placed_vertex[v] = true;
          pt.vertex_color[v] = label;
        }
      }
      if (label == 1) {
        if (shared_count != 0)
          throw std::logic_error("root edge overlaps nothing yet");
      } else if (shared_count != 1) {
        throw std::logic_error("tree edge must meet the placed part in one vertex");
      } else {
        pt.attachment[label - 1] = shared;
      }
      for (int v : h.edge(ei))
        for (int other : incident[v])
          if (!visited[other]) {
            visited[other] = true;
            next.push_back(other);
          }
    }
    std::sort(next.begin(), next.end(),
              [&h](int a, int b) { return h.edge(a) < h.edge(b); });
    layer = std::move(next);
  }
  if (static_cast<int>(pt.edge_order.size()) != t)
    throw std::logic_error("breadth-first traversal missed edges");
  return pt;
}

RTree tree_path(int r, int t) {
  if (r < 2 || t < 1) throw std::invalid_argument("need r >= 2 and t >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < t; ++i) {
    Edge e;
    for (int v = i * (r - 1); v <= i * (r - 1) + r - 1; ++v) e.push_back(v);
    edges.push_back(std::move(e));
  }
  return RTree{Hypergraph(1 + (r - 1) * t, r, std::move(edges)), t};
}

RTree tree_star(int r, int t) {
  if (r < 2 || t < 1) throw std::invalid_argument("need r >= 2 and t >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < t; ++i) {
    Edge e{0};
    for (int j = 0; j < r - 1; ++j) e.push_back(1 + i * (r - 1) + j);
    edges.push_back(std::move(e));
  }
  return RTree{Hypergraph(1 + (r - 1) * t, r, std::move(edges)), t};
}

RTree random_tree(int r, int t, std::uint64_t seed) {
  if (r < 2 || t < 1) throw std::invalid_argument("need r >= 2 and t >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  Edge first;
  for (int v = 0; v < r; ++v) first.push_back(v);
  edges.push_back(std::move(first));
  int n = r;
  for (int i = 1; i < t; ++i) {
    // Plain modulo keeps the draw identical across standard libraries.
    int attach = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    Edge e{attach};
    for (int j = 0; j < r - 1; ++j) e.push_back(n + j);
    n += r - 1;
    edges.push_back(std::move(e));
  }
  return RTree{Hypergraph(n, r, std::move(edges)), t};
}

std::string canonical_tree_code(const RTree& tr) {
  const Hypergraph& h = tr.tree;
  const int n = h.vertex_count();
  const int t = tr.t;
  // Incidence tree: nodes 0..n-1 are vertices, n..n+t-1 are edges. For an
  // r-tree this graph is a tree, so an AHU code rooted at each edge node is a
  // complete isomorphism invariant; node types follow from depth parity.
  std::vector<std::vector<int>> adj(n + t);
  for (int i = 0; i < t; ++i)
    for (int v : h.edge(i)) {
      adj[n + i].push_back(v);
      adj[v].push_back(n + i);
    }
  auto code = [&](auto&& self, int node, int parent) -> std::string {
    std::vector<std::string> kids;
    for (int nb : adj[node])
      if (nb != parent) kids.push_back(self(self, nb, node));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const std::string& k : kids) out += k;
    out += ")";
    return out;
  };
  std::string best;
  for (int i = 0; i < t; ++i) {
    std::string c = code(code, n + i, -1);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

std::vector<RTree> all_trees(int r, int t) {
  if (r < 2 || t < 1) throw std::invalid_argument("need r >= 2 and t >= 1");
  if (t > 4) throw std::invalid_argument("tree enumeration is bounded at t <= 4");
  std::vector<RTree> out;
  std::set<std::string> seen;
  std::vector<Edge> edges;
  Edge first;
  for (int v = 0; v < r; ++v) first.push_back(v);
  edges.push_back(std::move(first));
  auto rec = [&](auto&& self, int placed, int n) -> void {
    if (placed == t) {
      RTree cand{Hypergraph(n, r, edges), t};
      if (seen.insert(canonical_tree_code(cand)).second)
        out.push_back(std::move(cand));
      return;
    }
    for (int attach = 0; attach < n; ++attach) {
      Edge e{attach};
      for (int j = 0; j < r - 1; ++j) e.push_back(n + j);
      edges.push_back(std::move(e));
      self(self, placed + 1, n + r - 1);
      edges.pop_back();
    }
  };
  rec(rec, 1, r);
  return out;
}

}  // namespace treecolor
