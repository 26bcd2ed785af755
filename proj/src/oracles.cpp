#include "treecolor/oracles.hpp"

#include <algorithm>
#include <string>

namespace treecolor {
namespace oracles {

namespace {

void check_size(const Hypergraph& h, const OracleBudget& budget) {
  if (h.vertex_count() > budget.max_vertices)
    throw BudgetExceeded("instance has " + std::to_string(h.vertex_count()) +
                         " vertices, oracle budget allows " +
                         std::to_string(budget.max_vertices));
}

struct NodeCounter {
  long long nodes = 0;
  long long limit;
  explicit NodeCounter(long long lim) : limit(lim) {}
  void tick() {
    if (++nodes > limit)
      throw BudgetExceeded("oracle search exceeded " + std::to_string(limit) +
                           " nodes");
  }
};

}  // namespace

std::optional<Coloring> is_k_colorable(const Hypergraph& h, int k,
                                       const OracleBudget& budget) {
  check_size(h, budget);
  if (k < 1) return std::nullopt;
  const int n = h.vertex_count();
  // An edge can only become monochromatic once its largest vertex is colored.
  std::vector<std::vector<int>> closing(n);
  for (int i = 0; i < h.edge_count(); ++i)
    closing[h.edge(i).back()].push_back(i);

  std::vector<int> colors(n, 0);
  NodeCounter counter(budget.max_assignments);
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == n) return true;
    counter.tick();
    const int limit = std::min(k, used + 1);
    for (int q = 1; q <= limit; ++q) {
      colors[v] = q;
      bool ok = true;
      for (int ei : closing[v]) {
        const Edge& e = h.edge(ei);
        bool mono = true;
        for (int w : e)
          if (colors[w] != q) {
            mono = false;
            break;
          }
        if (mono) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, v + 1, std::max(used, q))) return true;
    }
    colors[v] = 0;
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  return Coloring{colors, k};
}

int chromatic_number(const Hypergraph& h, const OracleBudget& budget) {
  for (int k = 1;; ++k)
    if (is_k_colorable(h, k, budget)) return k;
}

std::optional<Embedding> brute_contains_tree(const Hypergraph& h,
                                             const RTree& tr,
                                             const OracleBudget& budget) {
  if (h.uniformity() != tr.tree.uniformity())
    throw std::invalid_argument("uniformity mismatch between host and tree");
  check_size(h, budget);
  const Hypergraph& tree = tr.tree;
  const int t = tr.t;

  // Breadth-first order over the tree's edges from edge 0, ties by index.
  std::vector<int> order;
  {
    std::vector<std::vector<int>> incident(tree.vertex_count());
    for (int i = 0; i < t; ++i)
      for (int v : tree.edge(i)) incident[v].push_back(i);
    std::vector<bool> seen(t, false);
    std::vector<int> layer{0};
    seen[0] = true;
    while (!layer.empty()) {
      std::vector<int> next;
      for (int ei : layer) {
        order.push_back(ei);
        for (int v : tree.edge(ei))
          for (int other : incident[v])
            if (!seen[other]) {
              seen[other] = true;
              next.push_back(other);
            }
      }
      std::sort(next.begin(), next.end());
      layer = std::move(next);
    }
  }

  std::vector<int> phi(tree.vertex_count(), -1);
  std::vector<int> edge_map(t, -1);
  std::vector<bool> used(h.vertex_count(), false);
  NodeCounter counter(budget.max_assignments);

  auto rec = [&](auto&& self, int step) -> bool {
    if (step == t) return true;
    const Edge& te = tree.edge(order[step]);
    std::vector<int> mapped, fresh;
    for (int v : te) (phi[v] >= 0 ? mapped : fresh).push_back(v);
    for (int he = 0; he < h.edge_count(); ++he) {
      counter.tick();
      const Edge& host_edge = h.edge(he);
      bool images_inside = true;
      for (int v : mapped)
        if (!std::binary_search(host_edge.begin(), host_edge.end(), phi[v])) {
          images_inside = false;
          break;
        }
      if (!images_inside) continue;
      std::vector<int> targets;
      for (int w : host_edge) {
        bool is_image = false;
        for (int v : mapped)
          if (phi[v] == w) {
            is_image = true;
            break;
          }
        if (!is_image) targets.push_back(w);
      }
      bool clash = false;
      for (int w : targets)
        if (used[w]) {
          clash = true;
          break;
        }
      if (clash || targets.size() != fresh.size()) continue;
      // Try every assignment of the fresh tree vertices onto the remaining
      // host vertices of this edge (r-1 of them at most, so this is tiny).
      std::sort(targets.begin(), targets.end());
      do {
        for (size_t i = 0; i < fresh.size(); ++i) {
          phi[fresh[i]] = targets[i];
          used[targets[i]] = true;
        }
        edge_map[order[step]] = he;
        if (self(self, step + 1)) return true;
        edge_map[order[step]] = -1;
        for (size_t i = 0; i < fresh.size(); ++i) {
          used[targets[i]] = false;
          phi[fresh[i]] = -1;
        }
      } while (std::next_permutation(targets.begin(), targets.end()));
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return Embedding{phi, edge_map};
}

std::optional<BergeCycle> berge_cycle_exists(const Hypergraph& h,
                                             const OracleBudget& budget) {
  check_size(h, budget);
  const int n = h.vertex_count();
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < h.edge_count(); ++i)
    for (int v : h.edge(i)) incident[v].push_back(i);

  std::vector<int> seq_v, seq_e;
  std::vector<bool> used_v(n, false), used_e(h.edge_count(), false);
  NodeCounter counter(budget.max_assignments);
  std::optional<BergeCycle> found;

  // The start vertex is normalized to the cycle's smallest vertex.
  auto rec = [&](auto&& self, int start, int cur) -> bool {
    counter.tick();
    for (int ei : incident[cur]) {
      if (used_e[ei]) continue;
      const Edge& e = h.edge(ei);
      if (seq_v.size() >= 2 &&
          std::binary_search(e.begin(), e.end(), start)) {
        seq_e.push_back(ei);
        found = BergeCycle{seq_v, seq_e};
        return true;
      }
      used_e[ei] = true;
      seq_e.push_back(ei);
      for (int w : e) {
        if (w == cur || w <= start || used_v[w]) continue;
        used_v[w] = true;
        seq_v.push_back(w);
        if (self(self, start, w)) return true;
        seq_v.pop_back();
        used_v[w] = false;
      }
      seq_e.pop_back();
      used_e[ei] = false;
    }
    return false;
  };

  for (int v = 0; v < n; ++v) {
    seq_v.assign(1, v);
    seq_e.clear();
    std::fill(used_v.begin(), used_v.end(), false);
    std::fill(used_e.begin(), used_e.end(), false);
    used_v[v] = true;
    if (rec(rec, v, v)) return found;
  }
  return std::nullopt;
}

bool valid_berge_cycle(const Hypergraph& h, const BergeCycle& cycle) {
  const size_t k = cycle.vertices.size();
  if (k < 2 || cycle.edges.size() != k) return false;
  std::vector<int> vs = cycle.vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  std::vector<int> es = cycle.edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (size_t i = 0; i < k; ++i) {
    int ei = cycle.edges[i];
    if (ei < 0 || ei >= h.edge_count()) return false;
    const Edge& e = h.edge(ei);
    int a = cycle.vertices[i];
    int b = cycle.vertices[(i + 1) % k];
    if (!std::binary_search(e.begin(), e.end(), a) ||
        !std::binary_search(e.begin(), e.end(), b))
      return false;
  }
  return true;
}

IndependentSet independence_number(const Hypergraph& h,
                                   const OracleBudget& budget) {
  check_size(h, budget);
  const int n = h.vertex_count();
  const int r = h.uniformity();
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < h.edge_count(); ++i)
    for (int v : h.edge(i)) incident[v].push_back(i);

  std::vector<int> in_set_count(h.edge_count(), 0);
  std::vector<int> current, best;
  NodeCounter counter(budget.max_assignments);
  auto rec = [&](auto&& self, int v) -> void {
    counter.tick();
    if (current.size() + static_cast<size_t>(n - v) <= best.size()) return;
    if (v == n) {
      best = current;
      return;
    }
    bool can_take = true;
    for (int ei : incident[v])
      if (in_set_count[ei] == r - 1) {
        can_take = false;
        break;
      }
    if (can_take) {
      for (int ei : incident[v]) ++in_set_count[ei];
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
      for (int ei : incident[v]) --in_set_count[ei];
    }
    self(self, v + 1);
  };
  rec(rec, 0);
  return IndependentSet{static_cast<int>(best.size()), best};
}

}  // namespace oracles
}  // namespace treecolor
