#include "treecolor/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace treecolor {

namespace {

void check_edge(const Edge& e, int n, int r) {
  if (static_cast<int>(e.size()) != r)
    throw std::invalid_argument("edge has " + std::to_string(e.size()) +
                                " vertices, expected " + std::to_string(r));
  for (size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] == e[i + 1])
      throw std::invalid_argument("edge has a repeated vertex " +
                                  std::to_string(e[i]));
  for (int v : e)
    if (v < 0 || v >= n)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range 0.." + std::to_string(n - 1));
}

}  // namespace

Hypergraph::Hypergraph(int n, int r, std::vector<Edge> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (r < 1) throw std::invalid_argument("uniformity must be at least 1");
  for (Edge& e : edges_) {
    std::sort(e.begin(), e.end());
    check_edge(e, n_, r_);
  }
  // Duplicate detection on a sorted copy; the stored list keeps input order.
  if (!std::is_sorted(edges_.begin(), edges_.end()) ||
      std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate edge");
  }
}

void Hypergraph::add_edge(Edge e) {
  std::sort(e.begin(), e.end());
  check_edge(e, n_, r_);
  if (std::find(edges_.begin(), edges_.end(), e) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  edges_.push_back(std::move(e));
}

bool coloring_in_range(const Coloring& c) {
  for (int q : c.colors)
    if (q < 1 || q > c.palette) return false;
  return true;
}

static void check_length(const Hypergraph& h, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != h.vertex_count())
    throw std::invalid_argument("coloring length " +
                                std::to_string(c.colors.size()) +
                                " does not match vertex count " +
                                std::to_string(h.vertex_count()));
}

bool is_proper(const Hypergraph& h, const Coloring& c) {
  check_length(h, c);
  for (const Edge& e : h.edges()) {
    int q = c.colors[e[0]];
    bool mono = true;
    for (size_t i = 1; i < e.size(); ++i)
      if (c.colors[e[i]] != q) {
        mono = false;
        break;
      }
    if (mono) return false;
  }
  return true;
}

std::vector<int> monochromatic_edges(const Hypergraph& h, const Coloring& c) {
  check_length(h, c);
  std::vector<int> out;
  for (int i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edge(i);
    int q = c.colors[e[0]];
    bool mono = true;
    for (size_t j = 1; j < e.size(); ++j)
      if (c.colors[e[j]] != q) {
        mono = false;
        break;
      }
    if (mono) out.push_back(i);
  }
  return out;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> connected_components(const Hypergraph& h) {
  Dsu dsu(h.vertex_count());
  for (const Edge& e : h.edges())
    for (size_t i = 1; i < e.size(); ++i) dsu.unite(e[0], e[i]);
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(h.vertex_count(), -1);
  for (int v = 0; v < h.vertex_count(); ++v) {
    int root = dsu.find(v);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(v);
  }
  return blocks;
}

int min_degree(const Hypergraph& h) {
  if (h.vertex_count() == 0) return 0;
  std::vector<int> deg(h.vertex_count(), 0);
  for (const Edge& e : h.edges())
    for (int v : e) ++deg[v];
  return *std::min_element(deg.begin(), deg.end());
}

bool valid_embedding(const Hypergraph& pattern, const Hypergraph& host,
                     const Embedding& emb) {
  const int np = pattern.vertex_count();
  if (static_cast<int>(emb.vertex_map.size()) != np) return false;
  if (static_cast<int>(emb.edge_map.size()) != pattern.edge_count())
    return false;
  std::vector<bool> used(host.vertex_count(), false);
  for (int img : emb.vertex_map) {
    if (img < 0 || img >= host.vertex_count()) return false;
    if (used[img]) return false;  // injectivity
    used[img] = true;
  }
  for (int j = 0; j < pattern.edge_count(); ++j) {
    int he = emb.edge_map[j];
    if (he < 0 || he >= host.edge_count()) return false;
    Edge image;
    for (int v : pattern.edge(j)) image.push_back(emb.vertex_map[v]);
    std::sort(image.begin(), image.end());
    if (image != host.edge(he)) return false;
  }
  return true;
}

}  // namespace treecolor
