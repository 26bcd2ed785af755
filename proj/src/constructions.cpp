#include "treecolor/constructions.hpp"

#include <stdexcept>

namespace treecolor {

Hypergraph complete_r_graph(int n, int r) {
  if (r < 2) throw std::invalid_argument("need r >= 2");
  if (r > n) throw std::invalid_argument("need n >= r");
  std::vector<Edge> edges;
  Edge combo(r);
  for (int i = 0; i < r; ++i) combo[i] = i;
  while (true) {
    edges.push_back(combo);
    int i = r - 1;
    while (i >= 0 && combo[i] == n - r + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph tight_gadget(int r, int t) {
  if (r < 2 || t < 1) throw std::invalid_argument("need r >= 2 and t >= 1");
  const int n = (r - 1) * t;
  if (n < r) return Hypergraph::edgeless(n, r);
  return complete_r_graph(n, r);
}

Hypergraph star_example(int n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back(Edge{0, i, j});
  return Hypergraph(n, 3, std::move(edges));
}

Hypergraph ramsey_lower(int r, int k, int t) {
  if (r < 2 || k < 2 || t < 1)
    throw std::invalid_argument("need r >= 2, k >= 2, t >= 1");
  const int blocks = (k - 1) / (r - 1);
  if (blocks < 1)
    throw std::invalid_argument("need k - 1 >= r - 1 for at least one block");
  const int block_size = (r - 1) * t;
  const Hypergraph block = tight_gadget(r, t);
  std::vector<Edge> edges;
  for (int b = 0; b < blocks; ++b)
    for (const Edge& e : block.edges()) {
      Edge shifted;
      for (int v : e) shifted.push_back(v + b * block_size);
      edges.push_back(std::move(shifted));
    }
  return Hypergraph(blocks * block_size, r, std::move(edges));
}

Hypergraph build_family(const NamedFamily& f) {
  switch (f.tag) {
    case NamedFamily::Tag::Complete: return complete_r_graph(f.n, f.r);
    case NamedFamily::Tag::TightGadget: return tight_gadget(f.r, f.t);
    case NamedFamily::Tag::StarExample: return star_example(f.n);
    case NamedFamily::Tag::RamseyLower: return ramsey_lower(f.r, f.k, f.t);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace treecolor
