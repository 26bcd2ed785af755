#include "treecolor/embedder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace treecolor {

namespace {

bool edge_contains(const Edge& e, int v) {
  return std::binary_search(e.begin(), e.end(), v);
}

}  // namespace

ColoredCopy seed_copy(const PreprocessedTree& pt, const Hypergraph& h,
                      const Coloring& c, int seed_edge) {
  if (seed_edge < 0 || seed_edge >= h.edge_count())
    throw std::invalid_argument("seed edge index out of range");
  if (static_cast<int>(c.colors.size()) != h.vertex_count())
    throw std::invalid_argument("coloring length does not match the host");
  const Edge& seed = h.edge(seed_edge);
  for (int v : seed)
    if (c.colors[v] != 1)
      throw std::invalid_argument("seed edge must be monochromatic in color 1");
  ColoredCopy copy;
  copy.pt = &pt;
  copy.placed.assign(pt.t(), false);
  copy.placed[0] = true;
  copy.phi.assign(pt.rtree.tree.vertex_count(), -1);
  copy.host_edge_of.assign(pt.t(), -1);
  copy.host_edge_of[0] = seed_edge;
  copy.image.assign(h.vertex_count(), false);
  const Edge& root = pt.label_edge(1);
  for (size_t i = 0; i < root.size(); ++i) {
    copy.phi[root[i]] = seed[i];
    copy.image[seed[i]] = true;
  }
  return copy;
}

std::optional<std::pair<int, int>> find_extension(const Hypergraph& h,
                                                  const Coloring& c,
                                                  const ColoredCopy& copy) {
  const PreprocessedTree& pt = *copy.pt;
  for (int label = 2; label <= pt.t(); ++label) {
    if (copy.placed[label - 1]) continue;
    const int a = pt.attachment_vertex(label);
    const int ha = copy.phi[a];
    if (ha < 0) continue;
    for (int he = 0; he < h.edge_count(); ++he) {
      const Edge& e = h.edge(he);
      if (!edge_contains(e, ha)) continue;
      bool ok = true;
      for (int w : e) {
        if (w == ha) continue;
        if (c.colors[w] != label || copy.image[w]) {
          ok = false;
          break;
        }
      }
      if (ok) return std::make_pair(label, he);
    }
  }
  return std::nullopt;
}

void apply_extension(ColoredCopy& copy, const Hypergraph& h, int label,
                     int host_edge) {
  const PreprocessedTree& pt = *copy.pt;
  const int a = pt.attachment_vertex(label);
  const int ha = copy.phi[a];
  const Edge& te = pt.label_edge(label);
  const Edge& he = h.edge(host_edge);
  size_t j = 0;
  for (int v : te) {
    if (v == a) continue;
    while (he[j] == ha) ++j;
    copy.phi[v] = he[j];
    copy.image[he[j]] = true;
    ++j;
  }
  copy.placed[label - 1] = true;
  copy.host_edge_of[label - 1] = host_edge;
}

std::variant<ColoredCopy, Embedding> maximal_colored_copy(
    const Hypergraph& h, const Coloring& c, const PreprocessedTree& pt,
    int seed_edge) {
  ColoredCopy copy = seed_copy(pt, h, c, seed_edge);
  while (auto ext = find_extension(h, c, copy))
    apply_extension(copy, h, ext->first, ext->second);
  if (copy.placed_count() == pt.t()) {
    Embedding emb;
    emb.vertex_map = copy.phi;
    emb.edge_map.assign(pt.t(), -1);
    for (int ei = 0; ei < pt.t(); ++ei)
      emb.edge_map[ei] = copy.host_edge_of[pt.label_of_edge[ei] - 1];
    return emb;
  }
  return copy;
}

bool valid_colored_copy(const Hypergraph& h, const Coloring& c,
                        const ColoredCopy& copy) {
  const PreprocessedTree& pt = *copy.pt;
  const Hypergraph& tree = pt.rtree.tree;
  if (!copy.placed.empty() && !copy.placed[0]) return false;
  // Placed labels must form a subtree containing label 1: the next edge on
  // the path toward the root from label l is the minimal-label edge through
  // l's attachment vertex, which is e_{vertex_color(attachment)}.
  for (int label = 2; label <= pt.t(); ++label) {
    if (!copy.placed[label - 1]) continue;
    int cur = label;
    while (cur != 1) {
      cur = pt.vertex_color[pt.attachment_vertex(cur)];
      if (!copy.placed[cur - 1]) return false;
    }
  }
  std::vector<bool> in_domain(tree.vertex_count(), false);
  for (int label = 1; label <= pt.t(); ++label)
    if (copy.placed[label - 1])
      for (int v : pt.label_edge(label)) in_domain[v] = true;
  std::vector<bool> hit(h.vertex_count(), false);
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (in_domain[v] != (copy.phi[v] >= 0)) return false;
    if (copy.phi[v] < 0) continue;
    if (copy.phi[v] >= h.vertex_count()) return false;
    if (hit[copy.phi[v]]) return false;  // injectivity
    hit[copy.phi[v]] = true;
    if (!copy.image[copy.phi[v]]) return false;
    if (c.colors[copy.phi[v]] != pt.vertex_color[v]) return false;
  }
  for (int hv = 0; hv < h.vertex_count(); ++hv)
    if (copy.image[hv] && !hit[hv]) return false;
  for (int label = 1; label <= pt.t(); ++label) {
    if (!copy.placed[label - 1]) {
      if (copy.host_edge_of[label - 1] != -1) return false;
      continue;
    }
    int he = copy.host_edge_of[label - 1];
    if (he < 0 || he >= h.edge_count()) return false;
    Edge img;
    for (int v : pt.label_edge(label)) img.push_back(copy.phi[v]);
    std::sort(img.begin(), img.end());
    if (img != h.edge(he)) return false;
  }
  return true;
}

namespace {

void swap_palette(Coloring& c, int a, int b) {
  if (a == b) return;
  for (int& q : c.colors) {
    if (q == a) q = b;
    else if (q == b) q = a;
  }
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("recoloring invariant broken: ") + what);
}

}  // namespace

Certificate repair(const Hypergraph& h, Coloring& c, int bad_edge,
                   const PreprocessedTree& pt, Trace* trace) {
  if (bad_edge < 0 || bad_edge >= h.edge_count())
    throw std::invalid_argument("bad edge index out of range");
  if (pt.t() != c.palette)
    throw std::invalid_argument("palette size must equal the tree edge count");
  {
    std::vector<int> mono = monochromatic_edges(h, c);
    if (mono.size() != 1 || mono[0] != bad_edge)
      throw std::invalid_argument(
          "repair needs a coloring proper everywhere except the bad edge");
  }
  const int t = c.palette;
  const Edge& bad = h.edge(bad_edge);
  const int original_color = c.colors[bad[0]];
  swap_palette(c, 1, original_color);

  long long recolors = 0;
  const long long max_recolors =
      static_cast<long long>(h.vertex_count()) * std::max(0, t - 1);
  while (true) {
    auto built = maximal_colored_copy(h, c, pt, bad_edge);
    if (auto* emb = std::get_if<Embedding>(&built)) {
      if (trace) trace->push_back(Terminated{Terminated::Reason::CopyFound});
      return Certificate{std::move(*emb)};
    }
    const ColoredCopy& copy = std::get<ColoredCopy>(built);
    if (trace) trace->push_back(CopyRebuilt{copy.placed_labels()});

    int s = -1;
    for (int label = 2; label <= t; ++label)
      if (!copy.placed[label - 1] &&
          copy.phi[pt.attachment_vertex(label)] >= 0) {
        s = label;
        break;
      }
    check(s >= 2, "a partial copy always has a blocking edge");
    const int tree_vertex = pt.attachment_vertex(s);
    const int host_vertex = copy.phi[tree_vertex];
    const int old_color = c.colors[host_vertex];
    check(old_color == pt.vertex_color[tree_vertex],
          "copies preserve vertex colors");
    check(old_color < s, "recoloring strictly increases the color");
    c.colors[host_vertex] = s;
    ++recolors;
    check(recolors <= max_recolors, "at most n(t-1) recolor steps");
    if (trace)
      trace->push_back(
          Recolored{RecolorStep{s, tree_vertex, host_vertex, old_color, s}});

    const bool done = edge_contains(bad, host_vertex);
    std::vector<int> mono = monochromatic_edges(h, c);
    if (done)
      check(mono.empty(), "the bad edge is repaired at termination");
    else
      check(mono.size() == 1 && mono[0] == bad_edge,
            "no edge other than the bad one ever goes monochromatic");
    if (done) {
      swap_palette(c, 1, original_color);
      if (trace) trace->push_back(Terminated{Terminated::Reason::Proper});
      return Certificate{c};
    }
  }
}

Certificate color_or_embed(const Hypergraph& h, const RTree& tr, int t,
                           int root_choice, Trace* trace) {
  if (h.uniformity() != tr.tree.uniformity())
    throw std::invalid_argument("host and tree uniformity differ");
  if (t != tr.t)
    throw std::invalid_argument("palette size must equal the tree edge count");
  const PreprocessedTree pt = preprocess(tr, root_choice);

  Coloring c{std::vector<int>(h.vertex_count(), 1), t};
  Hypergraph prefix = Hypergraph::edgeless(h.vertex_count(), h.uniformity());
  for (int k = 0; k < h.edge_count(); ++k) {
    prefix.add_edge(h.edge(k));
    if (trace) trace->push_back(EdgeInserted{k});
    const Edge& e = h.edge(k);
    bool mono = true;
    for (int v : e)
      if (c.colors[v] != c.colors[e[0]]) {
        mono = false;
        break;
      }
    if (!mono) continue;
    Certificate cert = repair(prefix, c, k, pt, trace);
    if (!cert.is_coloring()) return cert;
  }
  return Certificate{c};
}

int default_root_choice(const RTree& tr) {
  int root = 0;
  for (int i = 1; i < tr.t; ++i)
    if (tr.tree.edge(i) < tr.tree.edge(root)) root = i;
  return root;
}

Certificate color_or_embed(const Hypergraph& h, const RTree& tr, int t) {
  return color_or_embed(h, tr, t, default_root_choice(tr), nullptr);
}

bool validate_certificate(const Hypergraph& h, const RTree& tr, int t,
                          const Certificate& cert) {
  if (cert.is_coloring()) {
    const Coloring& c = cert.coloring();
    if (static_cast<int>(c.colors.size()) != h.vertex_count()) return false;
    if (c.palette > t || !coloring_in_range(c)) return false;
    return is_proper(h, c);
  }
  return valid_embedding(tr.tree, h, cert.embedding());
}

}  // namespace treecolor
