#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "treecolor/hypergraph.hpp"

namespace treecolor::testing {

/// Deterministic G(n, r, p) host: every r-subset is included independently
/// with probability percent/100, drawn from a seeded mt19937_64 so the same
/// seed yields the same hypergraph on every platform.
inline Hypergraph random_hypergraph(int n, int r, int percent,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  Edge combo(r);
  for (int i = 0; i < r; ++i) combo[i] = i;
  if (r <= n) {
    while (true) {
      if (static_cast<int>(rng() % 100) < percent) edges.push_back(combo);
      int i = r - 1;
      while (i >= 0 && combo[i] == n - r + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return Hypergraph(n, r, std::move(edges));
}

inline Coloring random_coloring(int n, int palette, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Coloring c;
  c.palette = palette;
  for (int i = 0; i < n; ++i)
    c.colors.push_back(1 + static_cast<int>(rng() % palette));
  return c;
}

inline Hypergraph fano_plane() {
  return Hypergraph(7, 3,
                    {{0, 1, 2},
                     {0, 3, 4},
                     {0, 5, 6},
                     {1, 3, 5},
                     {1, 4, 6},
                     {2, 3, 6},
                     {2, 4, 5}});
}

}  // namespace treecolor::testing
