#pragma once

#include <vector>

#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

// Maximum clique in a graph on <= 64 vertices given as adjacency masks.
// Depth-first in increasing vertex order, so the returned clique is the
// lexicographically smallest one of maximum size.
inline VertexSet max_clique(const std::vector<VertexSet>& adjacent) {
  struct Search {
    const std::vector<VertexSet>& adj;
    VertexSet best = 0;
    int best_size = 0;

    void run(VertexSet chosen, int size, VertexSet candidates) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      while (candidates != 0) {
        if (size + popcount(candidates) <= best_size) return;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        run(chosen | bit(v), size + 1, candidates & adj[static_cast<std::size_t>(v)]);
      }
    }
  };
  Search s{adjacent};
  s.run(0, 0, full_set(static_cast<int>(adjacent.size())));
  return s.best;
}

// Complement adjacency (no loops) for independent-set queries.
inline std::vector<VertexSet> complement_graph(const std::vector<VertexSet>& adjacent) {
  const int n = static_cast<int>(adjacent.size());
  std::vector<VertexSet> out(adjacent.size());
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = full_set(n) & ~adjacent[static_cast<std::size_t>(v)] & ~bit(v);
  return out;
}

}  // namespace edgeideal
