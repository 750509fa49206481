#pragma once

#include <utility>
#include <vector>

#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

using Arc = std::pair<int, int>;

// Simple loopless digraph on vertices 0..n-1 (n <= 64).
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(int n);
  DirectedGraph(int n, const std::vector<Arc>& arcs);

  int size() const { return n_; }
  void add_arc(int from, int to);
  void remove_arc(int from, int to);
  bool has_arc(int from, int to) const { return contains(out_[static_cast<std::size_t>(from)], to); }
  VertexSet out(int v) const { return out_[static_cast<std::size_t>(v)]; }
  VertexSet in(int v) const { return in_[static_cast<std::size_t>(v)]; }

  std::vector<Arc> arcs() const;  // sorted
  int arc_count() const;

  bool operator==(const DirectedGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// reach[i] = { j : directed path of length >= 1 from i to j }.
// Computed by squaring the relation until it stabilises.
std::vector<VertexSet> strict_reachability(const DirectedGraph& d);

// Closure without loops (vertices on cycles do not get a self-arc).
DirectedGraph transitive_closure(const DirectedGraph& d);

bool is_transitively_closed(const DirectedGraph& d);
bool is_acyclic(const DirectedGraph& d);
inline bool is_poset(const DirectedGraph& d) { return is_acyclic(d) && is_transitively_closed(d); }

// comparable[i] = distinct vertices joined to i by a directed path either way.
std::vector<VertexSet> comparability_masks(const DirectedGraph& d);

// No directed path between two distinct members.
bool is_antichain(const DirectedGraph& d, VertexSet s);

// Calls visit(VertexSet) for every antichain (including the empty one).
template <class Visit>
void for_each_antichain(const std::vector<VertexSet>& comparable, Visit&& visit) {
  const int n = static_cast<int>(comparable.size());
  struct Walker {
    const std::vector<VertexSet>& comp;
    Visit& visit;
    int n;
    void run(int v, VertexSet chosen, VertexSet blocked) {
      if (v == n) {
        visit(chosen);
        return;
      }
      run(v + 1, chosen, blocked);
      if (!contains(blocked, v)) run(v + 1, chosen | bit(v), blocked | comp[static_cast<std::size_t>(v)]);
    }
  };
  Walker w{comparable, visit, n};
  w.run(0, 0, 0);
}

// Subgraph induced on `keep`, relabelled 0..|keep|-1 in increasing order.
DirectedGraph induced_subgraph(const DirectedGraph& d, VertexSet keep);

// Vertices of `d` at or above some member of `s` (j with j >= i, i in s).
VertexSet up_set(const std::vector<VertexSet>& reach, VertexSet s);

}  // namespace edgeideal
