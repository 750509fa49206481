#include "edgeideal/digraph.hpp"

#include <algorithm>
#include <string>

#include "edgeideal/error.hpp"

namespace edgeideal {

DirectedGraph::DirectedGraph(int n) : n_(n), out_(static_cast<std::size_t>(n), 0), in_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) fail(ErrorKind::TooLarge, "digraph on " + std::to_string(n) + " vertices");
}

DirectedGraph::DirectedGraph(int n, const std::vector<Arc>& arcs) : DirectedGraph(n) {
  for (const auto& [a, b] : arcs) add_arc(a, b);
}

void DirectedGraph::add_arc(int from, int to) {
  if (from < 0 || to < 0 || from >= n_ || to >= n_) {
    fail(ErrorKind::InvariantViolation, "arc (" + std::to_string(from) + "," + std::to_string(to) + ") out of range");
  }
  if (from == to) fail(ErrorKind::InvariantViolation, "loop at vertex " + std::to_string(from));
  out_[static_cast<std::size_t>(from)] |= bit(to);
  in_[static_cast<std::size_t>(to)] |= bit(from);
}

void DirectedGraph::remove_arc(int from, int to) {
  out_[static_cast<std::size_t>(from)] &= ~bit(to);
  in_[static_cast<std::size_t>(to)] &= ~bit(from);
}

std::vector<Arc> DirectedGraph::arcs() const {
  std::vector<Arc> out;
  for (int i = 0; i < n_; ++i) {
    for (int j : members(out_[static_cast<std::size_t>(i)])) out.emplace_back(i, j);
  }
  return out;
}

int DirectedGraph::arc_count() const {
  int k = 0;
  for (VertexSet s : out_) k += popcount(s);
  return k;
}

std::vector<VertexSet> strict_reachability(const DirectedGraph& d) {
  const int n = d.size();
  std::vector<VertexSet> reach(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) reach[static_cast<std::size_t>(i)] = d.out(i);
  // R <- R u R.R doubles the covered path length each round
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<VertexSet> next = reach;
    for (int i = 0; i < n; ++i) {
      VertexSet acc = reach[static_cast<std::size_t>(i)];
      for (int k : members(reach[static_cast<std::size_t>(i)])) acc |= reach[static_cast<std::size_t>(k)];
      if (acc != reach[static_cast<std::size_t>(i)]) changed = true;
      next[static_cast<std::size_t>(i)] = acc;
    }
    reach = std::move(next);
  }
  return reach;
}

DirectedGraph transitive_closure(const DirectedGraph& d) {
  const auto reach = strict_reachability(d);
  DirectedGraph out(d.size());
  for (int i = 0; i < d.size(); ++i) {
    for (int j : members(reach[static_cast<std::size_t>(i)] & ~bit(i))) out.add_arc(i, j);
  }
  return out;
}

bool is_transitively_closed(const DirectedGraph& d) {
  for (int i = 0; i < d.size(); ++i) {
    for (int j : members(d.out(i))) {
      if ((d.out(j) & ~bit(i) & ~d.out(i)) != 0) return false;
    }
  }
  return true;
}

bool is_acyclic(const DirectedGraph& d) {
  const auto reach = strict_reachability(d);
  for (int i = 0; i < d.size(); ++i) {
    if (contains(reach[static_cast<std::size_t>(i)], i)) return false;
  }
  return true;
}

std::vector<VertexSet> comparability_masks(const DirectedGraph& d) {
  const auto reach = strict_reachability(d);
  const int n = d.size();
  std::vector<VertexSet> comp(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j : members(reach[static_cast<std::size_t>(i)])) {
      comp[static_cast<std::size_t>(i)] |= bit(j);
      comp[static_cast<std::size_t>(j)] |= bit(i);
    }
  }
  for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] &= ~bit(i);
  return comp;
}

bool is_antichain(const DirectedGraph& d, VertexSet s) {
  const auto comp = comparability_masks(d);
  for (int i : members(s)) {
    if ((comp[static_cast<std::size_t>(i)] & s) != 0) return false;
  }
  return true;
}

DirectedGraph induced_subgraph(const DirectedGraph& d, VertexSet keep) {
  const auto kept = members(keep);
  std::vector<int> index(static_cast<std::size_t>(d.size()), -1);
  for (std::size_t k = 0; k < kept.size(); ++k) index[static_cast<std::size_t>(kept[k])] = static_cast<int>(k);
  DirectedGraph out(static_cast<int>(kept.size()));
  for (int i : kept) {
    for (int j : members(d.out(i) & keep)) out.add_arc(index[static_cast<std::size_t>(i)], index[static_cast<std::size_t>(j)]);
  }
  return out;
}

VertexSet up_set(const std::vector<VertexSet>& reach, VertexSet s) {
  VertexSet out = s;
  for (int i : members(s)) out |= reach[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace edgeideal
