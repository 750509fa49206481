#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

// Edge between left vertex `left` and right vertex `right` (dense indices).
struct Edge {
  int left = 0;
  int right = 0;
  auto operator<=>(const Edge&) const = default;
};

// Orders strings by comparing digit runs numerically, so "x2" < "x10".
bool natural_less(std::string_view a, std::string_view b);

// Simple bipartite graph without isolated vertices. Labels are kept in
// natural order; indices into the label vectors are the internal vertex ids.
class BipartiteGraph {
 public:
  // Validates and normalizes. Throws Error with kind IsolatedVertex,
  // DuplicateEdge, DuplicateLabel, UnknownLabel, EmptyGraph or TooLarge.
  static BipartiteGraph from_labels(std::vector<std::string> left, std::vector<std::string> right,
                                    const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<std::string>& left_labels() const { return left_; }
  const std::vector<std::string>& right_labels() const { return right_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int left_count() const { return static_cast<int>(left_.size()); }
  int right_count() const { return static_cast<int>(right_.size()); }
  int vertex_count() const { return left_count() + right_count(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Right neighbours of a left vertex / left neighbours of a right vertex.
  VertexSet left_neighbors(int l) const { return left_adj_[static_cast<std::size_t>(l)]; }
  VertexSet right_neighbors(int r) const { return right_adj_[static_cast<std::size_t>(r)]; }
  bool has_edge(int l, int r) const { return contains(left_neighbors(l), r); }

  int left_index(std::string_view label) const;   // -1 if absent
  int right_index(std::string_view label) const;  // -1 if absent

  bool operator==(const BipartiteGraph&) const = default;

 private:
  BipartiteGraph() = default;

  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> left_adj_;
  std::vector<VertexSet> right_adj_;
};

BipartiteGraph parse_graph(std::string_view document);
std::string serialize_graph(const BipartiteGraph& g);

struct VertexCover {
  VertexSet left = 0;
  VertexSet right = 0;

  int size() const { return popcount(left) + popcount(right); }
  auto operator<=>(const VertexCover&) const = default;
};

bool is_vertex_cover(const BipartiteGraph& g, const VertexCover& c);
bool is_minimal_vertex_cover(const BipartiteGraph& g, const VertexCover& c);

struct CoverEnumeration {
  std::vector<VertexCover> covers;  // ordered by their sorted vertex lists, left before right
  int height = 0;                   // minimum cover size
};

inline constexpr int kDefaultOracleCap = 24;

// Brute force over all vertex subsets. Throws TooLarge above `max_vertices`.
CoverEnumeration minimal_vertex_covers(const BipartiteGraph& g, int max_vertices = kDefaultOracleCap);

bool is_unmixed_oracle(const BipartiteGraph& g, int max_vertices = kDefaultOracleCap);

struct DisconnectedEdgeSet {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

// True iff the subgraph induced on the endpoints of `edges` is exactly
// |edges| isolated edges.
bool is_pairwise_disconnected(const BipartiteGraph& g, const std::vector<Edge>& edges);

// r(I): largest pairwise disconnected edge set, with a witness.
DisconnectedEdgeSet max_pairwise_disconnected(const BipartiteGraph& g, int max_edges = kDefaultOracleCap);

}  // namespace edgeideal
