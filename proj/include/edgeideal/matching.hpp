#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgeideal/bipartite_graph.hpp"
#include "edgeideal/digraph.hpp"

namespace edgeideal {

// Bipartite graph with both sides indexed 0..c-1 so that x_i y_i is an edge
// for every i. Edge{i, j} stands for x_i y_j.
class MatchedBipartiteGraph {
 public:
  MatchedBipartiteGraph(int c, std::vector<Edge> edges, std::vector<std::string> x_labels,
                        std::vector<std::string> y_labels, std::vector<int> y_origin = {});

  // Matched graph of a digraph: diagonal plus x_i y_j for every arc i->j.
  // Labels default to x1..xc / y1..yc.
  static MatchedBipartiteGraph from_digraph(const DirectedGraph& d, std::vector<std::string> x_labels = {},
                                            std::vector<std::string> y_labels = {});

  int c() const { return c_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int i, int j) const { return contains(adj_[static_cast<std::size_t>(i)], j); }
  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }
  // Right index in the source BipartiteGraph of y_i (identity when built directly).
  int y_origin(int i) const { return y_origin_[static_cast<std::size_t>(i)]; }

  BipartiteGraph to_graph() const;

 private:
  int c_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
  std::vector<int> y_origin_;
};

// nullopt when the sides differ in size or the maximum matching is not perfect.
std::optional<MatchedBipartiteGraph> find_perfect_matching(const BipartiteGraph& g);

// Size of a maximum matching; equals the height of the edge ideal (Konig).
int matching_number(const BipartiteGraph& g);

// Arc i->j iff i != j and x_i y_j is an edge.
DirectedGraph build_digraph(const MatchedBipartiteGraph& mg);

enum class Classification { NoPerfectMatching, PerfectlyMatchedOnly, Unmixed, CohenMacaulay };

const char* to_string(Classification c);
Classification classify(const BipartiteGraph& g);
Classification classify(const MatchedBipartiteGraph& mg);
inline bool is_unmixed(Classification c) { return c == Classification::Unmixed || c == Classification::CohenMacaulay; }

// Strong components Z_a in topological order (ties by smallest member), their
// sizes, and the quotient digraph with a->b iff some path leads from Z_a to Z_b.
struct AcyclicReduction {
  std::vector<VertexSet> components;
  std::vector<int> zeta;
  DirectedGraph quotient;
  std::vector<int> component_of;

  int t() const { return static_cast<int>(components.size()); }
  // |tau^zeta| for a square-free quotient multidegree tau given as a set of components.
  int weight(VertexSet tau) const;
};

AcyclicReduction acyclic_reduction(const DirectedGraph& d);

// The acyclic-reduction bipartite graph on u_1..u_t, v_1..v_t.
MatchedBipartiteGraph reduction_graph(const AcyclicReduction& ar);

// Prime (x_i : i in x) + (y_i : i in y), indices of the matched graph.
struct AssociatedPrime {
  VertexSet x = 0;
  VertexSet y = 0;
  auto operator<=>(const AssociatedPrime&) const = default;
};

inline constexpr int kMaxQuotientForAntichains = 20;

// One prime per antichain of the quotient. Throws NotUnmixed / TooLarge.
std::vector<AssociatedPrime> associated_primes(const MatchedBipartiteGraph& mg,
                                               int max_components = kMaxQuotientForAntichains);

// The same prime as a vertex cover of the source bipartite graph.
VertexCover prime_as_cover(const MatchedBipartiteGraph& mg, const AssociatedPrime& p);

}  // namespace edgeideal
