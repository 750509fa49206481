#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgeideal/bipartite_graph.hpp"
#include "edgeideal/digraph.hpp"
#include "edgeideal/embedding.hpp"
#include "edgeideal/matching.hpp"

namespace edgeideal {

// A product x_i y_j of the matched graph is written Edge{i, j}.
using Term = Edge;
using TermList = std::vector<Term>;

// Maximal acyclic transitively closed subgraph of d_G: inside each strong
// component only the arcs i->j with i < j survive, all other arcs are kept.
struct BreveData {
  DirectedGraph digraph;  // its arcs define the order; j is above i iff arc i->j
  std::vector<Edge> edges;  // edges x_i y_j of the breve graph (diagonal included)
};

BreveData breve_subgraph(const DirectedGraph& d);

// gamma[v], rho[v] in 1..n.
struct LinearizationPair {
  std::vector<int> gamma;
  std::vector<int> rho;
  bool operator==(const LinearizationPair&) const = default;
};

// Repeatedly takes the minimal element with the smallest first coordinate.
std::vector<int> column_linearization(const DirectedGraph& poset, const PlaneEmbedding& phi);
// Repeatedly takes the maximal element with the smallest first coordinate.
std::vector<int> row_linearization(const DirectedGraph& poset, const PlaneEmbedding& phi);
LinearizationPair linearizations(const DirectedGraph& poset, const PlaneEmbedding& phi);

// j > i  =>  gamma(j) > gamma(i) and rho(j) < rho(i);
// i, j incomparable  =>  (gamma(j) > gamma(i) <=> rho(j) > rho(i)).
bool satisfies_linearization_conditions(const DirectedGraph& poset, const LinearizationPair& lp);

struct GammaPoint {
  int col = 0;  // gamma(i)
  int row = 0;  // rho(j)
  int i = 0;
  int j = 0;
};

struct GammaGraph {
  int n = 0;
  std::vector<GammaPoint> points;             // sorted by (col, row)
  std::vector<std::pair<int, int>> edges;     // point indices
  std::vector<std::vector<int>> components;   // components[t-1] contains the leftmost point of row t
  std::vector<int> component_of;              // point -> component index, -1 if unassigned

  int point_at(int col, int row) const;  // -1 if empty
};

// Point set {(gamma(i), rho(j)) : j >= i}; each point not lowest in its column
// is joined to the right-hand neighbour of the nearest point below it.
// Throws InvariantViolation if any structural property fails.
GammaGraph build_gamma_graph(const DirectedGraph& poset, const LinearizationPair& lp);

// Recomputes components from points/edges (used after mutating edges).
void assign_components(GammaGraph& gg);

// Names of the violated structural properties (empty when all hold):
// "component-count", "diagonal-present", "first-column-contiguous",
// "row-leftmost-bijective", "top-left-is-row-leftmost".
std::vector<std::string> gamma_invariant_violations(const GammaGraph& gg, const LinearizationPair& lp);

// g_t = sum of x_i y_j over C_t, terms in descending monomial order.
std::vector<TermList> component_generators(const GammaGraph& gg);

// Sorts terms in descending degree-reverse-lexicographic order with
// variables ordered x1 < y1 < x2 < y2 < ...
void sort_terms(TermList& terms);

// Edges x_j y_i of G missing from the breve graph (j above i in the breve
// order); x_j y_i > x_j' y_i' iff j strictly above j' and i strictly above i'.
struct ExtraEdgePoset {
  std::vector<Term> elements;           // Term{j, i}, sorted
  std::vector<std::vector<int>> below;  // below[k] = elements strictly less than k
};

ExtraEdgePoset extra_edge_poset(const DirectedGraph& d, const BreveData& bd);

// Width via Dilworth: |P| - maximum matching of the comparability bipartite graph.
int poset_width(const ExtraEdgePoset& p);

// Minimum chain cover (each chain listed top to bottom, element indices).
std::vector<std::vector<int>> chain_cover(const ExtraEdgePoset& p);

struct GeneratorSet {
  std::vector<TermList> g_list;  // c generators from the Gamma graph of the breve poset
  std::vector<TermList> h_list;  // xi generators from the chain cover
  int xi = 0;
  PlaneEmbedding embedding;      // embedding of the breve poset that was used
  LinearizationPair linearization;
  GammaGraph gamma;
  ExtraEdgePoset extra;
  std::vector<std::vector<int>> chains;

  int total_count() const { return static_cast<int>(g_list.size() + h_list.size()); }
};

// Throws NotUnmixed, NotTwoDimensional, InvalidEmbedding (bad override).
// `breve_embedding` overrides the search with an embedding of the breve poset.
GeneratorSet arank_generators(const MatchedBipartiteGraph& mg,
                              const std::optional<PlaneEmbedding>& breve_embedding = std::nullopt);

// Embedding of the breve poset obtained by blowing up each quotient point of
// `quotient_embedding` into a diagonal run of its component.
PlaneEmbedding refine_embedding(const AcyclicReduction& ar, const PlaneEmbedding& quotient_embedding);

// "x6*y6 + x4*y7" using the matched graph's labels.
std::string format_terms(const MatchedBipartiteGraph& mg, const TermList& terms);

}  // namespace edgeideal
