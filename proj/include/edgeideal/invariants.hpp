#pragma once

#include <optional>
#include <vector>

#include "edgeideal/bipartite_graph.hpp"
#include "edgeideal/digraph.hpp"
#include "edgeideal/matching.hpp"

namespace edgeideal {

struct Antichain {
  int size = 0;
  VertexSet witness = 0;  // lexicographically smallest of maximum size
};

// Exhaustive branch and bound over the incomparability graph; n <= cap.
Antichain max_antichain(const DirectedGraph& d, int cap = kDefaultOracleCap);

// Largest independent set of the underlying undirected graph.
int coclique_number(const DirectedGraph& d, int cap = kDefaultOracleCap);

struct Deficiency {
  int value = 0;          // max over antichains B of (sum of zeta over B) - |B|
  VertexSet witness = 0;  // quotient components
};

Deficiency max_weight_antichain_deficiency(const AcyclicReduction& ar, int cap = kMaxQuotientForAntichains);

// reg R/I = largest antichain of d_G (cross-checked against the quotient).
int regularity(const MatchedBipartiteGraph& mg);
// depth R/I = c - deficiency of the acyclic reduction.
int depth(const MatchedBipartiteGraph& mg);
// 2c - depth.
int projective_dimension(const MatchedBipartiteGraph& mg);

struct InvariantsReport {
  Classification classification = Classification::NoPerfectMatching;
  int height = 0;  // max matching size (Konig), always present
  std::optional<int> c;
  std::optional<int> regularity;
  VertexSet regularity_witness = 0;
  std::optional<int> depth;
  VertexSet depth_witness = 0;
  std::optional<int> projdim;
  std::optional<int> kappa;
  std::optional<int> scc_count;
  std::optional<int> r_lower;  // brute-force r(I) when within the edge cap
  std::vector<Edge> r_witness;
};

struct ReportOptions {
  int max_edges_for_r = kDefaultOracleCap;
  int max_antichain_vertices = kDefaultOracleCap;
};

// Formula invariants for unmixed graphs, partial report otherwise. Throws
// InvariantViolation if the internal relations between the fields fail.
InvariantsReport invariants_report(const BipartiteGraph& g, const ReportOptions& opts = {});

bool lex_less(VertexSet a, VertexSet b);

}  // namespace edgeideal
