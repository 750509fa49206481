#include "edgeideal/invariants.hpp"

#include <string>

#include "edgeideal/clique.hpp"
#include "edgeideal/error.hpp"

namespace edgeideal {

bool lex_less(VertexSet a, VertexSet b) { return members(a) < members(b); }

Antichain max_antichain(const DirectedGraph& d, int cap) {
  if (d.size() > cap) fail(ErrorKind::TooLarge, "antichain search over " + std::to_string(d.size()) + " vertices exceeds cap " + std::to_string(cap));
  const VertexSet w = max_clique(complement_graph(comparability_masks(d)));
  return {popcount(w), w};
}

int coclique_number(const DirectedGraph& d, int cap) {
  if (d.size() > cap) fail(ErrorKind::TooLarge, "coclique search over " + std::to_string(d.size()) + " vertices exceeds cap " + std::to_string(cap));
  std::vector<VertexSet> neighbours(static_cast<std::size_t>(d.size()), 0);
  for (int i = 0; i < d.size(); ++i) {
    neighbours[static_cast<std::size_t>(i)] = d.out(i) | d.in(i);
  }
  return popcount(max_clique(complement_graph(neighbours)));
}

Deficiency max_weight_antichain_deficiency(const AcyclicReduction& ar, int cap) {
  if (ar.t() > cap) fail(ErrorKind::TooLarge, "weighted antichain search over " + std::to_string(ar.t()) + " components exceeds cap " + std::to_string(cap));
  Deficiency best;  // B = {} gives 0
  for_each_antichain(comparability_masks(ar.quotient), [&](VertexSet b) {
    const int value = ar.weight(b) - popcount(b);
    if (value > best.value || (value == best.value && lex_less(b, best.witness))) best = {value, b};
  });
  return best;
}

namespace {

void require_unmixed(const MatchedBipartiteGraph& mg) {
  if (!is_unmixed(classify(mg))) fail(ErrorKind::NotUnmixed, "formula needs a transitively closed d_G");
}

}  // namespace

int regularity(const MatchedBipartiteGraph& mg) {
  require_unmixed(mg);
  const DirectedGraph d = build_digraph(mg);
  const int direct = max_antichain(d).size;
  const int reduced = max_antichain(acyclic_reduction(d).quotient).size;
  ensure(direct == reduced, "max antichain of d_G equals that of its acyclic reduction");
  return direct;
}

int depth(const MatchedBipartiteGraph& mg) {
  require_unmixed(mg);
  return mg.c() - max_weight_antichain_deficiency(acyclic_reduction(build_digraph(mg))).value;
}

int projective_dimension(const MatchedBipartiteGraph& mg) { return 2 * mg.c() - depth(mg); }

InvariantsReport invariants_report(const BipartiteGraph& g, const ReportOptions& opts) {
  InvariantsReport rep;
  rep.height = matching_number(g);
  if (g.edge_count() <= opts.max_edges_for_r) {
    const auto r = max_pairwise_disconnected(g, opts.max_edges_for_r);
    rep.r_lower = r.size();
    rep.r_witness = r.edges;
  }
  const auto mg = find_perfect_matching(g);
  if (!mg) return rep;
  rep.classification = classify(*mg);
  rep.c = mg->c();
  if (!is_unmixed(rep.classification)) return rep;

  const int c = mg->c();
  const DirectedGraph d = build_digraph(*mg);
  const AcyclicReduction ar = acyclic_reduction(d);
  const Antichain reg = max_antichain(d, opts.max_antichain_vertices);
  ensure(reg.size == max_antichain(ar.quotient, opts.max_antichain_vertices).size,
         "max antichain of d_G equals that of its acyclic reduction");
  const Deficiency def = max_weight_antichain_deficiency(ar);

  rep.regularity = reg.size;
  rep.regularity_witness = reg.witness;
  rep.depth = c - def.value;
  rep.depth_witness = def.witness;
  rep.projdim = 2 * c - *rep.depth;
  rep.kappa = coclique_number(d, opts.max_antichain_vertices);
  rep.scc_count = ar.t();

  ensure(rep.height == c, "height equals c for a perfectly matched graph");
  ensure(*rep.depth + *rep.projdim == 2 * c, "depth + projdim = 2c");
  ensure(*rep.depth >= *rep.scc_count, "depth >= number of strong components");
  ensure(*rep.depth <= c, "depth <= c");
  ensure(*rep.regularity <= c, "regularity <= c");
  ensure(*rep.kappa >= *rep.regularity, "kappa >= max antichain");
  if (rep.r_lower) {
    ensure(*rep.r_lower >= *rep.kappa, "r(I) >= kappa");
    ensure(*rep.r_lower == *rep.regularity, "r(I) equals regularity for unmixed graphs");
  }
  return rep;
}

}  // namespace edgeideal
