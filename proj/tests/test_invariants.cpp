#include <doctest.h>

#include "edgeideal/betti.hpp"
#include "edgeideal/generator.hpp"
#include "edgeideal/invariants.hpp"
#include "edgeideal/monomial_ideal.hpp"
#include "support.hpp"

using namespace edgeideal;

namespace {

MatchedBipartiteGraph single_edge() { return MatchedBipartiteGraph::from_digraph(DirectedGraph(1)); }

OracleInvariants oracle(const MatchedBipartiteGraph& mg) {
  return oracle_invariants(edge_ideal(mg), Field::rationals());
}

AcyclicReduction reduction_of(const DirectedGraph& dhat, const std::vector<int>& zeta) {
  return acyclic_reduction(build_digraph(expand_poset(dhat, zeta)));
}

}  // namespace

TEST_CASE("maximum antichain") {
  const auto empty = max_antichain(DirectedGraph(3));
  CHECK(empty.size == 3);
  CHECK(empty.witness == 0b111);
  CHECK(max_antichain(support::chain(3)).size == 1);
  const auto p = max_antichain(support::cm_poset7());
  CHECK(p.size == support::brute_antichain(support::cm_poset7()));
  CHECK(p.size == 3);
  CHECK(is_antichain(support::cm_poset7(), p.witness));
}

TEST_CASE("coclique number") {
  CHECK(coclique_number(DirectedGraph(4)) == 4);
  CHECK(coclique_number(DirectedGraph(2, {{0, 1}, {1, 0}})) == 1);
  CHECK(coclique_number(support::cm_poset7()) == 3);
}

TEST_CASE("weighted antichain deficiency") {
  const auto unit = max_weight_antichain_deficiency(acyclic_reduction(support::cm_poset7()));
  CHECK(unit.value == 0);
  const auto one = max_weight_antichain_deficiency(reduction_of(DirectedGraph(1), {2}));
  CHECK(one.value == 1);
  CHECK(one.witness == 0b1);
  const auto two = max_weight_antichain_deficiency(reduction_of(DirectedGraph(2), {2, 3}));
  CHECK(two.value == 3);
  CHECK(two.witness == 0b11);
}

TEST_CASE("regularity, depth and projdim on named instances") {
  const auto k = support::load_matched("k22.json");
  const auto p = support::load_matched("cm_poset7.json");
  const auto s = single_edge();

  CHECK(regularity(s) == 1);
  CHECK(depth(s) == 1);
  CHECK(projective_dimension(s) == 1);

  const auto ko = oracle(k);
  CHECK(regularity(k) == ko.regularity);
  CHECK(depth(k) == ko.depth);
  CHECK(projective_dimension(k) == ko.projdim);
  CHECK(regularity(k) == 1);
  CHECK(depth(k) == 1);
  CHECK(projective_dimension(k) == 3);

  const auto po = oracle(p);
  CHECK(regularity(p) == po.regularity);
  CHECK(depth(p) == po.depth);
  CHECK(projective_dimension(p) == po.projdim);
  CHECK(depth(p) == 7);

  const auto e = expand_poset(support::chain(2), {1, 2});
  CHECK(depth(e) == oracle(e).depth);
  CHECK(depth(e) == 2);
}

TEST_CASE("formulas refuse mixed graphs") {
  CHECK(support::error_kind([] { regularity(support::load_matched("cycle8.json")); }) == ErrorKind::NotUnmixed);
  CHECK(support::error_kind([] { depth(support::load_matched("cycle8.json")); }) == ErrorKind::NotUnmixed);
}

TEST_CASE("invariants report") {
  const auto rep = invariants_report(support::load_graph("cm_poset7.json"));
  CHECK(rep.classification == Classification::CohenMacaulay);
  CHECK(rep.c == 7);
  CHECK(rep.regularity == 3);
  CHECK(rep.depth == 7);
  CHECK(rep.projdim == 7);
  CHECK(rep.scc_count == 7);
  CHECK(rep.r_lower == 3);
  CHECK(rep.kappa == 3);

  const auto k = invariants_report(support::load_graph("k22.json"));
  CHECK(k.c == 2);
  CHECK(k.regularity == 1);
  CHECK(k.depth == 1);
  CHECK(k.projdim == 3);
  CHECK(k.scc_count == 1);

  const auto cyc = invariants_report(support::load_graph("cycle8.json"));
  CHECK(cyc.classification == Classification::PerfectlyMatchedOnly);
  CHECK(cyc.height == 4);
  CHECK(cyc.r_lower == 2);
  CHECK_FALSE(cyc.regularity);
}

TEST_CASE("formulas match the Hochster oracle on every small unmixed graph") {
  for (int c = 1; c <= 3; ++c) {
    for (const auto& mg : enumerate_unmixed(c)) {
      CAPTURE(c);
      const auto o = oracle(mg);
      CHECK(regularity(mg) == o.regularity);
      CHECK(depth(mg) == o.depth);
      CHECK(projective_dimension(mg) == o.projdim);
      CHECK(regularity(mg) == support::brute_antichain(build_digraph(mg)));
      CHECK(depth(mg) >= acyclic_reduction(build_digraph(mg)).t());
    }
  }
}

TEST_CASE("regularity is unchanged by the acyclic reduction") {
  for (int c = 2; c <= 3; ++c) {
    for (const auto& mg : enumerate_unmixed(c)) {
      const auto reduced = reduction_graph(acyclic_reduction(build_digraph(mg)));
      CHECK(oracle(mg).regularity == oracle(reduced).regularity);
    }
  }
}

TEST_CASE("isolated edges are the only Cohen-Macaulay graphs with reg = c") {
  for (int c = 1; c <= 3; ++c) {
    for (const auto& mg : enumerate_unmixed(c)) {
      if (classify(mg) != Classification::CohenMacaulay) continue;
      CHECK((regularity(mg) == c) == (build_digraph(mg).arc_count() == 0));
    }
  }
}

TEST_CASE("Cohen-Macaulay exactly when the oracle depth is c") {
  for (int c = 1; c <= 3; ++c) {
    for (const auto& mg : enumerate_unmixed(c)) {
      CHECK((classify(mg) == Classification::CohenMacaulay) == (oracle(mg).depth == c));
    }
  }
}
