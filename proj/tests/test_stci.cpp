#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "edgeideal/generator.hpp"
#include "edgeideal/invariants.hpp"
#include "edgeideal/stci.hpp"
#include "support.hpp"

using namespace edgeideal;

namespace {

std::vector<std::string> format_all(const MatchedBipartiteGraph& mg, const std::vector<TermList>& lists) {
  std::vector<std::string> out;
  for (const auto& t : lists) out.push_back(format_terms(mg, t));
  return out;
}

std::set<std::pair<int, int>> point_set(const GammaGraph& gg) {
  std::set<std::pair<int, int>> out;
  for (const auto& p : gg.points) out.insert({p.col, p.row});
  return out;
}

std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> edge_set(const GammaGraph& gg) {
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (const auto& [a, b] : gg.edges) {
    const auto& p = gg.points[static_cast<std::size_t>(a)];
    const auto& q = gg.points[static_cast<std::size_t>(b)];
    auto x = std::pair(p.col, p.row);
    auto y = std::pair(q.col, q.row);
    if (y < x) std::swap(x, y);
    out.insert({x, y});
  }
  return out;
}

// Partition of points (by coordinates) into components.
std::set<std::set<std::pair<int, int>>> partition(const GammaGraph& gg) {
  std::set<std::set<std::pair<int, int>>> out;
  for (const auto& comp : gg.components) {
    std::set<std::pair<int, int>> s;
    for (int p : comp) s.insert({gg.points[static_cast<std::size_t>(p)].col, gg.points[static_cast<std::size_t>(p)].row});
    out.insert(s);
  }
  return out;
}

// Rank compression of the values at the kept vertices (1-based).
std::vector<int> compress(const std::vector<int>& values, VertexSet keep) {
  std::vector<int> kept;
  for (int v : members(keep)) kept.push_back(values[static_cast<std::size_t>(v)]);
  std::vector<int> sorted = kept;
  std::sort(sorted.begin(), sorted.end());
  for (int& x : kept) x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1;
  return kept;
}

PlaneEmbedding restrict(const PlaneEmbedding& e, VertexSet keep) {
  PlaneEmbedding out;
  for (int v : members(keep)) out.phi.push_back(e.phi[static_cast<std::size_t>(v)]);
  return out;
}

int vertex_with(const std::vector<int>& lin, int value) {
  return static_cast<int>(std::find(lin.begin(), lin.end(), value) - lin.begin());
}

}  // namespace

TEST_CASE("breve subgraph") {
  const auto p = support::cm_poset7();
  CHECK(breve_subgraph(p).digraph == p);
  CHECK(breve_subgraph(p).edges.size() == 20);

  const auto k = breve_subgraph(DirectedGraph(2, {{0, 1}, {1, 0}}));
  CHECK(k.digraph.arcs() == std::vector<Arc>{{0, 1}});
  CHECK(k.edges == std::vector<Edge>{{0, 0}, {0, 1}, {1, 1}});

  const auto full = build_digraph(expand_poset(DirectedGraph(1), {3}));
  CHECK(breve_subgraph(full).digraph.arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});

  CHECK(support::error_kind([] { breve_subgraph(DirectedGraph(3, {{0, 1}, {1, 2}})); }) ==
        ErrorKind::NotTransitivelyClosed);
}

TEST_CASE("breve subgraph is maximal") {
  for (int c = 1; c <= 4; ++c) {
    for (const auto& mg : enumerate_unmixed(c)) {
      const auto d = build_digraph(mg);
      const auto bd = breve_subgraph(d);
      CHECK(is_poset(bd.digraph));
      for (const auto& [i, j] : d.arcs()) {
        if (bd.digraph.has_arc(i, j)) continue;
        auto bigger = bd.digraph;
        bigger.add_arc(i, j);
        CHECK_FALSE(is_acyclic(bigger));
      }
    }
  }
}

TEST_CASE("linearizations of the seven element poset") {
  const auto lp = linearizations(support::cm_poset7(), support::cm_poset7_embedding());
  CHECK(lp.gamma == std::vector<int>{1, 2, 3, 4, 6, 5, 7});
  CHECK(lp.rho == std::vector<int>{5, 7, 2, 4, 6, 1, 3});
  CHECK(satisfies_linearization_conditions(support::cm_poset7(), lp));
}

TEST_CASE("linearizations of chains and antichains") {
  const auto c = linearizations(support::chain(3), PlaneEmbedding{{{0, 0}, {1, 1}, {2, 2}}});
  CHECK(c.gamma == std::vector<int>{1, 2, 3});
  CHECK(c.rho == std::vector<int>{3, 2, 1});
  const auto a = linearizations(DirectedGraph(2), PlaneEmbedding{{{0, 1}, {1, 0}}});
  CHECK(a.gamma == std::vector<int>{1, 2});
  CHECK(a.rho == std::vector<int>{1, 2});
  CHECK(support::error_kind([] { column_linearization(support::chain(2), PlaneEmbedding{{{1, 0}, {0, 1}}}); }) ==
        ErrorKind::InvalidEmbedding);
}

TEST_CASE("Gamma graph of small posets") {
  const auto one = build_gamma_graph(DirectedGraph(1), {{1}, {1}});
  CHECK(one.points.size() == 1);
  CHECK(one.edges.empty());
  CHECK(one.components.size() == 1);

  const auto two = support::chain(2);
  const auto lp = linearizations(two, PlaneEmbedding{{{0, 0}, {1, 1}}});
  const auto gg = build_gamma_graph(two, lp);
  CHECK(point_set(gg) == std::set<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(edge_set(gg).size() == 1);
  CHECK(edge_set(gg).count({{1, 2}, {2, 1}}) == 1);
  CHECK(partition(gg) == std::set<std::set<std::pair<int, int>>>{{{1, 1}}, {{1, 2}, {2, 1}}});
  CHECK(gg.components[0].size() == 1);
}

TEST_CASE("Gamma graph of the seven element poset") {
  const auto p = support::cm_poset7();
  const auto lp = linearizations(p, support::cm_poset7_embedding());
  const auto gg = build_gamma_graph(p, lp);
  // 7 diagonal points plus one per arc
  CHECK(gg.points.size() == 7 + 13);
  CHECK(gg.components.size() == 7);
  CHECK(gg.components[0].size() == 1);
  CHECK(gg.points[static_cast<std::size_t>(gg.components[0][0])].col == 1);
  CHECK(gg.points[static_cast<std::size_t>(gg.components[0][0])].row == 1);
  CHECK(edge_set(gg).count({{2, 4}, {4, 3}}) == 1);
  CHECK(gamma_invariant_violations(gg, lp).empty());
}

TEST_CASE("component generators of the seven element poset") {
  const auto mg = support::load_matched("cm_poset7.json");
  const std::vector<std::string> expected{
      "x1*y6",
      "x2*y6 + x1*y3",
      "x3*y6 + x2*y3 + x1*y7",
      "x4*y6 + x3*y3 + x2*y7 + x1*y4",
      "x6*y6 + x4*y7 + x2*y4 + x1*y1",
      "x5*y7 + x4*y4 + x2*y5",
      "x7*y7 + x5*y5 + x2*y2",
  };
  const auto gg = build_gamma_graph(support::cm_poset7(), linearizations(support::cm_poset7(), support::cm_poset7_embedding()));
  CHECK(format_all(mg, component_generators(gg)) == expected);

  const auto with_phi = arank_generators(mg, support::cm_poset7_embedding());
  CHECK(format_all(mg, with_phi.g_list) == expected);
  CHECK(with_phi.h_list.empty());
  CHECK(with_phi.xi == 0);

  const auto searched = arank_generators(mg);
  CHECK(searched.total_count() == 7);
}

TEST_CASE("generators of a single edge and the 2-chain") {
  const auto one = MatchedBipartiteGraph::from_digraph(DirectedGraph(1));
  CHECK(format_all(one, arank_generators(one).g_list) == std::vector<std::string>{"x1*y1"});
  const auto two = MatchedBipartiteGraph::from_digraph(support::chain(2));
  const auto gs = arank_generators(two);
  CHECK(format_all(two, gs.g_list) == std::vector<std::string>{"x1*y2", "x2*y2 + x1*y1"});
  CHECK(gs.h_list.empty());
}

TEST_CASE("extra edge poset and chain cover") {
  const auto p = support::cm_poset7();
  const auto cm = extra_edge_poset(p, breve_subgraph(p));
  CHECK(cm.elements.empty());
  CHECK(poset_width(cm) == 0);
  CHECK(chain_cover(cm).empty());

  const DirectedGraph k(2, {{0, 1}, {1, 0}});
  const auto kp = extra_edge_poset(k, breve_subgraph(k));
  CHECK(kp.elements == std::vector<Term>{{1, 0}});
  CHECK(poset_width(kp) == 1);
  CHECK(chain_cover(kp) == std::vector<std::vector<int>>{{0}});

  const auto full = build_digraph(expand_poset(DirectedGraph(1), {3}));
  const auto fp = extra_edge_poset(full, breve_subgraph(full));
  CHECK(fp.elements == std::vector<Term>{{1, 0}, {2, 0}, {2, 1}});
  // x3y2 > x2y1 is the only comparability
  CHECK(fp.below[2] == std::vector<int>{0});
  CHECK(fp.below[0].empty());
  CHECK(fp.below[1].empty());
  CHECK(poset_width(fp) == 2);
  const auto chains = chain_cover(fp);
  CHECK(chains.size() == 2);
  std::vector<int> covered;
  for (const auto& ch : chains) covered.insert(covered.end(), ch.begin(), ch.end());
  std::sort(covered.begin(), covered.end());
  CHECK(covered == std::vector<int>{0, 1, 2});
  CHECK(projective_dimension(expand_poset(DirectedGraph(1), {3})) == 5);
}

TEST_CASE("generators of K22") {
  const auto mg = support::load_matched("k22.json");
  const auto gs = arank_generators(mg);
  CHECK(format_all(mg, gs.g_list) == std::vector<std::string>{"x1*y2", "x2*y2 + x1*y1"});
  CHECK(format_all(mg, gs.h_list) == std::vector<std::string>{"x2*y1"});
  CHECK(gs.total_count() == 3);
  CHECK(gs.xi == 1);
}

TEST_CASE("generator errors") {
  CHECK(support::error_kind([] { arank_generators(support::load_matched("cycle8.json")); }) == ErrorKind::NotUnmixed);
  CHECK(support::error_kind([] { arank_generators(support::load_matched("crown3.json")); }) ==
        ErrorKind::NotTwoDimensional);
  CHECK(support::error_kind([] {
          arank_generators(support::load_matched("cm_poset7.json"), PlaneEmbedding{{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}}});
        }) == ErrorKind::InvalidEmbedding);
}

TEST_CASE("generator count and edge usage on all small unmixed graphs") {
  for (int c = 1; c <= 4; ++c) {
    for (const auto& mg : enumerate_unmixed(c)) {
      const auto gs = arank_generators(mg);
      CHECK(gs.total_count() == projective_dimension(mg));
      CHECK(static_cast<int>(gs.g_list.size()) == c);
      std::size_t terms = 0;
      for (const auto& t : gs.g_list) terms += t.size();
      for (const auto& t : gs.h_list) terms += t.size();
      CHECK(terms == mg.edges().size());
      for (const auto& t : gs.g_list)
        for (const auto& e : t) CHECK(mg.has_edge(e.left, e.right));
    }
  }
}

TEST_CASE("refined embedding embeds the breve poset") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto mg = random_unmixed(2 + static_cast<int>(seed % 6), seed);
    const auto d = build_digraph(mg);
    const auto ar = acyclic_reduction(d);
    const auto q = embed_poset_2d(ar.quotient);
    if (!std::holds_alternative<PlaneEmbedding>(q)) continue;
    CHECK(validate_embedding(breve_subgraph(d).digraph, refine_embedding(ar, std::get<PlaneEmbedding>(q))));
  }
}

TEST_CASE("Gamma properties on random two dimensional posets") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const auto pe = random_2d_poset(n, seed);
    const auto lp = linearizations(pe.poset, pe.embedding);
    CHECK(satisfies_linearization_conditions(pe.poset, lp));
    const auto gg = build_gamma_graph(pe.poset, lp);
    CHECK(static_cast<int>(gg.components.size()) == n);
    CHECK(gamma_invariant_violations(gg, lp).empty());
  }
}

TEST_CASE("deleting the first column vertex removes the first column") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const auto pe = random_2d_poset(n, seed);
    const auto lp = linearizations(pe.poset, pe.embedding);
    const auto gg = build_gamma_graph(pe.poset, lp);
    const int v0 = vertex_with(lp.gamma, 1);
    const VertexSet keep = full_set(n) & ~bit(v0);

    const auto sub = induced_subgraph(pe.poset, keep);
    const auto lp2 = linearizations(sub, restrict(pe.embedding, keep));
    CHECK(lp2.gamma == compress(lp.gamma, keep));
    CHECK(lp2.rho == compress(lp.rho, keep));
    const auto gg2 = build_gamma_graph(sub, lp2);

    // shift Gamma minus its first column: columns down by one, row rho(v0) dropped
    const int r0 = lp.rho[static_cast<std::size_t>(v0)];
    auto shift = [&](std::pair<int, int> p) { return std::pair(p.first - 1, p.second > r0 ? p.second - 1 : p.second); };
    std::set<std::pair<int, int>> points;
    for (const auto& p : point_set(gg))
      if (p.first > 1) points.insert(shift(p));
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
    for (const auto& [a, b] : edge_set(gg))
      if (a.first > 1) edges.insert({shift(a), shift(b)});
    CHECK(point_set(gg2) == points);
    CHECK(edge_set(gg2) == edges);
  }
}

TEST_CASE("deleting the up-set of the first column vertex removes the first column rows") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const auto pe = random_2d_poset(n, seed);
    const auto lp = linearizations(pe.poset, pe.embedding);
    const auto gg = build_gamma_graph(pe.poset, lp);
    const int v0 = vertex_with(lp.gamma, 1);
    const VertexSet up = up_set(strict_reachability(pe.poset), bit(v0));
    const VertexSet keep = full_set(n) & ~up;
    if (keep == 0) continue;
    const int r0 = lp.rho[static_cast<std::size_t>(v0)];
    CHECK(r0 == popcount(up));

    const auto sub = induced_subgraph(pe.poset, keep);
    const auto lp2 = linearizations(sub, restrict(pe.embedding, keep));
    CHECK(lp2.gamma == compress(lp.gamma, keep));
    std::vector<int> shifted;
    for (int v : members(keep)) shifted.push_back(lp.rho[static_cast<std::size_t>(v)] - r0);
    CHECK(lp2.rho == shifted);
    const auto gg2 = build_gamma_graph(sub, lp2);

    // column map: old gamma -> compressed gamma
    std::map<int, int> col;
    for (int v : members(keep)) col[lp.gamma[static_cast<std::size_t>(v)]] = 0;
    int k = 0;
    for (auto& [old, fresh] : col) fresh = ++k;
    auto shift = [&](std::pair<int, int> p) { return std::pair(col.at(p.first), p.second - r0); };

    std::set<std::pair<int, int>> points;
    for (const auto& p : point_set(gg))
      if (p.second > r0) points.insert(shift(p));
    CHECK(point_set(gg2) == points);

    std::set<std::set<std::pair<int, int>>> expected;
    for (const auto& comp : partition(gg)) {
      std::set<std::pair<int, int>> s;
      for (const auto& p : comp)
        if (p.second > r0) s.insert(shift(p));
      if (!s.empty()) expected.insert(s);
    }
    CHECK(partition(gg2) == expected);
  }
}

TEST_CASE("dropping a Gamma edge is detected") {
  const auto p = support::cm_poset7();
  const auto lp = linearizations(p, support::cm_poset7_embedding());
  auto gg = build_gamma_graph(p, lp);
  REQUIRE_FALSE(gg.edges.empty());
  gg.edges.pop_back();
  assign_components(gg);
  const auto v = gamma_invariant_violations(gg, lp);
  CHECK(std::find(v.begin(), v.end(), "component-count") != v.end());
}
