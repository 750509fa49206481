#include "edgeideal/stci.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "edgeideal/error.hpp"
#include "edgeideal/invariants.hpp"

namespace edgeideal {

BreveData breve_subgraph(const DirectedGraph& d) {
  if (!is_transitively_closed(d)) fail(ErrorKind::NotTransitivelyClosed, "breve subgraph needs a transitively closed digraph");
  const int n = d.size();
  const auto reach = strict_reachability(d);
  BreveData bd{DirectedGraph(n), {}};
  for (const auto& [i, j] : d.arcs()) {
    const bool same_component = contains(reach[static_cast<std::size_t>(j)], i);
    if (!same_component || i < j) bd.digraph.add_arc(i, j);
  }
  for (int i = 0; i < n; ++i) {
    bd.edges.push_back({i, i});
    for (int j : members(bd.digraph.out(i))) bd.edges.push_back({i, j});
  }
  std::sort(bd.edges.begin(), bd.edges.end());
  ensure(is_poset(bd.digraph), "breve digraph is acyclic and transitively closed");
  return bd;
}

namespace {

void require_valid(const DirectedGraph& poset, const PlaneEmbedding& phi) {
  if (!validate_embedding(poset, phi)) fail(ErrorKind::InvalidEmbedding, "embedding is not order-faithful");
}

// Peels `n` elements; `candidate(v, remaining)` says whether v may be taken.
template <class Candidate>
std::vector<int> peel(int n, const PlaneEmbedding& phi, Candidate candidate) {
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  VertexSet remaining = full_set(n);
  for (int step = 1; step <= n; ++step) {
    int best = -1;
    bool tie = false;
    for (int v : members(remaining)) {
      if (!candidate(v, remaining)) continue;
      const long long a = phi.phi[static_cast<std::size_t>(v)].a;
      if (best < 0 || a < phi.phi[static_cast<std::size_t>(best)].a) {
        best = v;
        tie = false;
      } else if (a == phi.phi[static_cast<std::size_t>(best)].a) {
        tie = true;
      }
    }
    if (best < 0 || tie) fail(ErrorKind::InvalidEmbedding, "extremal elements with equal first coordinate");
    label[static_cast<std::size_t>(best)] = step;
    remaining &= ~bit(best);
  }
  return label;
}

}  // namespace

std::vector<int> column_linearization(const DirectedGraph& poset, const PlaneEmbedding& phi) {
  require_valid(poset, phi);
  const auto reach = strict_reachability(poset);
  std::vector<VertexSet> below(static_cast<std::size_t>(poset.size()), 0);
  for (int i = 0; i < poset.size(); ++i) {
    for (int j : members(reach[static_cast<std::size_t>(i)])) below[static_cast<std::size_t>(j)] |= bit(i);
  }
  return peel(poset.size(), phi,
              [&](int v, VertexSet rem) { return (below[static_cast<std::size_t>(v)] & rem) == 0; });
}

std::vector<int> row_linearization(const DirectedGraph& poset, const PlaneEmbedding& phi) {
  require_valid(poset, phi);
  const auto reach = strict_reachability(poset);
  return peel(poset.size(), phi,
              [&](int v, VertexSet rem) { return (reach[static_cast<std::size_t>(v)] & rem) == 0; });
}

LinearizationPair linearizations(const DirectedGraph& poset, const PlaneEmbedding& phi) {
  return {column_linearization(poset, phi), row_linearization(poset, phi)};
}

bool satisfies_linearization_conditions(const DirectedGraph& poset, const LinearizationPair& lp) {
  const int n = poset.size();
  const auto reach = strict_reachability(poset);
  const auto& g = lp.gamma;
  const auto& r = lp.rho;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto si = static_cast<std::size_t>(i);
      const auto sj = static_cast<std::size_t>(j);
      if (contains(reach[si], j)) {
        if (!(g[sj] > g[si] && r[sj] < r[si])) return false;
      } else if (!contains(reach[sj], i)) {
        if ((g[sj] > g[si]) != (r[sj] > r[si])) return false;
      }
    }
  }
  return true;
}

int GammaGraph::point_at(int col, int row) const {
  const GammaPoint key{col, row, 0, 0};
  const auto it = std::lower_bound(points.begin(), points.end(), key, [](const GammaPoint& a, const GammaPoint& b) {
    return std::pair(a.col, a.row) < std::pair(b.col, b.row);
  });
  if (it == points.end() || it->col != col || it->row != row) return -1;
  return static_cast<int>(it - points.begin());
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Leftmost point of each row 1..n, -1 for an empty row.
std::vector<int> row_leftmost(const GammaGraph& gg) {
  std::vector<int> left(static_cast<std::size_t>(gg.n + 1), -1);
  for (int p = 0; p < static_cast<int>(gg.points.size()); ++p) {
    const auto& pt = gg.points[static_cast<std::size_t>(p)];
    auto& slot = left[static_cast<std::size_t>(pt.row)];
    if (slot < 0 || gg.points[static_cast<std::size_t>(slot)].col > pt.col) slot = p;
  }
  return left;
}

}  // namespace

void assign_components(GammaGraph& gg) {
  const int np = static_cast<int>(gg.points.size());
  UnionFind uf(np);
  for (const auto& [a, b] : gg.edges) uf.unite(a, b);
  std::map<int, std::vector<int>> by_root;
  for (int p = 0; p < np; ++p) by_root[uf.find(p)].push_back(p);

  gg.components.assign(static_cast<std::size_t>(gg.n), {});
  gg.component_of.assign(static_cast<std::size_t>(np), -1);
  const auto left = row_leftmost(gg);
  for (int t = 1; t <= gg.n; ++t) {
    const int p = left[static_cast<std::size_t>(t)];
    if (p < 0) continue;
    const int root = uf.find(p);
    // a component reached from two rows keeps the first row
    if (gg.component_of[static_cast<std::size_t>(p)] >= 0) continue;
    for (int q : by_root[root]) gg.component_of[static_cast<std::size_t>(q)] = t - 1;
    gg.components[static_cast<std::size_t>(t - 1)] = by_root[root];
  }
}

std::vector<std::string> gamma_invariant_violations(const GammaGraph& gg, const LinearizationPair& lp) {
  std::vector<std::string> out;
  const int np = static_cast<int>(gg.points.size());

  UnionFind uf(np);
  for (const auto& [a, b] : gg.edges) uf.unite(a, b);
  int count = 0;
  for (int p = 0; p < np; ++p) count += uf.find(p) == p ? 1 : 0;
  if (count != gg.n) out.emplace_back("component-count");

  for (int v = 0; v < gg.n; ++v) {
    if (gg.point_at(lp.gamma[static_cast<std::size_t>(v)], lp.rho[static_cast<std::size_t>(v)]) < 0) {
      out.emplace_back("diagonal-present");
      break;
    }
  }

  std::vector<int> first_rows;
  for (const auto& pt : gg.points) {
    if (pt.col == 1) first_rows.push_back(pt.row);
  }
  std::sort(first_rows.begin(), first_rows.end());
  for (std::size_t k = 0; k < first_rows.size(); ++k) {
    if (first_rows[k] != static_cast<int>(k) + 1) {
      out.emplace_back("first-column-contiguous");
      break;
    }
  }

  const auto left = row_leftmost(gg);
  std::map<int, int> hits;
  bool empty_row = false;
  for (int t = 1; t <= gg.n; ++t) {
    const int p = left[static_cast<std::size_t>(t)];
    if (p < 0) {
      empty_row = true;
      continue;
    }
    ++hits[uf.find(p)];
  }
  bool bijective = !empty_row && static_cast<int>(hits.size()) == count;
  for (const auto& [root, h] : hits) bijective = bijective && h == 1;
  if (!bijective) out.emplace_back("row-leftmost-bijective");

  // top-left point: highest row, then smallest column
  std::map<int, int> top_left;
  for (int p = 0; p < np; ++p) {
    const int root = uf.find(p);
    const auto it = top_left.find(root);
    if (it == top_left.end()) {
      top_left[root] = p;
      continue;
    }
    const auto& cur = gg.points[static_cast<std::size_t>(it->second)];
    const auto& pt = gg.points[static_cast<std::size_t>(p)];
    if (pt.row > cur.row || (pt.row == cur.row && pt.col < cur.col)) it->second = p;
  }
  for (const auto& [root, p] : top_left) {
    if (left[static_cast<std::size_t>(gg.points[static_cast<std::size_t>(p)].row)] != p) {
      out.emplace_back("top-left-is-row-leftmost");
      break;
    }
  }
  return out;
}

GammaGraph build_gamma_graph(const DirectedGraph& poset, const LinearizationPair& lp) {
  const int n = poset.size();
  ensure(static_cast<int>(lp.gamma.size()) == n && static_cast<int>(lp.rho.size()) == n,
         "linearizations cover every vertex");
  const auto reach = strict_reachability(poset);
  GammaGraph gg;
  gg.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j : members(reach[static_cast<std::size_t>(i)] | bit(i))) {
      gg.points.push_back({lp.gamma[static_cast<std::size_t>(i)], lp.rho[static_cast<std::size_t>(j)], i, j});
    }
  }
  std::sort(gg.points.begin(), gg.points.end(), [](const GammaPoint& a, const GammaPoint& b) {
    return std::pair(a.col, a.row) < std::pair(b.col, b.row);
  });
  for (std::size_t k = 1; k < gg.points.size(); ++k) {
    ensure(gg.points[k].col != gg.points[k - 1].col || gg.points[k].row != gg.points[k - 1].row,
           "linearizations are bijective so points are distinct");
  }

  // points are sorted by column then row, so the point below is the predecessor
  for (std::size_t k = 1; k < gg.points.size(); ++k) {
    const auto& p = gg.points[k];
    const auto& below = gg.points[k - 1];
    if (below.col != p.col) continue;
    int right = -1;
    for (int col = p.col + 1; col <= n && right < 0; ++col) right = gg.point_at(col, below.row);
    ensure(right >= 0, "the point below has a right-hand neighbour in its row");
    gg.edges.emplace_back(static_cast<int>(k), right);
  }

  assign_components(gg);
  const auto violations = gamma_invariant_violations(gg, lp);
  if (!violations.empty()) ensure(false, "Gamma graph property " + violations.front());
  return gg;
}

void sort_terms(TermList& terms) {
  // Variable positions: x_i -> 2i, y_j -> 2j+1. Among equal-degree monomials
  // the one holding the smallest variable of the symmetric difference is smaller.
  std::sort(terms.begin(), terms.end(), [](const Term& s, const Term& t) {
    if (s == t) return false;
    std::vector<int> a{2 * s.left, 2 * s.right + 1};
    std::vector<int> b{2 * t.left, 2 * t.right + 1};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    const int smallest = diff.front();
    return std::find(b.begin(), b.end(), smallest) != b.end();
  });
}

std::vector<TermList> component_generators(const GammaGraph& gg) {
  std::vector<TermList> out;
  for (const auto& comp : gg.components) {
    TermList terms;
    for (int p : comp) terms.push_back({gg.points[static_cast<std::size_t>(p)].i, gg.points[static_cast<std::size_t>(p)].j});
    sort_terms(terms);
    out.push_back(std::move(terms));
  }
  return out;
}

ExtraEdgePoset extra_edge_poset(const DirectedGraph& d, const BreveData& bd) {
  if (!is_transitively_closed(d)) fail(ErrorKind::NotUnmixed, "extra edge poset needs a transitively closed d_G");
  const auto above = strict_reachability(bd.digraph);
  ExtraEdgePoset p;
  for (const auto& [j, i] : d.arcs()) {
    if (bd.digraph.has_arc(j, i)) continue;
    ensure(contains(above[static_cast<std::size_t>(i)], j), "removed arc j->i has j above i in the breve order");
    p.elements.push_back({j, i});
  }
  std::sort(p.elements.begin(), p.elements.end());
  const std::size_t m = p.elements.size();
  p.below.assign(m, {});
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto& e = p.elements[a];
      const auto& f = p.elements[b];
      // e > f iff e.left strictly above f.left and e.right strictly above f.right
      if (contains(above[static_cast<std::size_t>(f.left)], e.left) &&
          contains(above[static_cast<std::size_t>(f.right)], e.right)) {
        p.below[a].push_back(static_cast<int>(b));
      }
    }
  }
  return p;
}

namespace {

// Kuhn matching from each element to an element below it.
std::vector<int> dilworth_matching(const ExtraEdgePoset& p) {
  const int m = static_cast<int>(p.elements.size());
  std::vector<int> match_down(static_cast<std::size_t>(m), -1);
  std::vector<int> match_up(static_cast<std::size_t>(m), -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int u) -> bool {
    for (int v : p.below[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      const int w = match_up[static_cast<std::size_t>(v)];
      if (w < 0 || self(self, w)) {
        match_down[static_cast<std::size_t>(u)] = v;
        match_up[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < m; ++u) {
    seen.assign(static_cast<std::size_t>(m), 0);
    augment(augment, u);
  }
  return match_down;
}

}  // namespace

int poset_width(const ExtraEdgePoset& p) {
  const auto down = dilworth_matching(p);
  const auto matched = std::count_if(down.begin(), down.end(), [](int v) { return v >= 0; });
  return static_cast<int>(p.elements.size()) - static_cast<int>(matched);
}

std::vector<std::vector<int>> chain_cover(const ExtraEdgePoset& p) {
  const auto down = dilworth_matching(p);
  const int m = static_cast<int>(p.elements.size());
  std::vector<char> has_parent(static_cast<std::size_t>(m), 0);
  for (int v : down) {
    if (v >= 0) has_parent[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<std::vector<int>> chains;
  for (int u = 0; u < m; ++u) {
    if (has_parent[static_cast<std::size_t>(u)]) continue;
    std::vector<int> chain;
    for (int v = u; v >= 0; v = down[static_cast<std::size_t>(v)]) chain.push_back(v);
    chains.push_back(std::move(chain));
  }
  return chains;
}

PlaneEmbedding refine_embedding(const AcyclicReduction& ar, const PlaneEmbedding& quotient_embedding) {
  const int t = ar.t();
  ensure(static_cast<int>(quotient_embedding.phi.size()) == t, "quotient embedding covers every component");
  const auto& q = quotient_embedding.phi;
  std::vector<int> by_a(static_cast<std::size_t>(t));
  std::iota(by_a.begin(), by_a.end(), 0);
  std::vector<int> by_b = by_a;
  std::sort(by_a.begin(), by_a.end(), [&](int x, int y) {
    return std::pair(q[static_cast<std::size_t>(x)].a, q[static_cast<std::size_t>(x)].b) <
           std::pair(q[static_cast<std::size_t>(y)].a, q[static_cast<std::size_t>(y)].b);
  });
  std::sort(by_b.begin(), by_b.end(), [&](int x, int y) {
    return std::pair(q[static_cast<std::size_t>(x)].b, q[static_cast<std::size_t>(x)].a) <
           std::pair(q[static_cast<std::size_t>(y)].b, q[static_cast<std::size_t>(y)].a);
  });
  std::vector<long long> off_a(static_cast<std::size_t>(t)), off_b(static_cast<std::size_t>(t));
  long long acc = 0;
  for (int a : by_a) {
    off_a[static_cast<std::size_t>(a)] = acc;
    acc += ar.zeta[static_cast<std::size_t>(a)];
  }
  acc = 0;
  for (int b : by_b) {
    off_b[static_cast<std::size_t>(b)] = acc;
    acc += ar.zeta[static_cast<std::size_t>(b)];
  }
  PlaneEmbedding e;
  e.phi.resize(ar.component_of.size());
  for (int a = 0; a < t; ++a) {
    long long k = 0;
    for (int v : members(ar.components[static_cast<std::size_t>(a)])) {
      e.phi[static_cast<std::size_t>(v)] = {off_a[static_cast<std::size_t>(a)] + k, off_b[static_cast<std::size_t>(a)] + k};
      ++k;
    }
  }
  return e;
}

GeneratorSet arank_generators(const MatchedBipartiteGraph& mg, const std::optional<PlaneEmbedding>& breve_embedding) {
  if (!is_unmixed(classify(mg))) fail(ErrorKind::NotUnmixed, "generators need an unmixed graph");
  const DirectedGraph d = build_digraph(mg);
  const BreveData bd = breve_subgraph(d);
  GeneratorSet gs;

  if (breve_embedding) {
    if (!validate_embedding(bd.digraph, *breve_embedding)) {
      fail(ErrorKind::InvalidEmbedding, "supplied embedding is not order-faithful for the breve poset");
    }
    gs.embedding = *breve_embedding;
  } else {
    const AcyclicReduction ar = acyclic_reduction(d);
    auto found = embed_poset_2d(ar.quotient);
    if (const auto* cert = std::get_if<NotTwoDimensional>(&found)) fail(ErrorKind::NotTwoDimensional, cert->reason);
    gs.embedding = refine_embedding(ar, std::get<PlaneEmbedding>(found));
    ensure(validate_embedding(bd.digraph, gs.embedding), "block-diagonal refinement embeds the breve poset");
  }

  gs.linearization = linearizations(bd.digraph, gs.embedding);
  ensure(satisfies_linearization_conditions(bd.digraph, gs.linearization), "linearization conditions");
  gs.gamma = build_gamma_graph(bd.digraph, gs.linearization);
  gs.g_list = component_generators(gs.gamma);

  gs.extra = extra_edge_poset(d, bd);
  gs.chains = chain_cover(gs.extra);
  for (const auto& chain : gs.chains) {
    TermList terms;
    for (int k : chain) terms.push_back(gs.extra.elements[static_cast<std::size_t>(k)]);
    sort_terms(terms);
    gs.h_list.push_back(std::move(terms));
  }
  gs.xi = static_cast<int>(gs.h_list.size());

  ensure(gs.xi == projective_dimension(mg) - mg.c(), "extra edge poset width equals projdim - height");
  ensure(gs.total_count() == projective_dimension(mg), "generator count equals projdim");
  std::vector<Term> seen;
  for (const auto* list : {&gs.g_list, &gs.h_list}) {
    for (const auto& terms : *list) seen.insert(seen.end(), terms.begin(), terms.end());
  }
  std::sort(seen.begin(), seen.end());
  ensure(seen == mg.edges(), "every edge appears in exactly one generator");
  return gs;
}

std::string format_terms(const MatchedBipartiteGraph& mg, const TermList& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += mg.x_labels()[static_cast<std::size_t>(t.left)] + "*" + mg.y_labels()[static_cast<std::size_t>(t.right)];
  }
  return out;
}

}  // namespace edgeideal
