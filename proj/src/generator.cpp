#include "edgeideal/generator.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgeideal/error.hpp"

namespace edgeideal {

std::uint64_t Rng::below(std::uint64_t n) {
  ensure(n > 0, "non-empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = 0;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

MatchedBipartiteGraph expand_poset(const DirectedGraph& dhat, const std::vector<int>& zeta) {
  if (!is_poset(dhat)) fail(ErrorKind::NotAPoset, "expansion needs an acyclic transitively closed digraph");
  const int t = dhat.size();
  if (static_cast<int>(zeta.size()) != t) fail(ErrorKind::BadWeights, "one weight per vertex");
  std::vector<int> offset(static_cast<std::size_t>(t) + 1, 0);
  for (int a = 0; a < t; ++a) {
    if (zeta[static_cast<std::size_t>(a)] < 1) fail(ErrorKind::BadWeights, "weights must be positive");
    offset[static_cast<std::size_t>(a) + 1] = offset[static_cast<std::size_t>(a)] + zeta[static_cast<std::size_t>(a)];
  }
  const int c = offset.back();
  if (c > kMaxVertices) fail(ErrorKind::TooLarge, "expanded digraph exceeds 64 vertices");
  DirectedGraph d(c);
  for (int a = 0; a < t; ++a) {
    const int lo = offset[static_cast<std::size_t>(a)];
    const int size = zeta[static_cast<std::size_t>(a)];
    for (int k = 0; k < size && size > 1; ++k) d.add_arc(lo + k, lo + (k + 1) % size);
  }
  for (const auto& [a, b] : dhat.arcs()) {
    for (int u = offset[static_cast<std::size_t>(a)]; u < offset[static_cast<std::size_t>(a) + 1]; ++u) {
      for (int v = offset[static_cast<std::size_t>(b)]; v < offset[static_cast<std::size_t>(b) + 1]; ++v) d.add_arc(u, v);
    }
  }
  return MatchedBipartiteGraph::from_digraph(transitive_closure(d));
}

std::vector<int> sharp_depth_weights(const DirectedGraph& dhat, VertexSet b, int c) {
  const int t = dhat.size();
  if (c < t) fail(ErrorKind::BadWeights, "c must be at least the number of poset vertices");
  if (!is_antichain(dhat, b)) fail(ErrorKind::BadWeights, "weighted set must be an antichain");
  if (b == 0 && c != t) fail(ErrorKind::BadWeights, "an empty antichain only fits c = t");
  std::vector<int> zeta(static_cast<std::size_t>(t), 1);
  if (b != 0) zeta[static_cast<std::size_t>(members(b).front())] += c - t;
  return zeta;
}

DirectedGraph random_poset(int n, double density, std::uint64_t seed) {
  Rng rng(seed);
  DirectedGraph d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.coin(density)) d.add_arc(i, j);
    }
  }
  return transitive_closure(d);
}

PosetWithEmbedding poset_from_permutation(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  PosetWithEmbedding out{DirectedGraph(n), {}};
  for (int i = 0; i < n; ++i) {
    out.embedding.phi.push_back({i, pi[static_cast<std::size_t>(i)]});
    for (int j = i + 1; j < n; ++j) {
      if (pi[static_cast<std::size_t>(i)] < pi[static_cast<std::size_t>(j)]) out.poset.add_arc(i, j);
    }
  }
  return out;
}

PosetWithEmbedding random_2d_poset(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  for (int k = n - 1; k > 0; --k) {
    const auto r = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(k) + 1));
    std::swap(pi[static_cast<std::size_t>(k)], pi[r]);
  }
  return poset_from_permutation(pi);
}

MatchedBipartiteGraph random_unmixed(int c, std::uint64_t seed, double density) {
  Rng rng(seed);
  const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(c)));
  // random composition of c into t positive parts
  std::vector<int> zeta(static_cast<std::size_t>(t), 1);
  for (int extra = c - t; extra > 0; --extra) ++zeta[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(t)))];
  const DirectedGraph dhat = random_poset(t, density, rng.next());
  return expand_poset(dhat, zeta);
}

SquareFreeMonomialIdeal random_squarefree_ideal(int nvars, Rng& rng) {
  std::vector<std::string> names;
  for (int v = 0; v < nvars; ++v) names.push_back("z" + std::to_string(v + 1));
  const int count = 1 + static_cast<int>(rng.below(6));
  const int max_size = std::min(4, nvars);
  std::vector<VertexSet> gens;
  for (int k = 0; k < count; ++k) {
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size)));
    VertexSet g = 0;
    while (popcount(g) < size) g |= bit(static_cast<int>(rng.below(static_cast<std::uint64_t>(nvars))));
    gens.push_back(g);
  }
  return {std::move(names), std::move(gens)};
}

namespace {

template <class Visit>
void for_each_closed_digraph(int c, Visit visit) {
  if (c > kMaxEnumerationSize) fail(ErrorKind::TooLarge, "enumeration is limited to c <= 4");
  std::vector<Arc> slots;
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    DirectedGraph d(c);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask & (std::uint32_t{1} << k)) d.add_arc(slots[k].first, slots[k].second);
    }
    if (is_transitively_closed(d)) visit(d);
  }
}

}  // namespace

std::vector<MatchedBipartiteGraph> enumerate_unmixed(int c) {
  std::vector<MatchedBipartiteGraph> out;
  for_each_closed_digraph(c, [&](const DirectedGraph& d) { out.push_back(MatchedBipartiteGraph::from_digraph(d)); });
  return out;
}

std::vector<DirectedGraph> enumerate_posets(int t) {
  std::vector<DirectedGraph> out;
  for_each_closed_digraph(t, [&](const DirectedGraph& d) {
    if (is_acyclic(d)) out.push_back(d);
  });
  return out;
}

}  // namespace edgeideal
