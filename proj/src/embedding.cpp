#include "edgeideal/embedding.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

#include "edgeideal/error.hpp"

namespace edgeideal {

bool validate_embedding(const DirectedGraph& poset, const PlaneEmbedding& e) {
  const int n = poset.size();
  if (static_cast<int>(e.phi.size()) != n) return false;
  const auto reach = strict_reachability(poset);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool above = contains(reach[static_cast<std::size_t>(i)], j);
      if (above != e.phi[static_cast<std::size_t>(j)].dominates(e.phi[static_cast<std::size_t>(i)])) return false;
    }
  }
  return true;
}

PlaneEmbedding canonicalize(const PlaneEmbedding& e) {
  const std::size_t n = e.phi.size();
  std::vector<std::size_t> by_first(n);
  std::iota(by_first.begin(), by_first.end(), std::size_t{0});
  std::vector<std::size_t> by_second = by_first;
  const auto& phi = e.phi;
  std::sort(by_first.begin(), by_first.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(phi[x].a, phi[x].b) < std::pair(phi[y].a, phi[y].b);
  });
  std::sort(by_second.begin(), by_second.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(phi[x].b, phi[x].a) < std::pair(phi[y].b, phi[y].a);
  });
  for (std::size_t k = 1; k < n; ++k) {
    if (phi[by_first[k]] == phi[by_first[k - 1]]) {
      fail(ErrorKind::CoordinateTie, "vertices " + std::to_string(by_first[k - 1]) + " and " + std::to_string(by_first[k]) + " share a point");
    }
  }
  PlaneEmbedding out;
  out.phi.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.phi[by_first[k]].a = static_cast<long long>(k);
    out.phi[by_second[k]].b = static_cast<long long>(k);
  }
  return out;
}

namespace {

// Orientation search on the incomparability graph of a poset. dir(u, v) is
// +1 for u->v, -1 for v->u, 0 while unset.
class OrientationSearch {
 public:
  OrientationSearch(int n, std::vector<VertexSet> incomparable)
      : n_(n), h_(std::move(incomparable)), dir_(static_cast<std::size_t>(n * n), 0) {}

  // Returns true and leaves a full transitive orientation in dir_.
  bool solve(std::pair<int, int>* failed_edge) { return search(failed_edge, true); }

  bool oriented(int u, int v) const { return at(u, v) == 1; }

 private:
  std::int8_t at(int u, int v) const { return dir_[static_cast<std::size_t>(u * n_ + v)]; }

  bool adjacent(int u, int v) const { return contains(h_[static_cast<std::size_t>(u)], v); }

  // Sets u->v and propagates forced orientations; false on contradiction.
  bool orient(int u, int v) {
    std::vector<std::pair<int, int>> queue{{u, v}};
    while (!queue.empty()) {
      const auto [a, b] = queue.back();
      queue.pop_back();
      const std::int8_t cur = at(a, b);
      if (cur == 1) continue;
      if (cur == -1) return false;
      dir_[static_cast<std::size_t>(a * n_ + b)] = 1;
      dir_[static_cast<std::size_t>(b * n_ + a)] = -1;
      for (int w = 0; w < n_; ++w) {
        if (w == a || w == b) continue;
        // a->b forces a->w for every neighbour w of a not adjacent to b,
        // and w->b for every neighbour w of b not adjacent to a
        if (adjacent(a, w) && !adjacent(b, w)) queue.emplace_back(a, w);
        if (adjacent(b, w) && !adjacent(a, w)) queue.emplace_back(w, b);
        // transitivity through already oriented arcs
        if (at(b, w) == 1) {
          if (!adjacent(a, w)) return false;
          queue.emplace_back(a, w);
        }
        if (at(w, a) == 1) {
          if (!adjacent(w, b)) return false;
          queue.emplace_back(w, b);
        }
      }
    }
    return true;
  }

  std::optional<std::pair<int, int>> first_unset() const {
    for (int u = 0; u < n_; ++u) {
      for (int v : members(h_[static_cast<std::size_t>(u)])) {
        if (v > u && at(u, v) == 0) return std::pair{u, v};
      }
    }
    return std::nullopt;
  }

  bool search(std::pair<int, int>* failed_edge, bool root) {
    const auto edge = first_unset();
    if (!edge) return true;
    const auto saved = dir_;
    if (orient(edge->first, edge->second) && search(failed_edge, false)) return true;
    dir_ = saved;
    if (orient(edge->second, edge->first) && search(failed_edge, false)) return true;
    dir_ = saved;
    if (root && failed_edge != nullptr) *failed_edge = *edge;
    return false;
  }

  int n_;
  std::vector<VertexSet> h_;
  std::vector<std::int8_t> dir_;
};

// Ranks of a strict total order given by less(i, j); nullopt if not total.
template <class Less>
std::optional<std::vector<long long>> total_order_ranks(int n, Less less) {
  std::vector<long long> rank(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (less(i, j) == less(j, i)) return std::nullopt;
      if (less(j, i)) ++rank[static_cast<std::size_t>(i)];
    }
  }
  std::vector<long long> sorted = rank;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (sorted[static_cast<std::size_t>(k)] != k) return std::nullopt;
  }
  return rank;
}

}  // namespace

std::variant<PlaneEmbedding, NotTwoDimensional> embed_poset_2d(const DirectedGraph& poset, int cap) {
  if (!is_poset(poset)) fail(ErrorKind::NotAPoset, "input must be acyclic and transitively closed");
  const int n = poset.size();
  if (n > cap) fail(ErrorKind::TooLarge, "embedding search over " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));

  std::vector<VertexSet> incomparable(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    incomparable[static_cast<std::size_t>(i)] = full_set(n) & ~bit(i) & ~poset.out(i) & ~poset.in(i);
  }
  OrientationSearch search(n, incomparable);
  std::pair<int, int> failed{-1, -1};
  if (!search.solve(&failed)) {
    return NotTwoDimensional{failed, "incomparability graph has no transitive orientation: both orientations of {" +
                                         std::to_string(failed.first + 1) + "," + std::to_string(failed.second + 1) +
                                         "} are contradictory"};
  }
  auto first = total_order_ranks(n, [&](int i, int j) { return poset.has_arc(i, j) || search.oriented(i, j); });
  auto second = total_order_ranks(n, [&](int i, int j) { return poset.has_arc(i, j) || search.oriented(j, i); });
  ensure(first && second, "poset plus a transitive orientation of its incomparability graph is a linear order");
  PlaneEmbedding e;
  for (int i = 0; i < n; ++i) e.phi.push_back({(*first)[static_cast<std::size_t>(i)], (*second)[static_cast<std::size_t>(i)]});
  ensure(validate_embedding(poset, e), "constructed embedding is order-faithful");
  return e;
}

}  // namespace edgeideal
