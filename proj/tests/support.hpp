#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edgeideal/bipartite_graph.hpp"
#include "edgeideal/digraph.hpp"
#include "edgeideal/embedding.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/matching.hpp"

namespace support {

using namespace edgeideal;

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(EDGEIDEAL_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline BipartiteGraph load_graph(const std::string& name) { return parse_graph(read_fixture(name)); }

inline MatchedBipartiteGraph load_matched(const std::string& name) {
  auto mg = find_perfect_matching(load_graph(name));
  if (!mg) throw std::runtime_error(name + " has no perfect matching");
  return *mg;
}

// Seven element poset given by its cover relations (upper, lower), 1-based.
inline DirectedGraph cm_poset7() {
  DirectedGraph cov(7);
  const std::vector<std::pair<int, int>> covers{{3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 2},
                                                {6, 3}, {6, 4}, {7, 4}, {7, 5}};
  for (auto [hi, lo] : covers) cov.add_arc(lo - 1, hi - 1);
  return transitive_closure(cov);
}

inline PlaneEmbedding cm_poset7_embedding() {
  return PlaneEmbedding{{{0, 2}, {1, 0}, {2, 5}, {3, 3}, {5, 1}, {4, 6}, {6, 4}}};
}

inline DirectedGraph chain(int n) {
  DirectedGraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.add_arc(i, j);
  return d;
}

inline std::optional<ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

// Brute force: largest set of pairwise incomparable vertices.
inline int brute_antichain(const DirectedGraph& d) {
  const auto reach = strict_reachability(d);
  const int n = d.size();
  int best = 0;
  for (VertexSet s = 0; s < bit(n); ++s) {
    bool ok = true;
    for (int i : members(s)) ok = ok && (reach[static_cast<std::size_t>(i)] & s & ~bit(i)) == 0;
    if (ok) best = std::max(best, popcount(s));
  }
  return best;
}

// Brute force: all minimal vertex covers, independent of the library routine.
inline std::vector<VertexCover> brute_covers(const BipartiteGraph& g) {
  const int l = g.left_count();
  const int n = g.vertex_count();
  auto covers = [&](VertexSet s) {
    for (const Edge& e : g.edges())
      if (!contains(s, e.left) && !contains(s, l + e.right)) return false;
    return true;
  };
  std::vector<VertexCover> out;
  for (VertexSet s = 0; s < bit(n); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (int v : members(s)) minimal = minimal && !covers(s & ~bit(v));
    if (minimal) out.push_back({s & full_set(l), s >> l});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace support
