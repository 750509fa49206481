#include "edgeideal/bipartite_graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "edgeideal/clique.hpp"
#include "edgeideal/error.hpp"

namespace edgeideal {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string> sorted_unique_labels(std::vector<std::string> labels, const char* side) {
  std::stable_sort(labels.begin(), labels.end(),
                   [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] == labels[i - 1]) fail(ErrorKind::DuplicateLabel, std::string(side) + " label \"" + labels[i] + "\"");
  }
  return labels;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      // strip leading zeros, then compare by length and digits
      std::size_t is = i;
      std::size_t js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js;
      for (std::size_t k = 0; k < ie - is; ++k) {
        if (a[is + k] != b[js + k]) return a[is + k] < b[js + k];
      }
      // equal value; shorter run (fewer leading zeros) first
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

BipartiteGraph BipartiteGraph::from_labels(std::vector<std::string> left, std::vector<std::string> right,
                                           const std::vector<std::pair<std::string, std::string>>& edges) {
  BipartiteGraph g;
  g.left_ = sorted_unique_labels(std::move(left), "left");
  g.right_ = sorted_unique_labels(std::move(right), "right");
  if (g.left_.size() > kMaxVertices || g.right_.size() > kMaxVertices) {
    fail(ErrorKind::TooLarge, "each side is limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  {
    std::set<std::string> left_set(g.left_.begin(), g.left_.end());
    for (const auto& r : g.right_) {
      if (left_set.count(r) != 0) fail(ErrorKind::DuplicateLabel, "\"" + r + "\" appears on both sides");
    }
  }
  if (edges.empty()) fail(ErrorKind::EmptyGraph, "graph has no edges");

  g.left_adj_.assign(g.left_.size(), 0);
  g.right_adj_.assign(g.right_.size(), 0);
  for (const auto& [a, b] : edges) {
    int l = g.left_index(a);
    int r = g.right_index(b);
    if (l < 0 || r < 0) {
      // accept edges written right-to-left
      int l2 = g.left_index(b);
      int r2 = g.right_index(a);
      if (l2 >= 0 && r2 >= 0) {
        l = l2;
        r = r2;
      }
    }
    if (l < 0 || r < 0) {
      auto known = [&](const std::string& s) { return g.left_index(s) >= 0 || g.right_index(s) >= 0; };
      const std::string where = " in edge [" + a + "," + b + "]";
      if (!known(a)) fail(ErrorKind::UnknownLabel, "\"" + a + "\"" + where);
      if (!known(b)) fail(ErrorKind::UnknownLabel, "\"" + b + "\"" + where);
      fail(ErrorKind::Parse, "both endpoints lie on the same side" + where);
    }
    if (g.has_edge(l, r)) fail(ErrorKind::DuplicateEdge, "[" + a + "," + b + "]");
    g.left_adj_[static_cast<std::size_t>(l)] |= bit(r);
    g.right_adj_[static_cast<std::size_t>(r)] |= bit(l);
    g.edges_.push_back({l, r});
  }
  std::sort(g.edges_.begin(), g.edges_.end());

  for (int l = 0; l < g.left_count(); ++l) {
    if (g.left_neighbors(l) == 0) fail(ErrorKind::IsolatedVertex, "\"" + g.left_[static_cast<std::size_t>(l)] + "\"");
  }
  for (int r = 0; r < g.right_count(); ++r) {
    if (g.right_neighbors(r) == 0) fail(ErrorKind::IsolatedVertex, "\"" + g.right_[static_cast<std::size_t>(r)] + "\"");
  }
  return g;
}

int BipartiteGraph::left_index(std::string_view label) const {
  auto it = std::find(left_.begin(), left_.end(), label);
  return it == left_.end() ? -1 : static_cast<int>(it - left_.begin());
}

int BipartiteGraph::right_index(std::string_view label) const {
  auto it = std::find(right_.begin(), right_.end(), label);
  return it == right_.end() ? -1 : static_cast<int>(it - right_.begin());
}

BipartiteGraph parse_graph(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, e.what());
  }
  if (!j.is_object() || !j.contains("left") || !j.contains("right") || !j.contains("edges")) {
    fail(ErrorKind::Parse, "expected an object with \"left\", \"right\" and \"edges\"");
  }
  try {
    auto left = j.at("left").get<std::vector<std::string>>();
    auto right = j.at("right").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::Parse, "each edge must be a pair of labels");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return BipartiteGraph::from_labels(std::move(left), std::move(right), edges);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

std::string serialize_graph(const BipartiteGraph& g) {
  nlohmann::ordered_json j;
  j["left"] = g.left_labels();
  j["right"] = g.right_labels();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({g.left_labels()[static_cast<std::size_t>(e.left)], g.right_labels()[static_cast<std::size_t>(e.right)]});
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

bool is_vertex_cover(const BipartiteGraph& g, const VertexCover& c) {
  for (int l = 0; l < g.left_count(); ++l) {
    if (!contains(c.left, l) && (g.left_neighbors(l) & ~c.right) != 0) return false;
  }
  return true;
}

bool is_minimal_vertex_cover(const BipartiteGraph& g, const VertexCover& c) {
  if (!is_vertex_cover(g, c)) return false;
  // a member is redundant iff all its neighbours are already in the cover
  for (int l : members(c.left)) {
    if ((g.left_neighbors(l) & ~c.right) == 0) return false;
  }
  for (int r : members(c.right)) {
    if ((g.right_neighbors(r) & ~c.left) == 0) return false;
  }
  return true;
}

CoverEnumeration minimal_vertex_covers(const BipartiteGraph& g, int max_vertices) {
  const int nl = g.left_count();
  const int n = g.vertex_count();
  if (n > max_vertices || n > 62) {
    fail(ErrorKind::TooLarge, "cover enumeration over " + std::to_string(n) + " vertices exceeds cap " + std::to_string(max_vertices));
  }
  CoverEnumeration out;
  out.height = n;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    VertexCover c{mask & full_set(nl), mask >> nl};
    if (is_minimal_vertex_cover(g, c)) {
      out.covers.push_back(c);
      out.height = std::min(out.height, c.size());
    }
  }
  auto key = [nl](const VertexCover& c) {
    std::vector<int> v = members(c.left);
    for (int r : members(c.right)) v.push_back(nl + r);
    return v;
  };
  std::sort(out.covers.begin(), out.covers.end(),
            [&](const VertexCover& a, const VertexCover& b) { return key(a) < key(b); });
  return out;
}

bool is_unmixed_oracle(const BipartiteGraph& g, int max_vertices) {
  const auto e = minimal_vertex_covers(g, max_vertices);
  return std::all_of(e.covers.begin(), e.covers.end(), [&](const VertexCover& c) { return c.size() == e.height; });
}

namespace {

bool disconnected_pair(const BipartiteGraph& g, const Edge& a, const Edge& b) {
  return a.left != b.left && a.right != b.right && !g.has_edge(a.left, b.right) && !g.has_edge(b.left, a.right);
}

}  // namespace

bool is_pairwise_disconnected(const BipartiteGraph& g, const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!g.has_edge(edges[i].left, edges[i].right)) return false;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!disconnected_pair(g, edges[i], edges[j])) return false;
    }
  }
  return true;
}

DisconnectedEdgeSet max_pairwise_disconnected(const BipartiteGraph& g, int max_edges) {
  const int m = g.edge_count();
  if (m > max_edges || m > kMaxVertices) {
    fail(ErrorKind::TooLarge, "pairwise-disconnected search over " + std::to_string(m) + " edges exceeds cap " + std::to_string(max_edges));
  }
  const auto& es = g.edges();
  std::vector<VertexSet> compatible(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b && disconnected_pair(g, es[static_cast<std::size_t>(a)], es[static_cast<std::size_t>(b)])) {
        compatible[static_cast<std::size_t>(a)] |= bit(b);
      }
    }
  }
  DisconnectedEdgeSet out;
  for (int e : members(max_clique(compatible))) out.edges.push_back(es[static_cast<std::size_t>(e)]);
  return out;
}

}  // namespace edgeideal
