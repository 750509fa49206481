#include "edgeideal/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "edgeideal/error.hpp"

namespace edgeideal {

MatchedBipartiteGraph::MatchedBipartiteGraph(int c, std::vector<Edge> edges, std::vector<std::string> x_labels,
                                             std::vector<std::string> y_labels, std::vector<int> y_origin)
    : c_(c),
      edges_(std::move(edges)),
      adj_(static_cast<std::size_t>(c), 0),
      x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)),
      y_origin_(std::move(y_origin)) {
  if (c <= 0 || c > kMaxVertices) fail(ErrorKind::TooLarge, "matched graph with c = " + std::to_string(c));
  if (x_labels_.size() != static_cast<std::size_t>(c) || y_labels_.size() != static_cast<std::size_t>(c)) {
    fail(ErrorKind::InvariantViolation, "label count differs from c");
  }
  if (y_origin_.empty()) {
    for (int i = 0; i < c; ++i) y_origin_.push_back(i);
  }
  for (const Edge& e : edges_) {
    if (e.left < 0 || e.right < 0 || e.left >= c || e.right >= c) fail(ErrorKind::InvariantViolation, "edge index out of range");
    if (contains(adj_[static_cast<std::size_t>(e.left)], e.right)) fail(ErrorKind::DuplicateEdge, "matched edge");
    adj_[static_cast<std::size_t>(e.left)] |= bit(e.right);
  }
  for (int i = 0; i < c; ++i) {
    if (!has_edge(i, i)) fail(ErrorKind::InvariantViolation, "diagonal edge x" + std::to_string(i + 1) + "y" + std::to_string(i + 1) + " missing");
  }
  std::sort(edges_.begin(), edges_.end());
}

MatchedBipartiteGraph MatchedBipartiteGraph::from_digraph(const DirectedGraph& d, std::vector<std::string> x_labels,
                                                          std::vector<std::string> y_labels) {
  const int c = d.size();
  if (x_labels.empty()) {
    for (int i = 1; i <= c; ++i) x_labels.push_back("x" + std::to_string(i));
  }
  if (y_labels.empty()) {
    for (int i = 1; i <= c; ++i) y_labels.push_back("y" + std::to_string(i));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < c; ++i) edges.push_back({i, i});
  for (const auto& [a, b] : d.arcs()) edges.push_back({a, b});
  return MatchedBipartiteGraph(c, std::move(edges), std::move(x_labels), std::move(y_labels));
}

BipartiteGraph MatchedBipartiteGraph::to_graph() const {
  std::vector<std::pair<std::string, std::string>> named;
  for (const Edge& e : edges_) {
    named.emplace_back(x_labels_[static_cast<std::size_t>(e.left)], y_labels_[static_cast<std::size_t>(e.right)]);
  }
  return BipartiteGraph::from_labels(x_labels_, y_labels_, named);
}

namespace {

// Hopcroft-Karp with vertices scanned in index order.
class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        match_left_(static_cast<std::size_t>(g.left_count()), -1),
        match_right_(static_cast<std::size_t>(g.right_count()), -1),
        dist_(static_cast<std::size_t>(g.left_count()), 0) {}

  void seed_diagonal() {
    for (int i = 0; i < std::min(g_.left_count(), g_.right_count()); ++i) {
      if (g_.has_edge(i, i)) {
        match_left_[static_cast<std::size_t>(i)] = i;
        match_right_[static_cast<std::size_t>(i)] = i;
      }
    }
  }

  int run() {
    while (layer()) {
      for (int u = 0; u < g_.left_count(); ++u) {
        if (match_left_[static_cast<std::size_t>(u)] == -1) augment(u);
      }
    }
    return static_cast<int>(std::count_if(match_left_.begin(), match_left_.end(), [](int r) { return r >= 0; }));
  }

  const std::vector<int>& match_left() const { return match_left_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool layer() {
    std::queue<int> q;
    for (int u = 0; u < g_.left_count(); ++u) {
      if (match_left_[static_cast<std::size_t>(u)] == -1) {
        dist_[static_cast<std::size_t>(u)] = 0;
        q.push(u);
      } else {
        dist_[static_cast<std::size_t>(u)] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int r : members(g_.left_neighbors(u))) {
        const int w = match_right_[static_cast<std::size_t>(r)];
        if (w == -1) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(w)] == kInf) {
          dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool augment(int u) {
    for (int r : members(g_.left_neighbors(u))) {
      const int w = match_right_[static_cast<std::size_t>(r)];
      if (w == -1 || (dist_[static_cast<std::size_t>(w)] == dist_[static_cast<std::size_t>(u)] + 1 && augment(w))) {
        match_left_[static_cast<std::size_t>(u)] = r;
        match_right_[static_cast<std::size_t>(r)] = u;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(u)] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

}  // namespace

std::optional<MatchedBipartiteGraph> find_perfect_matching(const BipartiteGraph& g) {
  if (g.left_count() != g.right_count()) return std::nullopt;
  HopcroftKarp hk(g);
  hk.seed_diagonal();
  if (hk.run() != g.left_count()) return std::nullopt;

  const int c = g.left_count();
  const auto& match = hk.match_left();
  std::vector<int> y_index(static_cast<std::size_t>(c));  // original right index -> new y index
  std::vector<std::string> y_labels(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) {
    y_index[static_cast<std::size_t>(match[static_cast<std::size_t>(i)])] = i;
    y_labels[static_cast<std::size_t>(i)] = g.right_labels()[static_cast<std::size_t>(match[static_cast<std::size_t>(i)])];
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.left, y_index[static_cast<std::size_t>(e.right)]});
  return MatchedBipartiteGraph(c, std::move(edges), g.left_labels(), std::move(y_labels), match);
}

int matching_number(const BipartiteGraph& g) {
  HopcroftKarp hk(g);
  return hk.run();
}

DirectedGraph build_digraph(const MatchedBipartiteGraph& mg) {
  DirectedGraph d(mg.c());
  for (const Edge& e : mg.edges()) {
    if (e.left != e.right) d.add_arc(e.left, e.right);
  }
  return d;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::NoPerfectMatching: return "NoPerfectMatching";
    case Classification::PerfectlyMatchedOnly: return "PerfectlyMatchedOnly";
    case Classification::Unmixed: return "Unmixed";
    case Classification::CohenMacaulay: return "CohenMacaulay";
  }
  return "?";
}

Classification classify(const MatchedBipartiteGraph& mg) {
  const DirectedGraph d = build_digraph(mg);
  if (!is_transitively_closed(d)) return Classification::PerfectlyMatchedOnly;
  return is_acyclic(d) ? Classification::CohenMacaulay : Classification::Unmixed;
}

Classification classify(const BipartiteGraph& g) {
  const auto mg = find_perfect_matching(g);
  if (!mg) return Classification::NoPerfectMatching;
  return classify(*mg);
}

int AcyclicReduction::weight(VertexSet tau) const {
  int w = 0;
  for (int a : members(tau)) w += zeta[static_cast<std::size_t>(a)];
  return w;
}

AcyclicReduction acyclic_reduction(const DirectedGraph& d) {
  const int n = d.size();
  const auto reach = strict_reachability(d);
  std::vector<VertexSet> coreach(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j : members(reach[static_cast<std::size_t>(i)])) coreach[static_cast<std::size_t>(j)] |= bit(i);
  }

  // strong components, discovered in order of smallest member
  std::vector<VertexSet> comps;
  VertexSet assigned = 0;
  for (int i = 0; i < n; ++i) {
    if (contains(assigned, i)) continue;
    const VertexSet z = bit(i) | (reach[static_cast<std::size_t>(i)] & coreach[static_cast<std::size_t>(i)]);
    comps.push_back(z);
    assigned |= z;
  }
  const int t = static_cast<int>(comps.size());
  // successor relation between components
  std::vector<VertexSet> succ(static_cast<std::size_t>(t), 0);
  for (int a = 0; a < t; ++a) {
    VertexSet r = 0;
    for (int i : members(comps[static_cast<std::size_t>(a)])) r |= reach[static_cast<std::size_t>(i)];
    for (int b = 0; b < t; ++b) {
      if (b != a && (r & comps[static_cast<std::size_t>(b)]) != 0) succ[static_cast<std::size_t>(a)] |= bit(b);
    }
  }
  // Kahn's algorithm; the ready set is ordered by smallest member, which is
  // the discovery index in `comps`
  std::vector<int> indegree(static_cast<std::size_t>(t), 0);
  for (int a = 0; a < t; ++a) {
    for (int b : members(succ[static_cast<std::size_t>(a)])) ++indegree[static_cast<std::size_t>(b)];
  }
  std::set<int> ready;
  for (int a = 0; a < t; ++a) {
    if (indegree[static_cast<std::size_t>(a)] == 0) ready.insert(a);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int a = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(a);
    for (int b : members(succ[static_cast<std::size_t>(a)])) {
      if (--indegree[static_cast<std::size_t>(b)] == 0) ready.insert(b);
    }
  }
  ensure(static_cast<int>(order.size()) == t, "component quotient is acyclic");

  std::vector<int> position(static_cast<std::size_t>(t));
  for (int k = 0; k < t; ++k) position[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

  AcyclicReduction ar;
  ar.quotient = DirectedGraph(t);
  ar.component_of.assign(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < t; ++k) {
    const VertexSet z = comps[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    ar.components.push_back(z);
    ar.zeta.push_back(popcount(z));
    for (int i : members(z)) ar.component_of[static_cast<std::size_t>(i)] = k;
  }
  for (int a = 0; a < t; ++a) {
    for (int b : members(succ[static_cast<std::size_t>(a)])) {
      ar.quotient.add_arc(position[static_cast<std::size_t>(a)], position[static_cast<std::size_t>(b)]);
    }
  }
  return ar;
}

MatchedBipartiteGraph reduction_graph(const AcyclicReduction& ar) {
  std::vector<std::string> u;
  std::vector<std::string> v;
  for (int a = 1; a <= ar.t(); ++a) {
    u.push_back("u" + std::to_string(a));
    v.push_back("v" + std::to_string(a));
  }
  return MatchedBipartiteGraph::from_digraph(ar.quotient, std::move(u), std::move(v));
}

std::vector<AssociatedPrime> associated_primes(const MatchedBipartiteGraph& mg, int max_components) {
  if (!is_unmixed(classify(mg))) fail(ErrorKind::NotUnmixed, "associated primes via antichains need an unmixed graph");
  const DirectedGraph d = build_digraph(mg);
  const AcyclicReduction ar = acyclic_reduction(d);
  if (ar.t() > max_components) {
    fail(ErrorKind::TooLarge, "antichain enumeration over " + std::to_string(ar.t()) + " components exceeds cap " + std::to_string(max_components));
  }
  const auto qreach = strict_reachability(ar.quotient);
  const VertexSet everything = full_set(mg.c());
  std::vector<AssociatedPrime> primes;
  for_each_antichain(comparability_masks(ar.quotient), [&](VertexSet a) {
    VertexSet omega = 0;
    for (int b : members(up_set(qreach, a))) omega |= ar.components[static_cast<std::size_t>(b)];
    primes.push_back({everything & ~omega, omega});
  });
  std::sort(primes.begin(), primes.end());
  return primes;
}

VertexCover prime_as_cover(const MatchedBipartiteGraph& mg, const AssociatedPrime& p) {
  VertexCover c;
  c.left = p.x;
  for (int i : members(p.y)) c.right |= bit(mg.y_origin(i));
  return c;
}

}  // namespace edgeideal
