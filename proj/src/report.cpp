#include "edgeideal/report.hpp"

#include <sstream>

#include "edgeideal/error.hpp"

namespace edgeideal {

Json digraph_json(const DirectedGraph& d) {
  Json arcs = Json::array();
  for (const auto& [i, j] : d.arcs()) arcs.push_back({i + 1, j + 1});
  return Json{{"vertices", d.size()}, {"arcs", std::move(arcs)}};
}

namespace {

Json index_list(VertexSet s) {
  Json out = Json::array();
  for (int v : members(s)) out.push_back(v + 1);
  return out;
}

}  // namespace

Json reduction_json(const AcyclicReduction& ar) {
  Json comps = Json::array();
  for (VertexSet z : ar.components) comps.push_back(index_list(z));
  return Json{{"t", ar.t()}, {"components", std::move(comps)}, {"zeta", ar.zeta}, {"quotient", digraph_json(ar.quotient)}};
}

Json classify_json(const BipartiteGraph& g) {
  Json j{{"schema", kSchemaVersion}, {"command", "classify"}};
  j["classification"] = to_string(classify(g));
  j["height"] = matching_number(g);
  const auto mg = find_perfect_matching(g);
  if (!mg) return j;
  j["c"] = mg->c();
  Json matching = Json::array();
  for (int i = 0; i < mg->c(); ++i) {
    matching.push_back({mg->x_labels()[static_cast<std::size_t>(i)], mg->y_labels()[static_cast<std::size_t>(i)]});
  }
  j["matching"] = std::move(matching);
  const DirectedGraph d = build_digraph(*mg);
  j["digraph"] = digraph_json(d);
  j["transitively_closed"] = is_transitively_closed(d);
  j["acyclic"] = is_acyclic(d);
  j["reduction"] = reduction_json(acyclic_reduction(d));
  return j;
}

Json invariants_json(const BipartiteGraph& g, const InvariantsReport& rep,
                     const std::optional<OracleInvariants>& oracle, const std::optional<Field>& field) {
  Json j{{"schema", kSchemaVersion}, {"command", "invariants"}};
  j["classification"] = to_string(rep.classification);
  j["height"] = rep.height;
  if (rep.c) j["c"] = *rep.c;
  if (rep.regularity) {
    j["regularity"] = *rep.regularity;
    j["regularity_witness"] = index_list(rep.regularity_witness);
    j["depth"] = *rep.depth;
    j["depth_witness"] = index_list(rep.depth_witness);
    j["projdim"] = *rep.projdim;
    j["kappa"] = *rep.kappa;
    j["scc_count"] = *rep.scc_count;
  }
  if (rep.r_lower) {
    j["r"] = *rep.r_lower;
    Json witness = Json::array();
    for (const Edge& e : rep.r_witness) {
      witness.push_back({g.left_labels()[static_cast<std::size_t>(e.left)], g.right_labels()[static_cast<std::size_t>(e.right)]});
    }
    j["r_witness"] = std::move(witness);
  }
  if (oracle) {
    j["oracle"] = Json{{"field", to_string(*field)},
                       {"regularity", oracle->regularity},
                       {"projdim", oracle->projdim},
                       {"depth", oracle->depth}};
  }
  return j;
}

Json primes_json(const MatchedBipartiteGraph& mg, const std::vector<AssociatedPrime>& primes) {
  Json list = Json::array();
  for (const auto& p : primes) {
    Json labels = Json::array();
    for (int i : members(p.x)) labels.push_back(mg.x_labels()[static_cast<std::size_t>(i)]);
    for (int i : members(p.y)) labels.push_back(mg.y_labels()[static_cast<std::size_t>(i)]);
    list.push_back(std::move(labels));
  }
  return Json{{"schema", kSchemaVersion}, {"command", "primes"}, {"count", primes.size()}, {"primes", std::move(list)}};
}

Json embedding_json(const PlaneEmbedding& e) {
  Json j = Json::object();
  for (std::size_t v = 0; v < e.phi.size(); ++v) j[std::to_string(v + 1)] = {e.phi[v].a, e.phi[v].b};
  return j;
}

PlaneEmbedding parse_embedding(const Json& j, const MatchedBipartiteGraph& mg) {
  if (!j.is_object()) fail(ErrorKind::Parse, "embedding must be an object mapping vertices to [a, b]");
  PlaneEmbedding e;
  e.phi.resize(static_cast<std::size_t>(mg.c()));
  std::vector<char> seen(static_cast<std::size_t>(mg.c()), 0);
  for (const auto& [key, value] : j.items()) {
    int v = -1;
    for (int i = 0; i < mg.c(); ++i) {
      if (key == std::to_string(i + 1) || key == mg.x_labels()[static_cast<std::size_t>(i)]) v = i;
    }
    if (v < 0) fail(ErrorKind::UnknownLabel, "embedding key '" + key + "'");
    if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() || !value[1].is_number_integer()) {
      fail(ErrorKind::Parse, "embedding value for '" + key + "' must be [a, b]");
    }
    e.phi[static_cast<std::size_t>(v)] = {value[0].get<long long>(), value[1].get<long long>()};
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int i = 0; i < mg.c(); ++i) {
    if (!seen[static_cast<std::size_t>(i)]) fail(ErrorKind::Parse, "embedding misses vertex " + std::to_string(i + 1));
  }
  return e;
}

Json generators_json(const MatchedBipartiteGraph& mg, const GeneratorSet& gs) {
  Json j{{"schema", kSchemaVersion}, {"command", "stci"}};
  j["count"] = gs.total_count();
  j["xi"] = gs.xi;
  Json g = Json::array();
  for (const auto& terms : gs.g_list) g.push_back(format_terms(mg, terms));
  Json h = Json::array();
  for (const auto& terms : gs.h_list) h.push_back(format_terms(mg, terms));
  j["g"] = std::move(g);
  j["h"] = std::move(h);
  j["embedding"] = embedding_json(gs.embedding);
  j["gamma"] = gs.linearization.gamma;
  j["rho"] = gs.linearization.rho;
  Json comps = Json::array();
  for (const auto& comp : gs.gamma.components) {
    Json pts = Json::array();
    for (int p : comp) pts.push_back({gs.gamma.points[static_cast<std::size_t>(p)].col, gs.gamma.points[static_cast<std::size_t>(p)].row});
    comps.push_back(std::move(pts));
  }
  j["components"] = std::move(comps);
  Json chains = Json::array();
  for (const auto& chain : gs.chains) {
    Json c = Json::array();
    for (int k : chain) c.push_back(format_terms(mg, {gs.extra.elements[static_cast<std::size_t>(k)]}));
    chains.push_back(std::move(c));
  }
  j["chains"] = std::move(chains);
  return j;
}

Json verification_json(const MatchedBipartiteGraph& mg, const VerificationReport& rep) {
  Json edges = Json::array();
  for (const auto& e : rep.edges) {
    edges.push_back({{"edge", format_terms(mg, {e.edge})}, {"status", to_string(e.status)}, {"seconds", e.seconds}});
  }
  return Json{{"field", to_string(rep.field)},
              {"containment", rep.containment},
              {"verified", rep.verified()},
              {"timed_out", rep.timed_out()},
              {"checks", rep.edges.size()},
              {"seconds", rep.seconds},
              {"edges", std::move(edges)}};
}

Json betti_json(const SquareFreeMonomialIdeal& ideal, const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, value] : table.entries) {
    Json sigma = Json::array();
    for (int v : members(key.second)) sigma.push_back(ideal.variables()[static_cast<std::size_t>(v)]);
    entries.push_back({{"l", key.first}, {"sigma", std::move(sigma)}, {"value", value}});
  }
  Json graded = Json::array();
  for (const auto& [key, value] : table.graded()) graded.push_back({{"l", key.first}, {"j", key.second}, {"value", value}});
  return Json{{"field", to_string(table.field)},
              {"variables", ideal.variables()},
              {"regularity", table.regularity()},
              {"projdim", table.projective_dimension()},
              {"graded", std::move(graded)},
              {"entries", std::move(entries)}};
}

std::string render_gamma(const GammaGraph& gg) {
  auto symbol = [](int t) -> std::string { return std::to_string(t); };
  std::size_t width = 1;
  for (int t = 1; t <= gg.n; ++t) width = std::max(width, symbol(t).size());
  std::ostringstream out;
  const std::size_t label_width = std::to_string(gg.n).size();
  for (int row = gg.n; row >= 1; --row) {
    std::string label = std::to_string(row);
    out << std::string(label_width - label.size(), ' ') << label << " |";
    for (int col = 1; col <= gg.n; ++col) {
      const int p = gg.point_at(col, row);
      std::string cell = p < 0 ? "." : symbol(gg.component_of[static_cast<std::size_t>(p)] + 1);
      out << ' ' << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  out << std::string(label_width, ' ') << " +" << std::string(static_cast<std::size_t>(gg.n) * (width + 1), '-') << '\n';
  out << std::string(label_width, ' ') << "  ";
  for (int col = 1; col <= gg.n; ++col) {
    const std::string label = std::to_string(col);
    out << ' ' << std::string(width > label.size() ? width - label.size() : 0, ' ') << label;
  }
  out << "\nedges:";
  for (const auto& [a, b] : gg.edges) {
    const auto& p = gg.points[static_cast<std::size_t>(a)];
    const auto& q = gg.points[static_cast<std::size_t>(b)];
    out << " (" << p.col << "," << p.row << ")-(" << q.col << "," << q.row << ")";
  }
  out << '\n';
  return out.str();
}

}  // namespace edgeideal
