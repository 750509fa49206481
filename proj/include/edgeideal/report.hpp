#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "edgeideal/betti.hpp"
#include "edgeideal/bipartite_graph.hpp"
#include "edgeideal/groebner.hpp"
#include "edgeideal/invariants.hpp"
#include "edgeideal/matching.hpp"
#include "edgeideal/stci.hpp"

namespace edgeideal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

// Vertex i of d_G is reported as i + 1.
Json digraph_json(const DirectedGraph& d);
Json reduction_json(const AcyclicReduction& ar);

Json classify_json(const BipartiteGraph& g);
Json invariants_json(const BipartiteGraph& g, const InvariantsReport& rep,
                     const std::optional<OracleInvariants>& oracle, const std::optional<Field>& field);
Json primes_json(const MatchedBipartiteGraph& mg, const std::vector<AssociatedPrime>& primes);
Json generators_json(const MatchedBipartiteGraph& mg, const GeneratorSet& gs);
Json verification_json(const MatchedBipartiteGraph& mg, const VerificationReport& rep);
Json betti_json(const SquareFreeMonomialIdeal& ideal, const BettiTable& table);

// Plane embedding keyed by 1-based vertex index.
Json embedding_json(const PlaneEmbedding& e);
// Accepts keys "1".."n" or the matched graph's x labels.
PlaneEmbedding parse_embedding(const Json& j, const MatchedBipartiteGraph& mg);

// Text picture of Gamma with row n at the top: each point shows the index t
// of its component C_t, '.' is an empty cell; edges are listed underneath.
std::string render_gamma(const GammaGraph& gg);

}  // namespace edgeideal
