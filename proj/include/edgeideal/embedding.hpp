#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "edgeideal/digraph.hpp"

namespace edgeideal {

struct PlanePoint {
  long long a = 0;
  long long b = 0;
  auto operator<=>(const PlanePoint&) const = default;
  // product order on N^2
  bool dominates(const PlanePoint& o) const { return a >= o.a && b >= o.b; }
};

// phi[v] for every vertex v of a poset.
struct PlaneEmbedding {
  std::vector<PlanePoint> phi;
  bool operator==(const PlaneEmbedding&) const = default;
};

// Order fidelity: j >= i in the poset  <=>  phi(j) >= phi(i) componentwise.
// Here j >= i means j == i or there is a directed path i -> j.
bool validate_embedding(const DirectedGraph& poset, const PlaneEmbedding& e);

// Replaces each coordinate by its rank (ties broken by the other coordinate),
// so both coordinate lists become permutations of 0..n-1. Throws
// CoordinateTie when two vertices share a point.
PlaneEmbedding canonicalize(const PlaneEmbedding& e);

// Failure certificate: both orientations of `edge` of the incomparability
// graph lead to a contradiction, so no transitive orientation exists.
struct NotTwoDimensional {
  std::pair<int, int> edge{-1, -1};
  std::string reason;
};

inline constexpr int kMaxEmbeddingVertices = 64;

// Searches for a transitive orientation T of the incomparability graph; on
// success returns phi = (rank in P u T, rank in P u T^-1), canonical.
// Throws NotAPoset if the input is cyclic or not transitively closed.
std::variant<PlaneEmbedding, NotTwoDimensional> embed_poset_2d(const DirectedGraph& poset,
                                                               int cap = kMaxEmbeddingVertices);

}  // namespace edgeideal
