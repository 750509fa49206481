#pragma once

#include <string>
#include <vector>

#include "edgeideal/bipartite_graph.hpp"
#include "edgeideal/matching.hpp"
#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

// Square-free monomial ideal; each generator is the set of its variables.
// Generators are kept minimal under divisibility and sorted by
// (degree, members). The empty generator means the unit ideal.
class SquareFreeMonomialIdeal {
 public:
  SquareFreeMonomialIdeal() = default;
  SquareFreeMonomialIdeal(std::vector<std::string> variables, std::vector<VertexSet> generators);

  int variable_count() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<VertexSet>& generators() const { return gens_; }
  bool is_unit() const { return !gens_.empty() && gens_.front() == 0; }

  // Stanley-Reisner face test: s contains no generator.
  bool is_face(VertexSet s) const;

  bool operator==(const SquareFreeMonomialIdeal&) const = default;

 private:
  std::vector<std::string> vars_;
  std::vector<VertexSet> gens_;
};

// Drops generators divisible by others, sorts, removes duplicates.
std::vector<VertexSet> minimalize(std::vector<VertexSet> gens);

// Variables x1, y1, x2, y2, ... (x_i at 2i, y_i at 2i+1).
SquareFreeMonomialIdeal edge_ideal(const MatchedBipartiteGraph& mg);
// Left labels first, then right labels.
SquareFreeMonomialIdeal edge_ideal(const BipartiteGraph& g);

inline int x_var(int i) { return 2 * i; }
inline int y_var(int i) { return 2 * i + 1; }

inline constexpr std::size_t kMaxDualGenerators = 1u << 20;

// Intersection of the primes (x_v : v in F) over the generators F, via
// incremental minimal transversals. Throws TooLarge past `cap` generators.
SquareFreeMonomialIdeal alexander_dual(const SquareFreeMonomialIdeal& ideal,
                                       std::size_t cap = kMaxDualGenerators);

// (I : x^m) for a square-free monomial m.
SquareFreeMonomialIdeal colon(const SquareFreeMonomialIdeal& ideal, VertexSet m);

std::string to_string(const SquareFreeMonomialIdeal& ideal);

}  // namespace edgeideal
