#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "edgeideal/digraph.hpp"
#include "edgeideal/embedding.hpp"
#include "edgeideal/matching.hpp"
#include "edgeideal/monomial_ideal.hpp"

namespace edgeideal {

// mt19937_64 with hand-written conversions so sequences match on every
// platform (the standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform on [0, n) by rejection.
  std::uint64_t below(std::uint64_t n);
  // Uniform on [0, 1) with 53 random bits.
  double unit();
  bool coin(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Each vertex a of the poset becomes a directed cycle on zeta[a] consecutive
// labels, arcs between blocks follow the poset, then the closure is taken.
// Throws NotAPoset, BadWeights.
MatchedBipartiteGraph expand_poset(const DirectedGraph& dhat, const std::vector<int>& zeta);

// Weights of the depth-sharp construction: zeta = 1 off the antichain `b`,
// and the surplus c - t goes to the first member of `b`, so that
// sum over b of zeta = c - t + |b|. Throws BadWeights if b is not a
// nonempty antichain (or c != t when b is empty) or c < t.
std::vector<int> sharp_depth_weights(const DirectedGraph& dhat, VertexSet b, int c);

// Lower-triangular coin flips i -> j (i < j) with probability `density`, closed.
DirectedGraph random_poset(int n, double density, std::uint64_t seed);

struct PosetWithEmbedding {
  DirectedGraph poset;
  PlaneEmbedding embedding;
};

// Intersection of the identity order with a random permutation order;
// phi(i) = (i, pi(i)).
PosetWithEmbedding random_2d_poset(int n, std::uint64_t seed);
PosetWithEmbedding poset_from_permutation(const std::vector<int>& pi);

// Random composition of c into t parts over a random poset on t vertices.
MatchedBipartiteGraph random_unmixed(int c, std::uint64_t seed, double density = 0.4);

// 1..6 generators, each a random set of 1..min(4, nvars) variables.
SquareFreeMonomialIdeal random_squarefree_ideal(int nvars, Rng& rng);

inline constexpr int kMaxEnumerationSize = 4;

// Every transitively closed loopless digraph on [c], as matched graphs, in
// increasing order of the arc bitmask. Throws TooLarge for c > 4.
std::vector<MatchedBipartiteGraph> enumerate_unmixed(int c);

// All posets on [t] (acyclic, transitively closed), t <= 4.
std::vector<DirectedGraph> enumerate_posets(int t);

}  // namespace edgeideal
