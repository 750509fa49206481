#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/field.hpp"
#include "edgeideal/groebner.hpp"
#include "edgeideal/matching.hpp"

namespace edgeideal {

struct CheckResult {
  std::string name;
  int cases = 0;
  int skipped = 0;
  std::vector<std::string> failures;  // first few only
  int failure_count = 0;

  bool passed() const { return failure_count == 0; }
};

struct SweepOptions {
  int exhaustive_max_c = 3;
  int random_min_c = 4;
  int random_max_c = 7;
  int random_per_size = 6;
  std::uint64_t seed = 20240611;
};

// Exhaustive unmixed instances up to exhaustive_max_c, then seeded random
// unmixed instances for each size in [random_min_c, random_max_c].
std::vector<MatchedBipartiteGraph> sweep_instances(const SweepOptions& opts);

// Regularity, depth and projdim formulas against the Hochster oracle.
CheckResult check_formulas_vs_oracle(const std::vector<MatchedBipartiteGraph>& instances, const Field& field,
                                     int max_oracle_vars);
// Brute-force maximum pairwise disconnected edge set equals the regularity.
CheckResult check_r_equals_regularity(const std::vector<MatchedBipartiteGraph>& instances);
// depth >= number of strong components.
CheckResult check_depth_bound(const std::vector<MatchedBipartiteGraph>& instances);
// Depth-sharp expansions over every poset on t vertices and every admissible antichain.
CheckResult check_sharp_depth(const std::vector<std::pair<int, int>>& t_c_pairs, const Field& field,
                              int max_oracle_vars);
// Associated primes from antichains equal the brute-force minimal vertex covers.
CheckResult check_primes_vs_covers(const std::vector<MatchedBipartiteGraph>& instances);
// Component count, first-column contiguity and linearization conditions on
// random 2-dimensional posets; `inject_mutation` drops one Gamma edge first.
CheckResult check_gamma_properties(int count, int max_n, std::uint64_t seed, bool inject_mutation = false);
// Terai's identity and the dual Betti relation on random square-free ideals.
CheckResult check_duality(int count, int max_vars, std::uint64_t seed, const Field& field);
// Shape of the dual Betti numbers on the Cohen-Macaulay instances.
CheckResult check_dual_shape(const std::vector<MatchedBipartiteGraph>& instances, const Field& field,
                             int max_oracle_vars);
// Generator count equals projdim, every edge used once; radical verification
// for instances with c <= verify_max_c.
CheckResult check_generators(const std::vector<MatchedBipartiteGraph>& instances, int verify_max_c,
                             const GroebnerOptions& gb);
// For Cohen-Macaulay graphs: reg == c exactly when d_G has no arcs.
CheckResult check_isolated_edges(const std::vector<MatchedBipartiteGraph>& instances);

std::string describe(const MatchedBipartiteGraph& mg);

}  // namespace edgeideal
