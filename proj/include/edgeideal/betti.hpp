#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "edgeideal/field.hpp"
#include "edgeideal/matching.hpp"
#include "edgeideal/monomial_ideal.hpp"

namespace edgeideal {

inline constexpr int kMaxBettiVariables = 16;

// Multigraded Betti numbers of R/I in square-free multidegrees.
struct BettiTable {
  int variable_count = 0;
  Field field;
  std::map<std::pair<int, VertexSet>, std::int64_t> entries;  // (l, sigma) -> beta, nonzero only

  std::int64_t at(int l, VertexSet sigma) const;
  // (l, j) -> sum of beta_{l,sigma} over |sigma| = j
  std::map<std::pair<int, int>, std::int64_t> graded() const;
  int regularity() const;   // max |sigma| - l
  int projective_dimension() const;  // max l
};

// Rank of an integer matrix over the field (rows of equal length).
int matrix_rank(std::vector<std::vector<std::int64_t>> rows, const Field& field);

// beta_{l,sigma}(R/I) for l = 0..|sigma| via the reduced homology of the
// restriction of the Stanley-Reisner complex to sigma.
std::vector<std::int64_t> betti_at(const SquareFreeMonomialIdeal& ideal, VertexSet sigma, const Field& field);

// Loop over all 2^n multidegrees; cones are skipped. Throws TooLarge past the cap.
BettiTable betti_table_serial(const SquareFreeMonomialIdeal& ideal, const Field& field, int cap = kMaxBettiVariables);
// Same table, multidegrees distributed over OpenMP threads.
BettiTable betti_table(const SquareFreeMonomialIdeal& ideal, const Field& field, int cap = kMaxBettiVariables);

struct OracleInvariants {
  int regularity = 0;
  int projdim = 0;
  int depth = 0;
};

OracleInvariants oracle_invariants(const SquareFreeMonomialIdeal& ideal, const Field& field,
                                   int cap = kMaxBettiVariables);

// projdim R/I == reg(I*), with reg(I*) = reg(R/I*) + 1.
bool terai_check(const SquareFreeMonomialIdeal& ideal, const Field& field, int cap = kMaxBettiVariables);

// beta_{l,sigma}(I*) == beta_{|sigma|-l,sigma}(R/(I : x^{complement of sigma})) for all l, sigma.
bool dual_betti_relation_check(const SquareFreeMonomialIdeal& ideal, const Field& field,
                               int cap = kMaxBettiVariables);

// sigma_{A,B} over the interleaved variables of a matched graph.
VertexSet dual_shape_multidegree(const MatchedBipartiteGraph& mg, VertexSet a, VertexSet b);

// For a Cohen-Macaulay graph every nonzero beta_{l,sigma}(I*) is 1 and sigma
// is sigma_{A,B} for antichains B within A with |B| = l. Throws NotCohenMacaulay.
bool dual_shape_check(const MatchedBipartiteGraph& mg, const Field& field, int cap = kMaxBettiVariables);

}  // namespace edgeideal
