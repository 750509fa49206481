#pragma once

#include <vector>

#include "edgeideal/field.hpp"
#include "edgeideal/matching.hpp"
#include "edgeideal/polynomial.hpp"
#include "edgeideal/stci.hpp"

namespace edgeideal {

inline constexpr double kDefaultGroebnerBudget = 300.0;

struct GroebnerOptions {
  Field field = Field::prime(kDefaultPrime);
  double budget_seconds = kDefaultGroebnerBudget;
};

// Reduced basis, monic, sorted by increasing leading monomial. Over F_p the
// coefficients are residues 0..p-1.
struct GroebnerBasis {
  std::vector<Polynomial> basis;
  Field field;

  bool is_unit() const { return basis.size() == 1 && basis.front().leading().mono.degree == 0; }
};

// Buchberger with the normal selection strategy and both of Buchberger's
// criteria. Throws Timeout once the budget is spent.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const GroebnerOptions& opts = {});

// Normal form of f modulo a reduced basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// f lies in the radical of (gens) iff 1 is in (gens, 1 - z f), z a new
// largest variable. Throws Timeout.
bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& generators,
                        const GroebnerOptions& opts = {});

// Generator polynomials over the interleaved variables x1, y1, x2, y2, ...
std::vector<Polynomial> generator_polynomials(const MatchedBipartiteGraph& mg, const GeneratorSet& gs);

enum class MembershipStatus { Member, NotMember, Timeout };
const char* to_string(MembershipStatus s);

struct EdgeMembership {
  Edge edge;
  MembershipStatus status = MembershipStatus::Timeout;
  double seconds = 0.0;
};

struct VerificationReport {
  Field field;
  bool containment = false;  // every generator term is an edge monomial
  std::vector<EdgeMembership> edges;
  double seconds = 0.0;

  bool timed_out() const;
  bool verified() const;
};

// Checks J in I syntactically and I in rad(J) edge by edge (edges run in
// parallel, each with its own budget).
VerificationReport verify_arank_generators(const MatchedBipartiteGraph& mg, const GeneratorSet& gs,
                                           const GroebnerOptions& opts = {});

}  // namespace edgeideal
