#include "edgeideal/checks.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "edgeideal/betti.hpp"
#include "edgeideal/error.hpp"
#include "edgeideal/generator.hpp"
#include "edgeideal/invariants.hpp"
#include "edgeideal/monomial_ideal.hpp"
#include "edgeideal/stci.hpp"

namespace edgeideal {

namespace {

constexpr std::size_t kKeptFailures = 8;

struct Outcome {
  enum class Kind { Pass, Fail, Skip };
  Kind kind = Kind::Pass;
  std::string message;

  static Outcome pass() { return {}; }
  static Outcome skip() { return {Kind::Skip, {}}; }
  static Outcome failure(std::string m) { return {Kind::Fail, std::move(m)}; }
};

// Runs fn(k) for k < n across OpenMP threads; exceptions count as failures.
template <class Fn>
CheckResult run_cases(std::string name, int n, Fn fn) {
  std::vector<Outcome> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < n; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = fn(k);
    } catch (const std::exception& e) {
      out[static_cast<std::size_t>(k)] = Outcome::failure(std::string("case ") + std::to_string(k) + ": " + e.what());
    }
  }
  CheckResult r;
  r.name = std::move(name);
  for (auto& o : out) {
    if (o.kind == Outcome::Kind::Skip) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    if (o.kind == Outcome::Kind::Fail) {
      ++r.failure_count;
      if (r.failures.size() < kKeptFailures) r.failures.push_back(std::move(o.message));
    }
  }
  return r;
}

template <class T>
std::string mismatch(const std::string& what, T expected, T actual, const std::string& where) {
  return what + " " + std::to_string(actual) + " != " + std::to_string(expected) + " on " + where;
}

}  // namespace

std::string describe(const MatchedBipartiteGraph& mg) {
  std::string out = "c=" + std::to_string(mg.c()) + " arcs=[";
  bool first = true;
  for (const auto& [i, j] : build_digraph(mg).arcs()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(i + 1) + "->" + std::to_string(j + 1);
  }
  return out + "]";
}

std::vector<MatchedBipartiteGraph> sweep_instances(const SweepOptions& opts) {
  std::vector<MatchedBipartiteGraph> out;
  for (int c = 1; c <= opts.exhaustive_max_c; ++c) {
    auto batch = enumerate_unmixed(c);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  Rng rng(opts.seed);
  for (int c = std::max(opts.random_min_c, opts.exhaustive_max_c + 1); c <= opts.random_max_c; ++c) {
    for (int k = 0; k < opts.random_per_size; ++k) out.push_back(random_unmixed(c, rng.next()));
  }
  return out;
}

CheckResult check_formulas_vs_oracle(const std::vector<MatchedBipartiteGraph>& instances, const Field& field,
                                     int max_oracle_vars) {
  return run_cases("formulas-vs-oracle", static_cast<int>(instances.size()), [&](int k) {
    const auto& mg = instances[static_cast<std::size_t>(k)];
    if (2 * mg.c() > max_oracle_vars) return Outcome::skip();
    const BettiTable t = betti_table_serial(edge_ideal(mg), field, max_oracle_vars);
    const int reg = regularity(mg);
    const int dep = depth(mg);
    const int pd = projective_dimension(mg);
    if (t.regularity() != reg) return Outcome::failure(mismatch("regularity", reg, t.regularity(), describe(mg)));
    if (t.projective_dimension() != pd) return Outcome::failure(mismatch("projdim", pd, t.projective_dimension(), describe(mg)));
    if (2 * mg.c() - t.projective_dimension() != dep) {
      return Outcome::failure(mismatch("depth", dep, 2 * mg.c() - t.projective_dimension(), describe(mg)));
    }
    return Outcome::pass();
  });
}

CheckResult check_r_equals_regularity(const std::vector<MatchedBipartiteGraph>& instances) {
  return run_cases("r-equals-regularity", static_cast<int>(instances.size()), [&](int k) {
    const auto& mg = instances[static_cast<std::size_t>(k)];
    const int r = max_pairwise_disconnected(mg.to_graph(), kMaxVertices).size();
    const int reg = regularity(mg);
    if (r != reg) return Outcome::failure(mismatch("r(I)", reg, r, describe(mg)));
    return Outcome::pass();
  });
}

CheckResult check_depth_bound(const std::vector<MatchedBipartiteGraph>& instances) {
  return run_cases("depth-lower-bound", static_cast<int>(instances.size()), [&](int k) {
    const auto& mg = instances[static_cast<std::size_t>(k)];
    const int t = acyclic_reduction(build_digraph(mg)).t();
    if (depth(mg) < t) return Outcome::failure("depth below strong component count on " + describe(mg));
    return Outcome::pass();
  });
}

CheckResult check_sharp_depth(const std::vector<std::pair<int, int>>& t_c_pairs, const Field& field,
                              int max_oracle_vars) {
  struct Case {
    DirectedGraph dhat;
    VertexSet b;
    int c;
  };
  std::vector<Case> cases;
  for (const auto& [t, c] : t_c_pairs) {
    for (const auto& dhat : enumerate_posets(t)) {
      for_each_antichain(comparability_masks(dhat), [&](VertexSet b) {
        if (b != 0 || c == t) cases.push_back({dhat, b, c});
      });
    }
  }
  return run_cases("sharp-depth", static_cast<int>(cases.size()), [&](int k) {
    const auto& cs = cases[static_cast<std::size_t>(k)];
    const auto mg = expand_poset(cs.dhat, sharp_depth_weights(cs.dhat, cs.b, cs.c));
    const int t = cs.dhat.size();
    if (depth(mg) != t) return Outcome::failure(mismatch("formula depth", t, depth(mg), describe(mg)));
    if (2 * mg.c() <= max_oracle_vars) {
      const int pd = betti_table_serial(edge_ideal(mg), field, max_oracle_vars).projective_dimension();
      if (2 * mg.c() - pd != t) return Outcome::failure(mismatch("oracle depth", t, 2 * mg.c() - pd, describe(mg)));
    }
    return Outcome::pass();
  });
}

CheckResult check_primes_vs_covers(const std::vector<MatchedBipartiteGraph>& instances) {
  return run_cases("primes-vs-covers", static_cast<int>(instances.size()), [&](int k) {
    const auto& mg = instances[static_cast<std::size_t>(k)];
    std::set<VertexCover> from_primes;
    for (const auto& p : associated_primes(mg)) from_primes.insert(prime_as_cover(mg, p));
    const auto covers = minimal_vertex_covers(mg.to_graph());
    const std::set<VertexCover> brute(covers.covers.begin(), covers.covers.end());
    if (from_primes != brute) {
      return Outcome::failure(std::to_string(from_primes.size()) + " primes vs " + std::to_string(brute.size()) +
                              " minimal covers on " + describe(mg));
    }
    return Outcome::pass();
  });
}

CheckResult check_gamma_properties(int count, int max_n, std::uint64_t seed, bool inject_mutation) {
  Rng rng(seed);
  std::vector<std::pair<int, std::uint64_t>> cases;
  for (int k = 0; k < count; ++k) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
    cases.emplace_back(n, rng.next());
  }
  return run_cases(inject_mutation ? "gamma-properties (mutated)" : "gamma-properties", count, [&](int k) {
    const auto [n, s] = cases[static_cast<std::size_t>(k)];
    const auto pe = random_2d_poset(n, s);
    const auto lp = linearizations(pe.poset, pe.embedding);
    const std::string where = "n=" + std::to_string(n) + " seed=" + std::to_string(s);
    if (!satisfies_linearization_conditions(pe.poset, lp)) return Outcome::failure("linearization conditions on " + where);
    GammaGraph gg = build_gamma_graph(pe.poset, lp);
    if (inject_mutation) {
      if (gg.edges.empty()) return Outcome::skip();
      gg.edges.erase(gg.edges.begin());
      assign_components(gg);
    }
    const auto violations = gamma_invariant_violations(gg, lp);
    if (!violations.empty()) {
      std::string names;
      for (const auto& v : violations) names += (names.empty() ? "" : ",") + v;
      return Outcome::failure(names + " violated on " + where);
    }
    if (static_cast<int>(gg.components.size()) != n) return Outcome::failure("component list size on " + where);
    return Outcome::pass();
  });
}

CheckResult check_duality(int count, int max_vars, std::uint64_t seed, const Field& field) {
  Rng rng(seed);
  std::vector<SquareFreeMonomialIdeal> ideals;
  for (int k = 0; k < count; ++k) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vars)));
    ideals.push_back(random_squarefree_ideal(n, rng));
  }
  return run_cases("terai-and-dual-betti", count, [&](int k) {
    const auto& ideal = ideals[static_cast<std::size_t>(k)];
    if (!terai_check(ideal, field)) return Outcome::failure("Terai identity fails on " + to_string(ideal));
    if (!dual_betti_relation_check(ideal, field)) return Outcome::failure("dual Betti relation fails on " + to_string(ideal));
    return Outcome::pass();
  });
}

CheckResult check_dual_shape(const std::vector<MatchedBipartiteGraph>& instances, const Field& field,
                             int max_oracle_vars) {
  return run_cases("dual-shape", static_cast<int>(instances.size()), [&](int k) {
    const auto& mg = instances[static_cast<std::size_t>(k)];
    if (classify(mg) != Classification::CohenMacaulay || 2 * mg.c() > max_oracle_vars) return Outcome::skip();
    if (!dual_shape_check(mg, field, max_oracle_vars)) return Outcome::failure("dual shape fails on " + describe(mg));
    return Outcome::pass();
  });
}

CheckResult check_generators(const std::vector<MatchedBipartiteGraph>& instances, int verify_max_c,
                             const GroebnerOptions& gb) {
  return run_cases("arank-generators", static_cast<int>(instances.size()), [&](int k) {
    const auto& mg = instances[static_cast<std::size_t>(k)];
    std::optional<GeneratorSet> gs;
    try {
      gs = arank_generators(mg);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotTwoDimensional) return Outcome::skip();
      throw;
    }
    const int pd = projective_dimension(mg);
    if (gs->total_count() != pd) return Outcome::failure(mismatch("generator count", pd, gs->total_count(), describe(mg)));
    std::vector<Term> used;
    for (const auto* list : {&gs->g_list, &gs->h_list}) {
      for (const auto& terms : *list) used.insert(used.end(), terms.begin(), terms.end());
    }
    std::sort(used.begin(), used.end());
    if (used != mg.edges()) return Outcome::failure("edges not used exactly once on " + describe(mg));
    if (mg.c() <= verify_max_c) {
      const auto rep = verify_arank_generators(mg, *gs, gb);
      if (!rep.verified()) return Outcome::failure("radical verification fails on " + describe(mg));
    }
    return Outcome::pass();
  });
}

CheckResult check_isolated_edges(const std::vector<MatchedBipartiteGraph>& instances) {
  return run_cases("isolated-edges-regularity", static_cast<int>(instances.size()), [&](int k) {
    const auto& mg = instances[static_cast<std::size_t>(k)];
    if (classify(mg) != Classification::CohenMacaulay) return Outcome::skip();
    const bool isolated = build_digraph(mg).arc_count() == 0;
    if ((regularity(mg) == mg.c()) != isolated) return Outcome::failure("regularity = c mismatch on " + describe(mg));
    return Outcome::pass();
  });
}

}  // namespace edgeideal
