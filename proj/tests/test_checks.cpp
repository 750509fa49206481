#include <doctest.h>

#include "edgeideal/checks.hpp"
#include "edgeideal/generator.hpp"
#include "edgeideal/invariants.hpp"
#include "edgeideal/report.hpp"
#include "support.hpp"

using namespace edgeideal;

TEST_CASE("sweep composition") {
  SweepOptions opts;
  opts.random_per_size = 2;
  const auto inst = sweep_instances(opts);
  CHECK(inst.size() == 1 + 4 + 29 + 4 * 2);
  for (const auto& mg : inst) CHECK(is_unmixed(classify(mg)));
  CHECK(describe(inst.front()).find("c=1") != std::string::npos);
}

TEST_CASE("check suites pass on a small sweep") {
  SweepOptions opts;
  opts.exhaustive_max_c = 2;
  opts.random_min_c = 3;
  opts.random_max_c = 4;
  opts.random_per_size = 2;
  const auto inst = sweep_instances(opts);
  const Field q = Field::rationals();
  CHECK(check_formulas_vs_oracle(inst, q, 16).passed());
  CHECK(check_r_equals_regularity(inst).passed());
  CHECK(check_depth_bound(inst).passed());
  CHECK(check_primes_vs_covers(inst).passed());
  CHECK(check_dual_shape(inst, q, 16).passed());
  CHECK(check_isolated_edges(inst).passed());
  CHECK(check_sharp_depth({{1, 2}, {2, 3}}, q, 16).passed());
  CHECK(check_duality(10, 6, 3, q).passed());
  const auto gen = check_generators(inst, 2, {Field::prime(kDefaultPrime), 60.0});
  CHECK(gen.passed());
  CHECK(gen.cases == static_cast<int>(inst.size()));
}

TEST_CASE("Gamma check and its negative control") {
  const auto ok = check_gamma_properties(50, 10, 1);
  CHECK(ok.passed());
  CHECK(ok.cases == 50);
  const auto bad = check_gamma_properties(50, 10, 1, true);
  CHECK_FALSE(bad.passed());
  REQUIRE_FALSE(bad.failures.empty());
  CHECK(bad.failures.front().find("component-count") != std::string::npos);
}

TEST_CASE("the 8-cycle keeps r below the regularity") {
  const auto g = support::load_graph("cycle8.json");
  CHECK(max_pairwise_disconnected(g).size() == 2);
  CHECK(oracle_invariants(edge_ideal(g), Field::rationals()).regularity == 3);
}

TEST_CASE("reports") {
  const auto g = support::load_graph("k22.json");
  const auto cls = classify_json(g);
  CHECK(cls.at("classification") == "Unmixed");
  CHECK(cls.at("c") == 2);

  const auto rep = invariants_report(g);
  const auto inv = invariants_json(g, rep, oracle_invariants(edge_ideal(g), Field::rationals()), Field::rationals());
  CHECK(inv.at("regularity") == 1);
  CHECK(inv.at("projdim") == 3);

  const auto mg = support::load_matched("k22.json");
  const auto gens = generators_json(mg, arank_generators(mg));
  CHECK(gens.at("count") == 3);
  CHECK(gens.at("h") == Json::array({"x2*y1"}));

  const auto e = support::cm_poset7_embedding();
  CHECK(parse_embedding(embedding_json(e), support::load_matched("cm_poset7.json")) == e);
  CHECK(support::error_kind([] {
          parse_embedding(Json::parse(R"({"1":[0,0]})"), support::load_matched("k22.json"));
        }) == ErrorKind::Parse);

  const auto gs = arank_generators(support::load_matched("cm_poset7.json"), e);
  const std::string pic = render_gamma(gs.gamma);
  CHECK(pic.find('.') != std::string::npos);
  CHECK(pic.find('7') != std::string::npos);
}
