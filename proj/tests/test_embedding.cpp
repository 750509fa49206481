#include <doctest.h>

#include <variant>

#include "edgeideal/embedding.hpp"
#include "edgeideal/generator.hpp"
#include "support.hpp"

using namespace edgeideal;

namespace {

PlaneEmbedding embed(const DirectedGraph& p) {
  auto r = embed_poset_2d(p);
  REQUIRE(std::holds_alternative<PlaneEmbedding>(r));
  return std::get<PlaneEmbedding>(r);
}

// Reads back the order from the two coordinate rankings.
DirectedGraph order_from(const PlaneEmbedding& e) {
  const int n = static_cast<int>(e.phi.size());
  DirectedGraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && e.phi[static_cast<std::size_t>(j)].dominates(e.phi[static_cast<std::size_t>(i)])) d.add_arc(i, j);
  return d;
}

}  // namespace

TEST_CASE("chains and antichains embed") {
  CHECK(embed(support::chain(3)) == PlaneEmbedding{{{0, 0}, {1, 1}, {2, 2}}});
  const auto a = embed(DirectedGraph(2));
  CHECK(validate_embedding(DirectedGraph(2), a));
  CHECK(a == PlaneEmbedding{{{0, 1}, {1, 0}}});
}

TEST_CASE("validation") {
  const auto p = support::cm_poset7();
  auto phi = support::cm_poset7_embedding();
  CHECK(validate_embedding(p, phi));
  std::swap(phi.phi[0], phi.phi[2]);  // 3 above 1
  CHECK_FALSE(validate_embedding(p, phi));
  CHECK_FALSE(validate_embedding(DirectedGraph(2), PlaneEmbedding{{{0, 0}, {1, 1}}}));
  CHECK_FALSE(validate_embedding(p, PlaneEmbedding{{{0, 0}}}));
}

TEST_CASE("canonical form") {
  const auto phi = support::cm_poset7_embedding();
  CHECK(canonicalize(phi) == phi);
  CHECK(canonicalize(PlaneEmbedding{{{0, 0}, {5, 7}}}) == PlaneEmbedding{{{0, 0}, {1, 1}}});
  PlaneEmbedding scaled = phi;
  for (auto& q : scaled.phi) {
    q.a *= 10;
    q.b *= 10;
  }
  CHECK(canonicalize(scaled) == phi);
  CHECK(support::error_kind([] { canonicalize(PlaneEmbedding{{{1, 1}, {1, 1}}}); }) == ErrorKind::CoordinateTie);
}

TEST_CASE("the seven element poset embeds") {
  const auto p = support::cm_poset7();
  const auto e = embed(p);
  CHECK(validate_embedding(p, e));
  CHECK(order_from(e) == p);
}

TEST_CASE("the crown is not two dimensional") {
  const auto crown = build_digraph(support::load_matched("crown3.json"));
  REQUIRE(is_poset(crown));
  const auto r = embed_poset_2d(crown);
  REQUIRE(std::holds_alternative<NotTwoDimensional>(r));
  const auto& cert = std::get<NotTwoDimensional>(r);
  CHECK(cert.edge.first >= 0);
  CHECK_FALSE(cert.reason.empty());
}

TEST_CASE("embedding rejects non-posets") {
  CHECK(support::error_kind([] { embed_poset_2d(DirectedGraph(2, {{0, 1}, {1, 0}})); }) == ErrorKind::NotAPoset);
  CHECK(support::error_kind([] { embed_poset_2d(DirectedGraph(3, {{0, 1}, {1, 2}})); }) == ErrorKind::NotAPoset);
}

TEST_CASE("random two dimensional posets always embed and round trip") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const auto pe = random_2d_poset(n, seed);
    REQUIRE(validate_embedding(pe.poset, pe.embedding));
    const auto e = embed(pe.poset);
    CHECK(validate_embedding(pe.poset, e));
    CHECK(order_from(e) == pe.poset);
  }
}
