#include <doctest.h>

#include <algorithm>

#include "edgeideal/generator.hpp"
#include "edgeideal/groebner.hpp"
#include "edgeideal/stci.hpp"
#include "support.hpp"

using namespace edgeideal;

namespace {

const GroebnerOptions kRational{Field::rationals(), 60.0};
const GroebnerOptions kPrime{Field::prime(kDefaultPrime), 60.0};

Polynomial var(int n, int v) { return Polynomial::variable(n, v); }

Polynomial mono(int n, std::initializer_list<int> vars) {
  Polynomial p = Polynomial::constant(n, 1);
  for (int v : vars) p = p * var(n, v);
  return p;
}

}  // namespace

TEST_CASE("monomial order") {
  // x1 < y1 < x2 < y2 as variables 0 < 1 < 2 < 3
  const auto x1 = Monomial::variable(0);
  const auto y1 = Monomial::variable(1);
  const auto x2 = Monomial::variable(2);
  const auto y2 = Monomial::variable(3);
  CHECK(compare(x2, x1) > 0);
  CHECK(compare(x1 * y1, y2) > 0);
  CHECK(compare(x2 * y2, x1 * y1) > 0);
  CHECK(compare(x1 * y2, x1 * y1) > 0);
  CHECK(compare(x1 * x1 * y2, x1 * y1 * y1) < 0);
  CHECK(compare(x1 * y1, x1 * y1) == 0);
  CHECK((x1 * y2).lcm(x1 * y1) == x1 * y1 * y2);
  CHECK((x1 * y1 * y2).quotient(y1) == x1 * y2);
  CHECK(x1.divides(x1 * y1));
  CHECK_FALSE(x2.divides(x1 * y1));
}

TEST_CASE("polynomial arithmetic") {
  const int n = 2;
  const auto x = var(n, 0);
  const auto y = var(n, 1);
  const auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK((p - p).is_zero());
  CHECK(to_string(x * y + y, {"x", "y"}) == "x*y + y");
}

TEST_CASE("Buchberger basics") {
  const int n = 2;
  const auto x = var(n, 0);
  const auto y = var(n, 1);
  const auto single = buchberger({x}, kRational);
  REQUIRE(single.basis.size() == 1);
  CHECK(single.basis[0] == x);

  const auto gb = buchberger({x + y, x - y}, kRational);
  REQUIRE(gb.basis.size() == 2);
  CHECK(gb.basis[0] == x);
  CHECK(gb.basis[1] == y);

  CHECK(buchberger({x, Polynomial::constant(n, 1) - x}, kRational).is_unit());
}

TEST_CASE("Buchberger on two K22 generators") {
  // With x1 < y1 < x2 < y2, x1 y1 + x2 y2 leads with x2 y2.
  // S(x1 y2, x2 y2 + x1 y1) = x2 (x1 y2) - x1 (x2 y2 + x1 y1) = -x1^2 y1, irreducible.
  // The new pair with x1 y2 reduces to 0 and the pair with x2 y2 is coprime.
  const int n = 4;
  const auto g1 = mono(n, {0, 3});
  const auto g2 = mono(n, {0, 1}) + mono(n, {2, 3});
  const auto gb = buchberger({g1, g2}, kRational);
  REQUIRE(gb.basis.size() == 3);
  CHECK(gb.basis[0] == g1);
  CHECK(gb.basis[1] == g2);
  CHECK(gb.basis[1].leading().mono == mono(n, {2, 3}).leading().mono);
  CHECK(gb.basis[2] == mono(n, {0, 0, 1}));
}

TEST_CASE("basis does not depend on input order") {
  const int n = 4;
  std::vector<Polynomial> gens{mono(n, {0, 3}), mono(n, {0, 1}) + mono(n, {2, 3}), mono(n, {2, 1}),
                               var(n, 0) * var(n, 0) - mono(n, {1, 2})};
  for (const auto& opts : {kRational, kPrime}) {
    const auto ref = buchberger(gens, opts).basis;
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
      return compare(a.leading().mono, b.leading().mono) < 0;
    });
    do {
      CHECK(buchberger(gens, opts).basis == ref);
    } while (std::next_permutation(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
      return compare(a.leading().mono, b.leading().mono) < 0;
    }));
  }
}

TEST_CASE("normal form") {
  const int n = 2;
  const auto x = var(n, 0);
  const auto y = var(n, 1);
  const auto gb = buchberger({x * x - y}, kRational);
  CHECK(normal_form(x * x * x, gb) == x * y);
  CHECK(normal_form(x * x - y, gb).is_zero());
}

TEST_CASE("radical membership") {
  const int n = 2;
  const auto x = var(n, 0);
  const auto y = var(n, 1);
  CHECK(radical_membership(x, {x * x}, kRational));
  CHECK_FALSE(radical_membership(y, {x}, kRational));
  CHECK(radical_membership(x * y, {x * x * y, y * y * x}, kPrime));

  const int m = 4;
  const std::vector<Polynomial> k22{mono(m, {0, 3}), mono(m, {0, 1}) + mono(m, {2, 3}), mono(m, {2, 1})};
  CHECK(radical_membership(mono(m, {2, 3}), k22, kRational));
  CHECK(radical_membership(mono(m, {2, 3}), k22, kPrime));
  for (const auto& g : k22) CHECK(radical_membership(g, k22, kPrime));
  // dropping a generator loses x2 y1
  CHECK_FALSE(radical_membership(mono(m, {2, 1}), {k22[0], k22[1]}, kPrime));
  CHECK(radical_membership(mono(m, {2, 1}), {k22[0], k22[1], k22[2], mono(m, {0})}, kPrime));
}

TEST_CASE("verification of generator sets") {
  const auto one = MatchedBipartiteGraph::from_digraph(DirectedGraph(1));
  CHECK(verify_arank_generators(one, arank_generators(one), kPrime).verified());

  const auto k = support::load_matched("k22.json");
  const auto gs = arank_generators(k);
  const auto rep = verify_arank_generators(k, gs, kPrime);
  CHECK(rep.containment);
  CHECK(rep.edges.size() == 4);
  CHECK(rep.verified());
  CHECK_FALSE(rep.timed_out());
  CHECK(verify_arank_generators(k, gs, kRational).verified());

  // removing the surplus generator breaks the radical equality
  auto broken = gs;
  broken.h_list.clear();
  const auto bad = verify_arank_generators(k, broken, kPrime);
  CHECK_FALSE(bad.verified());
  CHECK(std::count_if(bad.edges.begin(), bad.edges.end(),
                      [](const EdgeMembership& e) { return e.status == MembershipStatus::NotMember; }) >= 1);
}

TEST_CASE("tiny budgets time out") {
  const auto mg = support::load_matched("cm_poset7.json");
  const auto gs = arank_generators(mg);
  const auto rep = verify_arank_generators(mg, gs, {Field::prime(kDefaultPrime), 0.0});
  CHECK(rep.timed_out());
  CHECK_FALSE(rep.verified());
}
