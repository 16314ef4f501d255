#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/presentation.hpp"
#include "hopfkit/rewrite.hpp"

using namespace hopfkit;

namespace {
const RootOfUnity kMinusOne{2, 1};
const RootOfUnity kZeta3{3, 1};
const RootOfUnity kZeta4{4, 1};
}  // namespace

TEST_CASE("H8 presentation validates with dimension 8") {
  Presentation p = make_HA(2, 4, 1, kMinusOne, FieldElement::one());
  CHECK(p.r == 2);
  CHECK(p.dim() == 8);
  CHECK(p.conductor == 4);
}

TEST_CASE("constraint violations are rejected with the constraint named") {
  // N | nu*n with alpha != 0
  CHECK_THROWS_WITH_AS(make_HA(2, 2, 1, kMinusOne, FieldElement::one()),
                       doctest::Contains("N divides nu*n"), InvalidParams);
  // order(q) != n
  CHECK_THROWS_WITH_AS(make_H(3, 6, 1, kMinusOne), doctest::Contains("order(q) = n"),
                       InvalidParams);
  // n does not divide N
  CHECK_THROWS_WITH_AS(make_H(2, 5, 1, kMinusOne), doctest::Contains("n divides N"),
                       InvalidParams);
  // nu out of range
  CHECK_THROWS_AS(make_H(2, 4, 4, kMinusOne), InvalidParams);
  CHECK_THROWS_AS(make_H(2, 4, 0, kMinusOne), InvalidParams);
  // gcd(n,nu) != 1 with alpha != 0
  CHECK_THROWS_WITH_AS(make_HA(2, 8, 2, kMinusOne, FieldElement::one()),
                       doctest::Contains("gcd(n,nu)"), InvalidParams);
  // family U: N | nu^2
  CHECK_THROWS_WITH_AS(make_U(4, 2, RootOfUnity{4, 1}), doctest::Contains("nu^2"),
                       InvalidParams);
  // family UA: n = 1
  CHECK_THROWS_WITH_AS(make_presentation(Family::UA, 1, 4, 1, RootOfUnity{1, 0},
                                         FieldElement::zero(), FieldElement::zero(),
                                         FieldElement::one()),
                       doctest::Contains("n > 1"), InvalidParams);
}

TEST_CASE("UA presentation of dimension 54") {
  Presentation p = make_presentation(Family::UA, 3, 6, 1, kZeta3, FieldElement::one(),
                                     FieldElement::one(), FieldElement::one());
  CHECK(p.r == 3);
  CHECK(p.dim() == 54);  // N * n^2 = 6 * 9
}

TEST_CASE("family U equals the UA sub-family with alpha=beta=0, gamma=1") {
  // U_{(N,nu,omega)} with N=4, nu=1, omega=i
  Presentation u = make_U(4, 1, kZeta4);
  CHECK(u.n == 4);
  CHECK(u.q.order() == 4);
  CHECK(u.r == 4);
  CHECK(u.dim() == 64);
  Presentation ua = make_presentation(Family::UA, 4, 4, 1, kZeta4, FieldElement::zero(),
                                      FieldElement::zero(), FieldElement::one());
  CHECK(emit_rules(u).size() == emit_rules(ua).size());
  for (size_t i = 0; i < emit_rules(u).size(); ++i) {
    CHECK(emit_rules(u)[i].lhs == emit_rules(ua)[i].lhs);
    CHECK(emit_rules(u)[i].rhs == emit_rules(ua)[i].rhs);
  }
}

TEST_CASE("family U: r = |omega^{nu^2}| and r > 1") {
  for (auto [N, nu, we] : {std::tuple<long, long, long>{2, 1, 1},
                           {4, 1, 1},
                           {6, 3, 1},
                           {6, 2, 1},
                           {8, 2, 1}}) {
    if ((nu * nu) % N == 0) continue;
    Presentation u = make_U(N, nu, RootOfUnity{N, we});
    FieldElement omega = FieldElement::zeta(N, we);
    auto r = order_of(omega.pow(nu * nu));
    REQUIRE(r.has_value());
    CHECK(u.r == *r);
    CHECK(u.r > 1);
  }
}

TEST_CASE("JSON round trip preserves the presentation") {
  Presentation p = make_presentation(Family::UA, 3, 6, 1, kZeta3, FieldElement(1, {rat(2)}),
                                     FieldElement::one(), FieldElement::one());
  auto j = p.to_json();
  Presentation q = Presentation::from_json(j);
  CHECK(q.to_json() == j);
  CHECK(q.content_hash() == p.content_hash());
  CHECK(q.dim() == p.dim());

  Presentation h8 = make_HA(2, 4, 1, kMinusOne, FieldElement::one());
  CHECK(Presentation::from_json(h8.to_json()).to_json() == h8.to_json());
  CHECK(h8.to_json()["family"] == "HA");
  CHECK(h8.to_json()["beta"].is_null());
}

TEST_CASE("emitted rules match the family relation lists") {
  SUBCASE("H8") {
    Presentation p = make_HA(2, 4, 1, kMinusOne, FieldElement::one());
    auto rules = emit_rules(p);
    REQUIRE(rules.size() == 5);
    CHECK(rules[0].lhs == "AAAA");
    CHECK(rules[1].lhs == "B");
    CHECK(rules[1].rhs[0].first == "A");
    CHECK(rules[2].lhs == "D");
    CHECK(rules[3].lhs == "XA");
    CHECK(rules[3].rhs[0].first == "AX");
    CHECK(rules[3].rhs[0].second == FieldElement(4, {rat(-1)}));
    CHECK(rules[4].lhs == "XX");
    // rhs = A^2 - 1
    CHECK(rules[4].rhs.size() == 2);
    CHECK(rules[4].rhs[0].first == "AA");
  }
  SUBCASE("group algebra kZ_N has the explicit X -> 0 rule") {
    Presentation p = make_H(1, 5, 1, RootOfUnity{1, 0});
    auto rules = emit_rules(p);
    REQUIRE(rules.size() == 4);
    CHECK(rules[0].lhs == "AAAAA");
    CHECK(rules[3].lhs == "X");
    CHECK(rules[3].rhs.empty());
  }
  SUBCASE("U_{(2,1,-1)} has 8 rules including YX -> -XY + A^2 - 1") {
    Presentation p = make_U(2, 1, kMinusOne);
    auto rules = emit_rules(p);
    REQUIRE(rules.size() == 8);
    CHECK(rules[7].lhs == "YX");
    REQUIRE(rules[7].rhs.size() == 3);
    CHECK(rules[7].rhs[0].first == "XY");
    CHECK(rules[7].rhs[0].second == FieldElement(2, {rat(-1)}).embed(p.conductor));
  }
}

TEST_CASE("degenerate UA with q^nu = 1 and gamma != 0 is rejected unless absorbed") {
  // q = -1, nu = 2: q^nu = 1, gamma = 1, N = 8 does not divide 2*nu = 4
  CHECK_THROWS_AS(make_presentation(Family::UA, 2, 8, 2, kMinusOne, FieldElement::zero(),
                                    FieldElement::zero(), FieldElement::one()),
                  InvalidParams);
  // N = 4 divides 2*nu = 4: the relation collapses consistently, accepted
  Presentation ok = make_presentation(Family::UA, 2, 4, 2, kMinusOne, FieldElement::zero(),
                                      FieldElement::zero(), FieldElement::one());
  CHECK(ok.r == 1);
  CHECK(ok.dim() == 4);
}
