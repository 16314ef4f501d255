#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfkit/cyclotomic.hpp"
#include "hopfkit/linalg.hpp"
#include "hopfkit/roots.hpp"

using namespace hopfkit;

namespace {

FieldElement random_element(long M, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  std::vector<Rational> c(static_cast<size_t>(euler_phi(M)));
  for (auto& v : c) v = rat(num(rng), den(rng));
  return FieldElement(M, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomial degrees and small cases") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{rat(-1), rat(1)});
  CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{rat(1), rat(1)});
  CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{rat(1), rat(0), rat(1)});
  // Phi_12 = x^4 - x^2 + 1
  CHECK(cyclotomic_polynomial(12) ==
        std::vector<Rational>{rat(1), rat(0), rat(-1), rat(0), rat(1)});
  for (long M = 1; M <= 30; ++M)
    CHECK(static_cast<long>(cyclotomic_polynomial(M).size()) == euler_phi(M) + 1);
}

TEST_CASE("basic arithmetic and canonical forms") {
  FieldElement z4 = FieldElement::zeta(4);
  CHECK(z4 * z4 == FieldElement(4, {rat(-1)}));  // zeta_4^2 = -1
  CHECK(z4.pow(4).is_one());
  FieldElement z3 = FieldElement::zeta(3);
  // 1 + z3 + z3^2 = 0
  CHECK((FieldElement::one(3) + z3 + z3 * z3).is_zero());

  std::mt19937_64 rng(12345);
  for (long M : {1L, 4L, 6L, 8L, 12L}) {
    for (int trial = 0; trial < 20; ++trial) {
      FieldElement a = random_element(M, rng), b = random_element(M, rng),
                   c = random_element(M, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("embed is a ring homomorphism and descends back") {
  CHECK(FieldElement::zeta(4).embed(8) == FieldElement::zeta(8, 2));
  CHECK(FieldElement(1, {rat(3, 2)}).embed(6) == FieldElement(6, {rat(3, 2)}));
  CHECK(FieldElement::zeta(6).embed(12) == FieldElement::zeta(12, 2));
  CHECK_THROWS_AS(FieldElement::zeta(4).embed(6), NonDivisibleConductor);

  std::mt19937_64 rng(99);
  for (auto [M, M2] : {std::pair<long, long>{4, 8}, {6, 12}, {3, 12}, {8, 24}}) {
    for (int trial = 0; trial < 15; ++trial) {
      FieldElement a = random_element(M, rng), b = random_element(M, rng);
      CHECK((a + b).embed(M2) == a.embed(M2) + b.embed(M2));
      CHECK((a * b).embed(M2) == a.embed(M2) * b.embed(M2));
      auto back = a.embed(M2).try_descend(M);
      REQUIRE(back.has_value());
      CHECK(*back == a);
    }
  }
  // an element genuinely outside the subfield does not descend
  CHECK_FALSE(FieldElement::zeta(8).try_descend(4).has_value());
}

TEST_CASE("order_of matches M/gcd(M,e) for all conductors up to 24") {
  for (long M = 1; M <= 24; ++M) {
    for (long e = 0; e < M; ++e) {
      auto n = order_of(FieldElement::zeta(M, e));
      REQUIRE(n.has_value());
      long g = e == 0 ? M : gcd_long(M, e);
      CHECK(*n == M / g);
    }
  }
  CHECK(order_of(FieldElement(4, {rat(-1)})) == 2);
  CHECK_FALSE(order_of(FieldElement::zero(6)).has_value());
  CHECK_FALSE(order_of(FieldElement(4, {rat(2)})).has_value());
  CHECK_FALSE(order_of(FieldElement::zeta(8) + FieldElement::one(8)).has_value());
}

TEST_CASE("kernel: basic shapes") {
  SUBCASE("identity has trivial kernel") {
    ExactMatrix I = ExactMatrix::identity(3);
    CHECK(kernel(I).empty());
  }
  SUBCASE("zero 2x3 has full kernel") {
    ExactMatrix Z(2, 3);
    CHECK(kernel(Z).size() == 3);
  }
  SUBCASE("[[1,-1]] kernel is (1,1) up to scale") {
    ExactMatrix A(1, 2);
    A.set(0, 0, FieldElement::one());
    A.set(0, 1, -FieldElement::one());
    auto basis = kernel(A);
    REQUIRE(basis.size() == 1);
    const auto& v = basis[0];
    REQUIRE(v.count(0));
    REQUIRE(v.count(1));
    CHECK(v.at(0) == v.at(1));
  }
}

TEST_CASE("kernel vectors annihilate and rank-nullity holds") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 12; ++trial) {
    long rows = 3 + static_cast<long>(rng() % 4), cols = 3 + static_cast<long>(rng() % 4);
    ExactMatrix A(rows, cols);
    for (long r = 0; r < rows; ++r)
      for (long c = 0; c < cols; ++c)
        if (rng() % 2) A.set(r, c, random_element(4, rng));
    auto basis = kernel(A);
    CHECK(static_cast<long>(basis.size()) == cols - rank(A));
    for (const auto& v : basis) {
      auto Av = A.apply(v);
      CHECK(Av.empty());
    }
  }
}

TEST_CASE("inverse and rank factorization") {
  std::mt19937_64 rng(7);
  ExactMatrix A(4, 4);
  for (long r = 0; r < 4; ++r)
    for (long c = 0; c < 4; ++c) A.set(r, c, random_element(4, rng));
  auto inv = inverse(A);
  if (inv) CHECK(*inv * A == ExactMatrix::identity(4));

  ExactMatrix B(3, 4);  // rank <= 2 by construction: row2 = row0 + row1
  for (long c = 0; c < 4; ++c) {
    FieldElement x = random_element(4, rng), y = random_element(4, rng);
    B.set(0, c, x);
    B.set(1, c, y);
    B.set(2, c, x + y);
  }
  auto [C, R] = rank_factorization(B);
  CHECK(C.cols() == rank(B));
  CHECK(C * R == B);
}

TEST_CASE("nth roots in cyclotomic fields") {
  SUBCASE("sqrt(-2) in Q(zeta_8)") {
    FieldElement m2 = FieldElement(8, {rat(-2)});
    auto y = nth_root_in_field(m2, 2);
    REQUIRE(y.has_value());
    CHECK(*y * *y == m2);
    // the answer is +-(zeta_8 - zeta_8^{-1})
    FieldElement ref = FieldElement::zeta(8, 1) - FieldElement::zeta(8, 7);
    CHECK((*y == ref || *y == -ref));
  }
  SUBCASE("cbrt(8) = 2 over Q") {
    auto y = nth_root_in_field(FieldElement(1, {rat(8)}), 3);
    REQUIRE(y.has_value());
    CHECK(*y == FieldElement(1, {rat(2)}));
  }
  SUBCASE("sqrt(2) does not exist in Q(zeta_4)") {
    // independent check: no a+bi with small rational a,b squares to 2,
    // and algebraically (a+bi)^2 = 2 forces 2ab = 0, then a^2 = 2 or
    // -b^2 = 2, neither solvable in Q
    for (long an = -12; an <= 12; ++an)
      for (long ad = 1; ad <= 4; ++ad)
        for (long bn = -12; bn <= 12; ++bn)
          for (long bd = 1; bd <= 4; ++bd) {
            FieldElement cand(4, {rat(an, ad), rat(bn, bd)});
            CHECK(cand * cand != FieldElement(4, {rat(2)}));
          }
    CHECK_FALSE(nth_root_in_field(FieldElement(4, {rat(2)}), 2).has_value());
  }
  SUBCASE("sqrt via Gauss sums") {
    for (auto [d, M] : {std::pair<long, long>{5, 5}, {2, 8}, {3, 12}, {6, 24}, {10, 40}}) {
      auto r = sqrt_rational_in_field(Rational(d), M);
      REQUIRE(r.has_value());
      CHECK(*r * *r == FieldElement(M, {Rational(d)}));
    }
    CHECK_FALSE(sqrt_rational_in_field(Rational(3), 8).has_value());
  }
  SUBCASE("higher roots with unit contributions") {
    // y^4 = 16 over Q(zeta_8): y = 2 * zeta_8^e works for e with 4e = 0 mod 8
    auto y = nth_root_in_field(FieldElement(8, {rat(16)}), 4);
    REQUIRE(y.has_value());
    CHECK(y->pow(4) == FieldElement(8, {rat(16)}));
    // y^3 = -8 over Q: y = -2
    auto z = nth_root_in_field(FieldElement(1, {rat(-8)}), 3);
    REQUIRE(z.has_value());
    CHECK(*z == FieldElement(1, {rat(-2)}));
    // enlarging the field finds roots absent over the base: sqrt(-2) needs zeta_8
    CHECK_FALSE(nth_root_in_field(FieldElement(1, {rat(-2)}), 2).has_value());
    CHECK(nth_root_in_field(FieldElement(1, {rat(-2)}), 2, 8).has_value());
  }
}

TEST_CASE("roots of unity of the field") {
  CHECK(all_roots_of_unity(4).size() == 4);   // +-1, +-i
  CHECK(all_roots_of_unity(3).size() == 6);   // +-zeta_3^k
  CHECK(all_roots_of_unity(8).size() == 8);
  for (long s = 0; s < 12; ++s) {
    FieldElement u = unit_root(3, s);  // 6th roots inside Q(zeta_3)
    CHECK(u.pow(6).is_one());
  }
  CHECK(unit_root(3, 1).pow(2) == FieldElement::zeta(3));
}
