#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/hopf.hpp"

using namespace hopfkit;

namespace {

const RootOfUnity kMinusOne{2, 1};
const RootOfUnity kZeta3{3, 1};
const RootOfUnity kZeta4{4, 1};

HopfData& h8() {
  static HopfData h = build(make_HA(2, 4, 1, kMinusOne, FieldElement::one()));
  return h;
}
HopfData& u211() {
  static HopfData h = build(make_U(2, 1, kMinusOne));
  return h;
}

AlgebraElement basis_elt(const HopfData& h, long i, long j = 0, long l = 0) {
  return {{h.index_of(i, j, l), FieldElement::one(h.conductor)}};
}

}  // namespace

TEST_CASE("H8 products match the defining relations") {
  const HopfData& h = h8();
  CHECK(h.dim == 8);
  AlgebraElement a = basis_elt(h, 1), x = basis_elt(h, 0, 1);
  // x * x = a^2 - 1
  AlgebraElement xx = multiply(h, x, x);
  AlgebraElement expect = sub(basis_elt(h, 2), h.unit);
  CHECK(xx == expect);
  // x * a = -a * x
  CHECK(multiply(h, x, a) == scalar_mul(FieldElement(Rational(-1)), multiply(h, a, x)));
  // a * a^3 = 1
  CHECK(multiply(h, a, basis_elt(h, 3)) == h.unit);
  // 1 * v = v for arbitrary combinations
  AlgebraElement v = add(scalar_mul(FieldElement(Rational(7)), basis_elt(h, 2, 1)), x);
  CHECK(multiply(h, h.unit, v) == v);
}

TEST_CASE("Delta is multiplicative on the H8 witness x*x") {
  const HopfData& h = h8();
  // Delta(x)^2 = x^2 (x) a^2 + 1 (x) x^2 after the cross terms cancel, and
  // both sides reduce to a^2 (x) a^2 - 1 (x) 1 on the PBW basis
  AlgebraElement x = basis_elt(h, 0, 1);
  PairTensor dx = comult_eval(h, x);
  PairTensor dx2 = pair_multiply(h, dx, dx);
  PairTensor expect;
  long a2 = h.index_of(2, 0, 0), unit = h.index_of(0, 0, 0);
  expect[{a2, a2}] = FieldElement::one(h.conductor);
  expect[{unit, unit}] = FieldElement(Rational(-1)).embed(h.conductor);
  CHECK(dx2 == expect);
  CHECK(comult_eval(h, multiply(h, x, x)) == dx2);
}

TEST_CASE("H8 antipode images and inverse") {
  const HopfData& h = h8();
  // s(x) = -q^{-nu} a^{-nu} x = a^3 x
  AlgebraElement sx = apply_matrix(h.antipode, basis_elt(h, 0, 1));
  CHECK(sx == basis_elt(h, 3, 1));
  ExactMatrix sinv = antipode_inverse(h);
  CHECK(sinv * h.antipode == ExactMatrix::identity(h.dim));
}

TEST_CASE("Hopf axioms pass for built algebras") {
  CHECK(verify_hopf_axioms(h8()).ok());
  CHECK(verify_hopf_axioms(u211()).ok());
  HopfData kz4 = build(make_H(1, 4, 1, RootOfUnity{1, 0}));
  CHECK(kz4.dim == 4);
  CHECK(verify_hopf_axioms(kz4).ok());
}

TEST_CASE("tampered antipode is caught at b = x") {
  HopfData h = build(make_HA(2, 4, 1, kMinusOne, FieldElement::one()));
  long xi = h.index_of(0, 1, 0);
  // flip the sign of s(x)
  for (long r = 0; r < h.dim; ++r) {
    FieldElement v = h.antipode.get(r, xi);
    if (!v.is_zero()) h.antipode.set(r, xi, -v);
  }
  AxiomReport rep = verify_hopf_axioms(h);
  CHECK_FALSE(rep.antipode_axiom);
  CHECK(rep.first_failure.find("antipode") != std::string::npos);
  CHECK(rep.first_failure.find("X") != std::string::npos);
}

TEST_CASE("q-binomial identity (a+x)^n = a^n + x^n in each built algebra") {
  auto check = [](const HopfData& h) {
    REQUIRE(h.pres.has_value());
    const Presentation& p = *h.pres;
    long n = p.n;
    AlgebraElement a = basis_elt(h, 1);
    if (h.has_x()) {
      AlgebraElement ax = add(a, basis_elt(h, 0, 1, 0));
      CHECK(power(h, ax, n) == add(power(h, a, n), power(h, basis_elt(h, 0, 1, 0), n)));
    }
    if (h.has_y()) {
      // ya = q^{-1} ay, and q^{-1} is also a primitive nth root
      AlgebraElement ay = add(a, basis_elt(h, 0, 0, 1));
      CHECK(power(h, ay, n) == add(power(h, a, n), power(h, basis_elt(h, 0, 0, 1), n)));
    }
  };
  check(h8());
  check(u211());
  check(build(make_HA(3, 6, 1, kZeta3, FieldElement::one())));
  check(build(make_H(4, 4, 1, kZeta4)));
}

TEST_CASE("Delta(x^r) = x^r (x) a^{nu r} + 1 (x) x^r before the power rule collapses it") {
  // computed in the quotient with the x-power rule removed, i.e. in the free
  // bialgebra T(C)/(group and straightening relations only)
  for (Presentation p : {make_HA(2, 4, 1, kMinusOne, FieldElement::one()),
                         make_HA(3, 6, 1, kZeta3, FieldElement::one()),
                         make_H(4, 4, 1, kZeta4)}) {
    auto rules = emit_rules(p);
    std::vector<Rule> partial;
    Word xpow(static_cast<size_t>(p.r), 'X');
    for (const auto& r : rules)
      if (r.lhs != xpow) partial.push_back(r);
    RewriteSystem rs(partial, "ABDX");

    using FreePair = std::map<std::pair<Word, Word>, FieldElement>;
    auto normalize = [&](const Word& w1, const Word& w2, const FieldElement& c, FreePair& acc) {
      FreeElement n1 = rs.normal_form_word(w1), n2 = rs.normal_form_word(w2);
      for (const auto& [u1, c1] : n1.terms())
        for (const auto& [u2, c2] : n2.terms()) {
          auto key = std::make_pair(u1, u2);
          auto it = acc.find(key);
          FieldElement add = c * c1 * c2;
          if (it == acc.end())
            acc.emplace(key, add);
          else {
            it->second += add;
            if (it->second.is_zero()) acc.erase(it);
          }
        }
    };
    auto mul = [&](const FreePair& s, const FreePair& t) {
      FreePair out;
      for (const auto& [ks, cs] : s)
        for (const auto& [kt, ct] : t)
          normalize(ks.first + kt.first, ks.second + kt.second, cs * ct, out);
      return out;
    };

    FreePair dx;
    Word anu(static_cast<size_t>(p.nu), 'A');
    dx[{Word("X"), anu}] = FieldElement::one(p.conductor);
    dx[{Word(""), Word("X")}] = FieldElement::one(p.conductor);
    FreePair acc;
    acc[{Word(""), Word("")}] = FieldElement::one(p.conductor);
    for (long k = 0; k < p.r; ++k) acc = mul(acc, dx);

    FreePair expect;
    normalize(xpow, Word(static_cast<size_t>(p.nu * p.r), 'A'), FieldElement::one(p.conductor), expect);
    normalize(Word(""), xpow, FieldElement::one(p.conductor), expect);
    CHECK(acc == expect);
  }
}

TEST_CASE("tensor products multiply slotwise") {
  const HopfData& h = h8();
  AlgebraElement x = basis_elt(h, 0, 1), a = basis_elt(h, 1), one = h.unit;
  TensorElement xa = tensor_of({x, a}), ox = tensor_of({one, x});
  // (1 (x) 1) * u = u
  TensorElement unit2 = tensor_of({one, one});
  CHECK(tensor_multiply(h, unit2, xa) == xa);
  // (x (x) a)(1 (x) x) = x (x) ax
  CHECK(tensor_multiply(h, xa, ox) == tensor_of({x, basis_elt(h, 1, 1)}));
  // (x (x) a)(x (x) a) = (a^2 - 1) (x) a^2
  TensorElement sq = tensor_multiply(h, xa, xa);
  CHECK(sq == tensor_of({sub(basis_elt(h, 2), one), basis_elt(h, 2)}));
  // order mismatch is rejected
  CHECK_THROWS_AS(tensor_multiply(h, unit2, tensor_of({x, a, one})), OrderMismatch);
}

TEST_CASE("exactly the N powers of a are grouplike basis monomials") {
  for (const HopfData* h : {&h8(), &u211()}) {
    auto gs = grouplike_basis_monomials(*h);
    CHECK(static_cast<long>(gs.size()) == h->pres->N);
    for (long g : gs) CHECK(h->monomial_of(g).j == 0);
  }
}

TEST_CASE("dimensions match N*r and N*r^2 across families") {
  CHECK(build(make_H(2, 4, 1, kMinusOne)).dim == 8);
  CHECK(build(make_H(4, 4, 1, kZeta4)).dim == 16);
  CHECK(build(make_HA(3, 6, 1, kZeta3, FieldElement::one())).dim == 18);
  CHECK(build(make_U(6, 3, RootOfUnity{6, 1})).dim == 24);
  HopfData ua = build(make_presentation(Family::UA, 3, 6, 1, kZeta3, FieldElement::one(),
                                        FieldElement::one(), FieldElement::one()));
  CHECK(ua.dim == 54);
  CHECK(verify_hopf_axioms(ua).ok());
}

TEST_CASE("antipode powers: S^4 = id on U_{(2,1,-1)}") {
  const HopfData& h = u211();
  ExactMatrix S2 = h.antipode * h.antipode;
  ExactMatrix S4 = S2 * S2;
  CHECK(S4 == ExactMatrix::identity(h.dim));
  // group algebras have S^2 = id
  HopfData kz = build(make_H(1, 5, 1, RootOfUnity{1, 0}));
  CHECK(kz.antipode * kz.antipode == ExactMatrix::identity(kz.dim));
  CHECK(antipode_inverse(kz) == kz.antipode);
}
