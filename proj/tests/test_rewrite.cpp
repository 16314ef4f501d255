#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfkit/presentation.hpp"
#include "hopfkit/rewrite.hpp"

using namespace hopfkit;

namespace {

const RootOfUnity kMinusOne{2, 1};
const RootOfUnity kZeta3{3, 1};

Presentation h8() { return make_HA(2, 4, 1, kMinusOne, FieldElement::one()); }
Presentation u211() { return make_U(2, 1, kMinusOne); }

FreeElement random_free_element(const std::string& gens, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 4), len(0, 7), coeff(-5, 5);
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  FreeElement e;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Word w;
    int L = len(rng);
    for (int k = 0; k < L; ++k) w += gens[pick(rng)];
    e.add(w, FieldElement(4, {rat(coeff(rng)), rat(coeff(rng))}));
  }
  return e;
}

}  // namespace

TEST_CASE("normal forms of the named words") {
  RewriteSystem rs = RewriteSystem::from_presentation(h8());
  // XA -> -AX
  FreeElement nf = rs.normal_form_word("XA");
  FreeElement expect;
  expect.add("AX", FieldElement(4, {rat(-1)}));
  CHECK(nf == expect);
  // X^2 -> A^2 - 1
  nf = rs.normal_form_word("XX");
  expect = FreeElement();
  expect.add("AA", FieldElement::one(4));
  expect.add("", FieldElement(4, {rat(-1)}));
  CHECK(nf == expect);

  // In U_{(2,1,-1)} the rule reads YX -> -XY + A^2 - 1, and A^2 - 1 then
  // collapses under A^2 -> 1, so the normal form is just -XY.
  RewriteSystem ru = RewriteSystem::from_presentation(u211());
  nf = ru.normal_form_word("YX");
  long M = u211().conductor;
  expect = FreeElement();
  expect.add("XY", FieldElement(M, {rat(-1)}));
  CHECK(nf == expect);
  // on a U instance whose group relation does not absorb a^{2 nu}, the
  // gamma terms survive in the normal form
  Presentation u41 = make_U(4, 1, RootOfUnity{4, 1});
  RewriteSystem ru41 = RewriteSystem::from_presentation(u41);
  nf = ru41.normal_form_word("YX");
  long M4 = u41.conductor;
  expect = FreeElement();
  expect.add("XY", FieldElement::zeta(4, 3).embed(M4));  // q^{-nu} = -i
  expect.add("AA", FieldElement::one(M4));
  expect.add("", FieldElement(M4, {rat(-1)}));
  CHECK(nf == expect);
}

TEST_CASE("normal forms are irreducible") {
  RewriteSystem rs = RewriteSystem::from_presentation(u211());
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    FreeElement e = random_free_element("ABDXY", rng);
    FreeElement nf = rs.normal_form(e);
    for (const auto& [w, c] : nf.terms()) CHECK(rs.is_irreducible(w));
  }
}

TEST_CASE("confluence of valid family systems, including the named overlaps") {
  SUBCASE("HA") {
    for (Presentation p : {h8(), make_HA(3, 6, 1, kZeta3, FieldElement::one()),
                           make_H(2, 4, 1, kMinusOne), make_H(4, 4, 1, RootOfUnity{4, 1})}) {
      RewriteSystem rs = RewriteSystem::from_presentation(p);
      ConfluenceReport rep = check_confluence(rs);
      CHECK(rep.all_resolved());
      // no inclusion ambiguities with these rule shapes
      for (const auto& o : rep.overlaps) CHECK_FALSE(o.inclusion);
      if (p.r > 1) {
        // the overlap (X^{r-1} X) A = X^{r-1} (X A) shows up as the word X^r A
        Word named(static_cast<size_t>(p.r), 'X');
        named += 'A';
        bool found = false;
        for (const auto& o : rep.overlaps) found |= (o.word == named);
        CHECK(found);
      }
    }
  }
  SUBCASE("U and UA") {
    for (Presentation p :
         {u211(), make_U(6, 3, RootOfUnity{6, 1}),
          make_presentation(Family::UA, 3, 6, 1, kZeta3, FieldElement::one(),
                            FieldElement::one(), FieldElement::one())}) {
      RewriteSystem rs = RewriteSystem::from_presentation(p);
      ConfluenceReport rep = check_confluence(rs);
      CHECK(rep.all_resolved());
      // the overlap (Y X) X^{r-1} = Y (X X^{r-1}) shows up as the word Y X^r
      Word named = "Y" + Word(static_cast<size_t>(p.r), 'X');
      bool found = false;
      for (const auto& o : rep.overlaps) found |= (o.word == named);
      CHECK(found);
    }
  }
}

TEST_CASE("tampered power rule breaks local confluence with a witness") {
  Presentation p = h8();
  auto rules = emit_rules(p);
  // replace X^n by X^{n+1} keeping the nonzero right-hand side
  for (auto& r : rules)
    if (r.lhs == "XX") r.lhs = "XXX";
  RewriteSystem rs(rules, "ABDX");
  ConfluenceReport rep = check_confluence(rs);
  CHECK_FALSE(rep.all_resolved());
  bool witnessed = false;
  for (const auto& o : rep.overlaps)
    if (!o.resolved) {
      witnessed = true;
      CHECK(o.branch1 != o.branch2);
    }
  CHECK(witnessed);
}

TEST_CASE("irreducible words are exactly the PBW monomials") {
  auto census = [](const Presentation& p) {
    RewriteSystem rs = RewriteSystem::from_presentation(p);
    auto words = rs.irreducible_words();
    CHECK(static_cast<long>(words.size()) == p.dim());
    for (const auto& w : words) {
      // shape A^i X^j Y^l with i < N, j,l < r
      size_t i = 0;
      while (i < w.size() && w[i] == 'A') ++i;
      size_t j = i;
      while (j < w.size() && w[j] == 'X') ++j;
      size_t l = j;
      while (l < w.size() && w[l] == 'Y') ++l;
      CHECK(l == w.size());
      CHECK(static_cast<long>(i) < p.N);
      CHECK(static_cast<long>(j - i) < std::max(p.r, 2L));
      CHECK(static_cast<long>(w.size() - j) < std::max(p.r, 2L));
    }
  };
  census(h8());
  census(u211());
  census(make_H(1, 6, 1, RootOfUnity{1, 0}));  // kZ_6
  census(make_presentation(Family::UA, 3, 6, 1, kZeta3, FieldElement::one(),
                           FieldElement::one(), FieldElement::one()));
}

TEST_CASE("reduction strategy does not change normal forms") {
  std::mt19937_64 rng(31337);
  for (Presentation p : {h8(), u211()}) {
    RewriteSystem rs = RewriteSystem::from_presentation(p);
    std::string gens = p.has_y() ? "ABDXY" : "ABDX";
    for (int trial = 0; trial < 50; ++trial) {
      FreeElement e = random_free_element(gens, rng);
      FreeElement nf = rs.normal_form(e);
      FreeElement nfr = rs.normal_form_random(e, rng);
      CHECK(nf == nfr);
    }
  }
}
