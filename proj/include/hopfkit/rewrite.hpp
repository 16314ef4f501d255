#pragma once

// Linear noncommutative rewriting over the free algebra k{A,B,D,X,Y}.
//
// Rules map a word to a polynomial and must be decreasing for the monomial
// order that compares (count of non-A letters, length, then lex with
// A < B < D < X < Y).  Plain degree-lex cannot orient rules whose right-hand
// side is a long A-run (B -> A^nu with nu > 1, or X^n -> A^{nu n} - 1); the
// weighted order is concatenation-compatible and well-founded, so it still
// certifies termination of normal_form, and on words of equal A-content it
// coincides with degree-lex.  check_confluence enumerates every overlap
// ambiguity and reduces both branches; by the Diamond Lemma an all-resolved
// report certifies that the irreducible words form a linear basis of the
// quotient.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopfkit/cyclotomic.hpp"
#include "hopfkit/presentation.hpp"
#include "vendor_json_fwd.hpp"

namespace hopfkit {

using Word = std::string;

struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// The rewriting order: non-A letters weigh more than any A-run that can
// replace them.
struct WordOrder {
  static long heavy(const Word& w) {
    long k = 0;
    for (char c : w) k += (c != 'A');
    return k;
  }
  bool operator()(const Word& a, const Word& b) const {
    long ha = heavy(a), hb = heavy(b);
    if (ha != hb) return ha < hb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Sparse free-algebra element; zero coefficients are never stored.
class FreeElement {
 public:
  FreeElement() = default;
  static FreeElement monomial(const Word& w, const FieldElement& c = FieldElement::one());

  void add(const Word& w, const FieldElement& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, FieldElement, DegLex>& terms() const { return terms_; }

  FreeElement operator+(const FreeElement& o) const;
  FreeElement operator-(const FreeElement& o) const;
  FreeElement operator*(const FieldElement& c) const;
  FreeElement concat(const Word& left, const Word& right) const;  // left * this * right
  bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }

 private:
  std::map<Word, FieldElement, DegLex> terms_;
};

class RewriteSystem {
 public:
  RewriteSystem(std::vector<Rule> rules, std::string generators);
  static RewriteSystem from_presentation(const Presentation& p);

  const std::string& generators() const { return generators_; }
  size_t rule_count() const { return rules_.size(); }
  const Word& lhs(size_t i) const { return rules_[i].first; }
  const FreeElement& rhs(size_t i) const { return rules_[i].second; }

  // Leftmost-innermost reduction with memoization; pure and deterministic.
  FreeElement normal_form(const FreeElement& e) const;
  FreeElement normal_form_word(const Word& w) const;
  // Reduction applying a uniformly random redex each step (strategy-
  // independence tests); never consults the memo cache.
  FreeElement normal_form_random(const FreeElement& e, std::mt19937_64& rng) const;

  bool is_irreducible(const Word& w) const;
  // All irreducible words, deg-lex sorted; throws std::length_error past cap.
  std::vector<Word> irreducible_words(size_t cap = 100000) const;

 private:
  std::vector<std::pair<Word, FreeElement>> rules_;
  std::string generators_;  // letters that may appear
  mutable std::map<Word, FreeElement, DegLex> memo_;
  std::optional<std::pair<size_t, size_t>> leftmost_redex(const Word& w) const;  // (pos, rule)
};

struct Overlap {
  Word word;            // the ambiguous word
  size_t rule1, rule2;  // indices into the rule list
  bool inclusion;       // true when lhs2 sits inside lhs1 (never expected)
  FreeElement branch1, branch2;
  bool resolved;
};

struct ConfluenceReport {
  std::vector<Overlap> overlaps;
  bool all_resolved() const;
  nlohmann::json to_json() const;
};

ConfluenceReport check_confluence(const RewriteSystem& rs);

std::string word_to_string(const Word& w);  // "" -> "1"
std::string free_element_to_string(const FreeElement& e);

}  // namespace hopfkit
