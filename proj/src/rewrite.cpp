#include "hopfkit/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopfkit {

FreeElement FreeElement::monomial(const Word& w, const FieldElement& c) {
  FreeElement e;
  e.add(w, c);
  return e;
}

void FreeElement::add(const Word& w, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
  FreeElement out = *this;
  for (const auto& [w, c] : o.terms_) out.add(w, c);
  return out;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
  FreeElement out = *this;
  for (const auto& [w, c] : o.terms_) out.add(w, -c);
  return out;
}

FreeElement FreeElement::operator*(const FieldElement& c) const {
  FreeElement out;
  for (const auto& [w, v] : terms_) out.add(w, v * c);
  return out;
}

FreeElement FreeElement::concat(const Word& left, const Word& right) const {
  FreeElement out;
  for (const auto& [w, c] : terms_) out.add(left + w + right, c);
  return out;
}

RewriteSystem::RewriteSystem(std::vector<Rule> rules, std::string generators)
    : generators_(std::move(generators)) {
  for (auto& r : rules) {
    FreeElement rhs;
    for (auto& [w, c] : r.rhs) rhs.add(w, c);
    // every rhs monomial must be strictly smaller than lhs
    WordOrder lt;
    for (const auto& [w, c] : rhs.terms())
      if (!lt(w, r.lhs))
        throw std::invalid_argument("rule is not order-decreasing: " + r.lhs + " -> " + w);
    rules_.emplace_back(r.lhs, std::move(rhs));
  }
}

RewriteSystem RewriteSystem::from_presentation(const Presentation& p) {
  std::string gens = p.has_y() ? "ABDXY" : "ABDX";
  return RewriteSystem(emit_rules(p), gens);
}

std::optional<std::pair<size_t, size_t>> RewriteSystem::leftmost_redex(const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos)
    for (size_t ri = 0; ri < rules_.size(); ++ri) {
      const Word& l = rules_[ri].first;
      if (l.size() <= w.size() - pos && w.compare(pos, l.size(), l) == 0) return {{pos, ri}};
    }
  return std::nullopt;
}

FreeElement RewriteSystem::normal_form_word(const Word& w) const {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  auto redex = leftmost_redex(w);
  FreeElement result;
  if (!redex) {
    result = FreeElement::monomial(w);
  } else {
    auto [pos, ri] = *redex;
    const Word& l = rules_[ri].first;
    Word prefix = w.substr(0, pos);
    Word suffix = w.substr(pos + l.size());
    FreeElement replaced = rules_[ri].second.concat(prefix, suffix);
    for (const auto& [u, c] : replaced.terms()) {
      FreeElement nf = normal_form_word(u);
      for (const auto& [v, d] : nf.terms()) result.add(v, c * d);
    }
  }
  memo_.emplace(w, result);
  return result;
}

FreeElement RewriteSystem::normal_form(const FreeElement& e) const {
  FreeElement out;
  for (const auto& [w, c] : e.terms()) {
    FreeElement nf = normal_form_word(w);
    for (const auto& [v, d] : nf.terms()) out.add(v, c * d);
  }
  return out;
}

FreeElement RewriteSystem::normal_form_random(const FreeElement& e, std::mt19937_64& rng) const {
  FreeElement cur = e;
  for (;;) {
    // collect all redexes over all terms
    std::vector<std::tuple<Word, size_t, size_t>> redexes;
    for (const auto& [w, c] : cur.terms())
      for (size_t pos = 0; pos < w.size(); ++pos)
        for (size_t ri = 0; ri < rules_.size(); ++ri) {
          const Word& l = rules_[ri].first;
          if (l.size() <= w.size() - pos && w.compare(pos, l.size(), l) == 0)
            redexes.emplace_back(w, pos, ri);
        }
    if (redexes.empty()) return cur;
    auto [w, pos, ri] = redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(rng)];
    FieldElement c = cur.terms().at(w);
    const Word& l = rules_[ri].first;
    FreeElement step;
    step.add(w, -c);
    FreeElement replaced = rules_[ri].second.concat(w.substr(0, pos), w.substr(pos + l.size()));
    cur = cur + step + replaced * c;
  }
}

bool RewriteSystem::is_irreducible(const Word& w) const { return !leftmost_redex(w).has_value(); }

std::vector<Word> RewriteSystem::irreducible_words(size_t cap) const {
  // Irreducibility is inherited by prefixes, so a breadth-first extension by
  // single letters enumerates the whole set when it is finite.
  std::vector<Word> out;
  std::deque<Word> queue = {Word()};
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    out.push_back(w);
    if (out.size() > cap) throw std::length_error("irreducible word enumeration exceeded cap");
    for (char g : generators_) {
      Word ext = w + g;
      // only suffixes ending at the new letter can create a redex
      bool reducible = false;
      for (size_t ri = 0; ri < rules_.size() && !reducible; ++ri) {
        const Word& l = rules_[ri].first;
        if (l.size() <= ext.size() && ext.compare(ext.size() - l.size(), l.size(), l) == 0)
          reducible = true;
      }
      if (!reducible) queue.push_back(ext);
    }
  }
  std::sort(out.begin(), out.end(), DegLex());
  return out;
}

bool ConfluenceReport::all_resolved() const {
  return std::all_of(overlaps.begin(), overlaps.end(), [](const Overlap& o) { return o.resolved; });
}

nlohmann::json ConfluenceReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& o : overlaps) {
    arr.push_back(nlohmann::json{{"overlap_word", word_to_string(o.word)},
                                 {"rule1", o.rule1},
                                 {"rule2", o.rule2},
                                 {"inclusion", o.inclusion},
                                 {"branch1_nf", free_element_to_string(o.branch1)},
                                 {"branch2_nf", free_element_to_string(o.branch2)},
                                 {"resolved", o.resolved}});
  }
  return nlohmann::json{{"overlaps", arr}, {"all_resolved", all_resolved()}};
}

ConfluenceReport check_confluence(const RewriteSystem& rs) {
  ConfluenceReport report;
  std::set<std::tuple<Word, size_t, size_t>> seen;
  for (size_t i = 0; i < rs.rule_count(); ++i) {
    for (size_t j = 0; j < rs.rule_count(); ++j) {
      const Word& l1 = rs.lhs(i);
      const Word& l2 = rs.lhs(j);
      // proper overlaps: a nonempty proper suffix of l1 equals a prefix of l2
      for (size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
        Word w = l1 + l2.substr(k);
        if (!seen.insert({w, i, j}).second) continue;
        Overlap o;
        o.word = w;
        o.rule1 = i;
        o.rule2 = j;
        o.inclusion = false;
        // apply rule i at position 0 / rule j at position l1.size()-k
        o.branch1 = rs.normal_form(rs.rhs(i).concat("", l2.substr(k)));
        o.branch2 = rs.normal_form(rs.rhs(j).concat(l1.substr(0, l1.size() - k), ""));
        o.resolved = (o.branch1 == o.branch2);
        report.overlaps.push_back(std::move(o));
      }
      // inclusion ambiguities (l2 strictly inside l1); the family rule shapes
      // never produce one, but we check rather than assume
      if (i != j && l2.size() < l1.size()) {
        for (size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (l1.compare(pos, l2.size(), l2) != 0) continue;
          Overlap o;
          o.word = l1;
          o.rule1 = i;
          o.rule2 = j;
          o.inclusion = true;
          o.branch1 = rs.normal_form(rs.rhs(i));
          o.branch2 = rs.normal_form(rs.rhs(j).concat(l1.substr(0, pos), l1.substr(pos + l2.size())));
          o.resolved = (o.branch1 == o.branch2);
          report.overlaps.push_back(std::move(o));
        }
      }
    }
  }
  return report;
}

std::string word_to_string(const Word& w) { return w.empty() ? "1" : w; }

std::string free_element_to_string(const FreeElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << word_to_string(w);
  }
  return os.str();
}

}  // namespace hopfkit
