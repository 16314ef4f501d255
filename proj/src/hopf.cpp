#include "hopfkit/hopf.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

namespace hopfkit {

// --- TensorElement -----------------------------------------------------------

void TensorElement::add(const std::vector<long>& key, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  if (order != o.order) throw OrderMismatch("tensor order mismatch in +");
  TensorElement out = *this;
  for (const auto& [k, c] : o.terms) out.add(k, c);
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  if (order != o.order) throw OrderMismatch("tensor order mismatch in -");
  TensorElement out = *this;
  for (const auto& [k, c] : o.terms) out.add(k, -c);
  return out;
}

TensorElement TensorElement::operator*(const FieldElement& c) const {
  TensorElement out;
  out.order = order;
  for (const auto& [k, v] : terms) out.add(k, v * c);
  return out;
}

// --- HopfData indexing -------------------------------------------------------

long HopfData::index_of(long i, long j, long l) const {
  assert(pres.has_value());
  assert(0 <= j && j < rx && 0 <= l && l < ry);
  i = ((i % N) + N) % N;
  return (i * rx + j) * ry + l;
}

BasisMonomial HopfData::monomial_of(long idx) const {
  BasisMonomial m;
  m.l = idx % ry;
  m.j = (idx / ry) % rx;
  m.i = idx / (ry * rx);
  return m;
}

// --- element operations --------------------------------------------------------

AlgebraElement scalar_mul(const FieldElement& c, const AlgebraElement& u) {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [b, v] : u) {
    FieldElement w = c * v;
    if (!w.is_zero()) out[b] = w;
  }
  return out;
}

AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) {
  AlgebraElement out = u;
  for (const auto& [b, c] : v) {
    auto it = out.find(b);
    if (it == out.end()) {
      out.emplace(b, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

AlgebraElement sub(const AlgebraElement& u, const AlgebraElement& v) {
  return add(u, scalar_mul(FieldElement(Rational(-1)), v));
}

AlgebraElement multiply(const HopfData& h, const AlgebraElement& u, const AlgebraElement& v) {
  AlgebraElement out;
  for (const auto& [b, cb] : u) {
    if (b >= h.dim) throw DimensionMismatch("element index out of range");
    for (const auto& [c, cc] : v) {
      FieldElement f = cb * cc;
      for (const auto& [k, m] : h.mult[static_cast<size_t>(b)][static_cast<size_t>(c)]) {
        auto it = out.find(k);
        if (it == out.end()) {
          FieldElement w = f * m;
          if (!w.is_zero()) out.emplace(k, w);
        } else {
          it->second += f * m;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  }
  return out;
}

AlgebraElement multiply(const HopfData& h, const std::vector<AlgebraElement>& factors) {
  AlgebraElement acc = h.unit;
  for (const auto& f : factors) acc = multiply(h, acc, f);
  return acc;
}

AlgebraElement power(const HopfData& h, const AlgebraElement& u, long k) {
  assert(k >= 0);
  AlgebraElement acc = h.unit;
  for (long i = 0; i < k; ++i) acc = multiply(h, acc, u);
  return acc;
}

FieldElement counit_eval(const HopfData& h, const AlgebraElement& u) {
  FieldElement acc = FieldElement::zero(h.conductor);
  for (const auto& [b, c] : u) acc += h.counit[static_cast<size_t>(b)] * c;
  return acc;
}

PairTensor comult_eval(const HopfData& h, const AlgebraElement& u) {
  PairTensor out;
  for (const auto& [b, c] : u) {
    for (const auto& [k, m] : h.comult[static_cast<size_t>(b)]) {
      auto it = out.find(k);
      if (it == out.end()) {
        FieldElement w = c * m;
        if (!w.is_zero()) out.emplace(k, w);
      } else {
        it->second += c * m;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

AlgebraElement apply_matrix(const ExactMatrix& m, const AlgebraElement& u) {
  AlgebraElement out;
  for (const auto& [b, c] : u) {
    for (long r = 0; r < m.rows(); ++r) {
      FieldElement v = m.get(r, b);
      if (v.is_zero()) continue;
      auto it = out.find(r);
      if (it == out.end()) {
        out.emplace(r, v * c);
      } else {
        it->second += v * c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

std::string element_to_string(const HopfData& h, const AlgebraElement& u) {
  if (u.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : u) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*"
       << (h.labels.empty() ? std::to_string(b) : h.labels[static_cast<size_t>(b)]);
  }
  return os.str();
}

bool is_grouplike(const HopfData& h, const AlgebraElement& g) {
  if (!counit_eval(h, g).is_one()) return false;
  PairTensor lhs = comult_eval(h, g);
  PairTensor rhs;
  for (const auto& [b, cb] : g)
    for (const auto& [c, cc] : g) {
      FieldElement v = cb * cc;
      if (!v.is_zero()) rhs[{b, c}] = v;
    }
  return lhs == rhs;
}

// --- tensors -----------------------------------------------------------------

TensorElement tensor_of(const std::vector<AlgebraElement>& slots) {
  TensorElement out;
  out.order = static_cast<long>(slots.size());
  std::vector<std::pair<std::vector<long>, FieldElement>> acc = {{{}, FieldElement(Rational(1))}};
  for (const auto& slot : slots) {
    std::vector<std::pair<std::vector<long>, FieldElement>> next;
    for (const auto& [key, c] : acc)
      for (const auto& [b, v] : slot) {
        auto k2 = key;
        k2.push_back(b);
        next.emplace_back(std::move(k2), c * v);
      }
    acc = std::move(next);
  }
  for (auto& [k, c] : acc) out.add(k, c);
  return out;
}

TensorElement tensor_from_pair(const PairTensor& t) {
  TensorElement out;
  out.order = 2;
  for (const auto& [k, c] : t) out.add({k.first, k.second}, c);
  return out;
}

PairTensor pair_from_tensor(const TensorElement& t) {
  assert(t.order == 2);
  PairTensor out;
  for (const auto& [k, c] : t.terms) out[{k[0], k[1]}] = c;
  return out;
}

TensorElement tensor_multiply(const HopfData& h, const TensorElement& u, const TensorElement& v) {
  if (u.order != v.order) throw OrderMismatch("tensor orders differ");
  TensorElement out;
  out.order = u.order;
  for (const auto& [ku, cu] : u.terms) {
    for (const auto& [kv, cv] : v.terms) {
      // slotwise product, expanded across all slots
      std::vector<std::pair<std::vector<long>, FieldElement>> acc = {{{}, cu * cv}};
      for (long s = 0; s < u.order; ++s) {
        const AlgebraElement& prod =
            h.mult[static_cast<size_t>(ku[static_cast<size_t>(s)])][static_cast<size_t>(kv[static_cast<size_t>(s)])];
        std::vector<std::pair<std::vector<long>, FieldElement>> next;
        for (const auto& [key, c] : acc)
          for (const auto& [b, m] : prod) {
            auto k2 = key;
            k2.push_back(b);
            next.emplace_back(std::move(k2), c * m);
          }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      for (auto& [k, c] : acc) out.add(k, c);
    }
  }
  return out;
}

PairTensor pair_multiply(const HopfData& h, const PairTensor& u, const PairTensor& v) {
  PairTensor out;
  for (const auto& [ku, cu] : u) {
    for (const auto& [kv, cv] : v) {
      FieldElement f = cu * cv;
      const AlgebraElement& left = h.mult[static_cast<size_t>(ku.first)][static_cast<size_t>(kv.first)];
      const AlgebraElement& right = h.mult[static_cast<size_t>(ku.second)][static_cast<size_t>(kv.second)];
      for (const auto& [b1, c1] : left)
        for (const auto& [b2, c2] : right) {
          FieldElement w = f * c1 * c2;
          if (w.is_zero()) continue;
          auto it = out.find({b1, b2});
          if (it == out.end()) {
            out.emplace(PairKey{b1, b2}, w);
          } else {
            it->second += w;
            if (it->second.is_zero()) out.erase(it);
          }
        }
    }
  }
  return out;
}

TensorElement expand_comult_slot(const HopfData& h, const TensorElement& t, long slot) {
  TensorElement out;
  out.order = t.order + 1;
  for (const auto& [k, c] : t.terms) {
    for (const auto& [pq, m] : h.comult[static_cast<size_t>(k[static_cast<size_t>(slot)])]) {
      std::vector<long> k2;
      k2.reserve(static_cast<size_t>(out.order));
      for (long s = 0; s < t.order; ++s) {
        if (s == slot) {
          k2.push_back(pq.first);
          k2.push_back(pq.second);
        } else {
          k2.push_back(k[static_cast<size_t>(s)]);
        }
      }
      out.add(k2, c * m);
    }
  }
  return out;
}

TensorElement contract_counit_slot(const HopfData& h, const TensorElement& t, long slot) {
  TensorElement out;
  out.order = t.order - 1;
  for (const auto& [k, c] : t.terms) {
    FieldElement f = c * h.counit[static_cast<size_t>(k[static_cast<size_t>(slot)])];
    if (f.is_zero()) continue;
    std::vector<long> k2;
    for (long s = 0; s < t.order; ++s)
      if (s != slot) k2.push_back(k[static_cast<size_t>(s)]);
    out.add(k2, f);
  }
  return out;
}

TensorElement apply_matrix_slot(const ExactMatrix& m, const TensorElement& t, long slot) {
  TensorElement out;
  out.order = t.order;
  for (const auto& [k, c] : t.terms) {
    for (long r = 0; r < m.rows(); ++r) {
      FieldElement v = m.get(r, k[static_cast<size_t>(slot)]);
      if (v.is_zero()) continue;
      auto k2 = k;
      k2[static_cast<size_t>(slot)] = r;
      out.add(k2, c * v);
    }
  }
  return out;
}

TensorElement swap_slots(const TensorElement& t, long s1, long s2) {
  TensorElement out;
  out.order = t.order;
  for (const auto& [k, c] : t.terms) {
    auto k2 = k;
    std::swap(k2[static_cast<size_t>(s1)], k2[static_cast<size_t>(s2)]);
    out.add(k2, c);
  }
  return out;
}

AlgebraElement contract_pair_multiply(const HopfData& h, const PairTensor& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t) {
    for (const auto& [b, m] : h.mult[static_cast<size_t>(k.first)][static_cast<size_t>(k.second)]) {
      auto it = out.find(b);
      if (it == out.end()) {
        FieldElement w = c * m;
        if (!w.is_zero()) out.emplace(b, w);
      } else {
        it->second += c * m;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

// --- build ---------------------------------------------------------------------

namespace {

Word basis_word(long i, long j, long l) {
  return Word(static_cast<size_t>(i), 'A') + Word(static_cast<size_t>(j), 'X') +
         Word(static_cast<size_t>(l), 'Y');
}

AlgebraElement element_from_free(const HopfData& h, const std::map<Word, long>& index_of_word,
                                 const FreeElement& e, long embed_to) {
  AlgebraElement out;
  for (const auto& [w, c] : e.terms()) {
    auto it = index_of_word.find(w);
    assert(it != index_of_word.end());
    FieldElement v = c.embed(embed_to);
    if (v.is_zero()) continue;
    auto jt = out.find(it->second);
    if (jt == out.end())
      out.emplace(it->second, v);
    else {
      jt->second += v;
      if (jt->second.is_zero()) out.erase(jt);
    }
  }
  return out;
}

}  // namespace

HopfData build(const Presentation& p) {
  RewriteSystem rs = RewriteSystem::from_presentation(p);
  ConfluenceReport conf = check_confluence(rs);
  if (!conf.all_resolved()) {
    std::string first;
    for (const auto& o : conf.overlaps)
      if (!o.resolved) {
        first = word_to_string(o.word);
        break;
      }
    throw ConfluenceFailure("rewrite system not locally confluent at overlap " + first);
  }

  HopfData h;
  h.pres = p;
  h.conductor = p.conductor;
  h.N = p.N;
  h.rx = p.r;
  h.ry = p.has_y() ? p.r : 1;
  h.dim = p.dim();

  // irreducible-word census must be exactly the PBW monomials
  std::vector<Word> words = rs.irreducible_words();
  if (static_cast<long>(words.size()) != h.dim)
    throw ConfluenceFailure("irreducible word count " + std::to_string(words.size()) +
                            " does not match expected dimension " + std::to_string(h.dim));
  std::map<Word, long> index_of_word;
  h.labels.resize(static_cast<size_t>(h.dim));
  for (long i = 0; i < h.N; ++i)
    for (long j = 0; j < h.rx; ++j)
      for (long l = 0; l < h.ry; ++l) {
        long idx = h.index_of(i, j, l);
        Word w = basis_word(i, j, l);
        index_of_word[w] = idx;
        h.labels[static_cast<size_t>(idx)] = word_to_string(w);
      }
  for (const auto& w : words)
    if (!index_of_word.count(w))
      throw ConfluenceFailure("irreducible word " + word_to_string(w) + " is not a PBW monomial");

  // multiplication table, built incrementally: right factor grows by one
  // generator at a time, so each cell is one sparse vector-by-generator step
  std::vector<AlgebraElement> right_by_gen[3];  // A, X, Y
  const char gens[3] = {'A', 'X', 'Y'};
  std::vector<Word> word_of_index(static_cast<size_t>(h.dim));
  for (const auto& [w, idx] : index_of_word) word_of_index[static_cast<size_t>(idx)] = w;
  for (int g = 0; g < 3; ++g) {
    right_by_gen[g].resize(static_cast<size_t>(h.dim));
    for (long b = 0; b < h.dim; ++b) {
      FreeElement nf = rs.normal_form_word(word_of_index[static_cast<size_t>(b)] + gens[g]);
      right_by_gen[g][static_cast<size_t>(b)] = element_from_free(h, index_of_word, nf, h.conductor);
    }
  }
  auto times_gen = [&](const AlgebraElement& u, int g) {
    AlgebraElement out;
    for (const auto& [b, c] : u)
      for (const auto& [k, m] : right_by_gen[g][static_cast<size_t>(b)]) {
        auto it = out.find(k);
        if (it == out.end()) {
          FieldElement w = c * m;
          if (!w.is_zero()) out.emplace(k, w);
        } else {
          it->second += c * m;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    return out;
  };

  h.mult.assign(static_cast<size_t>(h.dim), std::vector<AlgebraElement>(static_cast<size_t>(h.dim)));
  for (long b = 0; b < h.dim; ++b) {
    for (long i = 0; i < h.N; ++i)
      for (long j = 0; j < h.rx; ++j)
        for (long l = 0; l < h.ry; ++l) {
          long c = h.index_of(i, j, l);
          AlgebraElement v;
          if (i == 0 && j == 0 && l == 0) {
            v = {{b, FieldElement::one(h.conductor)}};
          } else if (l > 0) {
            v = times_gen(h.mult[static_cast<size_t>(b)][static_cast<size_t>(h.index_of(i, j, l - 1))], 2);
          } else if (j > 0) {
            v = times_gen(h.mult[static_cast<size_t>(b)][static_cast<size_t>(h.index_of(i, j - 1, 0))], 1);
          } else {
            v = times_gen(h.mult[static_cast<size_t>(b)][static_cast<size_t>(h.index_of(i - 1, 0, 0))], 0);
          }
          h.mult[static_cast<size_t>(b)][static_cast<size_t>(c)] = std::move(v);
        }
  }

  // comultiplication via tensor powers of the generator images
  h.comult.assign(static_cast<size_t>(h.dim), PairTensor{});
  FieldElement one = FieldElement::one(h.conductor);
  long unit_idx = h.index_of(0, 0, 0);
  PairTensor dA = {{{h.a_power_index(1), h.a_power_index(1)}, one}};
  std::vector<PairTensor> dApow(static_cast<size_t>(h.N));
  dApow[0] = {{{unit_idx, unit_idx}, one}};
  for (long i = 1; i < h.N; ++i) dApow[static_cast<size_t>(i)] = pair_multiply(h, dApow[static_cast<size_t>(i - 1)], dA);
  std::vector<PairTensor> dXpow(static_cast<size_t>(h.rx)), dYpow(static_cast<size_t>(h.ry));
  dXpow[0] = dApow[0];
  dYpow[0] = dApow[0];
  if (h.has_x()) {
    PairTensor dX = {{{h.x_index(), h.a_power_index(p.nu)}, one}, {{unit_idx, h.x_index()}, one}};
    for (long j = 1; j < h.rx; ++j) dXpow[static_cast<size_t>(j)] = pair_multiply(h, dXpow[static_cast<size_t>(j - 1)], dX);
  }
  if (h.has_y()) {
    PairTensor dY = {{{h.y_index(), h.a_power_index(p.nu)}, one}, {{unit_idx, h.y_index()}, one}};
    for (long l = 1; l < h.ry; ++l) dYpow[static_cast<size_t>(l)] = pair_multiply(h, dYpow[static_cast<size_t>(l - 1)], dY);
  }
  for (long i = 0; i < h.N; ++i) {
    for (long j = 0; j < h.rx; ++j) {
      PairTensor aij = pair_multiply(h, dApow[static_cast<size_t>(i)], dXpow[static_cast<size_t>(j)]);
      for (long l = 0; l < h.ry; ++l) {
        PairTensor full = (l == 0) ? aij : pair_multiply(h, aij, dYpow[static_cast<size_t>(l)]);
        h.comult[static_cast<size_t>(h.index_of(i, j, l))] = std::move(full);
      }
    }
  }

  // counit and unit
  h.counit.assign(static_cast<size_t>(h.dim), FieldElement::zero(h.conductor));
  for (long i = 0; i < h.N; ++i) h.counit[static_cast<size_t>(h.index_of(i, 0, 0))] = one;
  h.unit = {{unit_idx, one}};

  // antipode: anti-algebra extension of the generator images
  //   s(a) = a^{N-1},  s(x) = -q^{-nu} a^{N-nu} x,  s(y) = -q^{nu} a^{N-nu} y
  FieldElement qe = p.q_elem();
  AlgebraElement Sa = {{h.a_power_index(h.N - 1), one}};
  AlgebraElement Sx, Sy;
  if (h.has_x()) Sx = {{h.index_of(h.N - p.nu, 1, 0), -qe.pow(-p.nu)}};
  if (h.has_y()) Sy = {{h.index_of(h.N - p.nu, 0, 1), -qe.pow(p.nu)}};
  h.antipode = ExactMatrix(h.dim, h.dim);
  std::vector<AlgebraElement> Sa_pow(static_cast<size_t>(h.N)), Sx_pow(static_cast<size_t>(h.rx)),
      Sy_pow(static_cast<size_t>(h.ry));
  Sa_pow[0] = h.unit;
  for (long i = 1; i < h.N; ++i) Sa_pow[static_cast<size_t>(i)] = multiply(h, Sa_pow[static_cast<size_t>(i - 1)], Sa);
  Sx_pow[0] = h.unit;
  for (long j = 1; j < h.rx; ++j) Sx_pow[static_cast<size_t>(j)] = multiply(h, Sx_pow[static_cast<size_t>(j - 1)], Sx);
  Sy_pow[0] = h.unit;
  for (long l = 1; l < h.ry; ++l) Sy_pow[static_cast<size_t>(l)] = multiply(h, Sy_pow[static_cast<size_t>(l - 1)], Sy);
  for (long i = 0; i < h.N; ++i)
    for (long j = 0; j < h.rx; ++j)
      for (long l = 0; l < h.ry; ++l) {
        // s(a^i x^j y^l) = s(y)^l s(x)^j s(a)^i
        AlgebraElement v = multiply(h, multiply(h, Sy_pow[static_cast<size_t>(l)], Sx_pow[static_cast<size_t>(j)]),
                                    Sa_pow[static_cast<size_t>(i)]);
        long b = h.index_of(i, j, l);
        for (const auto& [k, c] : v) h.antipode.set(k, b, c);
      }

  return h;
}

// --- verification ----------------------------------------------------------------

namespace {

bool pair_equal(const PairTensor& a, const PairTensor& b) { return a == b; }

std::string label(const HopfData& h, long b) {
  return h.labels.empty() ? std::to_string(b) : h.labels[static_cast<size_t>(b)];
}

}  // namespace

AxiomReport verify_hopf_axioms(const HopfData& h, long exhaustive_pair_dim) {
  AxiomReport rep;
  auto fail = [&](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  // unit
  rep.unital = true;
  for (long b = 0; b < h.dim && rep.unital; ++b) {
    AlgebraElement e = {{b, FieldElement::one(h.conductor)}};
    if (multiply(h, h.unit, e) != e || multiply(h, e, h.unit) != e) {
      rep.unital = false;
      fail("unit axiom at " + label(h, b));
    }
  }
  if (rep.unital) {
    PairTensor d1 = comult_eval(h, h.unit), u1;
    for (const auto& [b, cb] : h.unit)
      for (const auto& [c, cc] : h.unit) u1[{b, c}] = cb * cc;
    if (!pair_equal(d1, u1) || !counit_eval(h, h.unit).is_one()) {
      rep.unital = false;
      fail("unit is not grouplike");
    }
  }

  // coassociativity and counit axiom per basis element
  rep.coassociative = true;
  rep.counital = true;
  for (long b = 0; b < h.dim; ++b) {
    TensorElement t = tensor_from_pair(h.comult[static_cast<size_t>(b)]);
    if (expand_comult_slot(h, t, 0) != expand_comult_slot(h, t, 1)) {
      rep.coassociative = false;
      fail("coassociativity at " + label(h, b));
      break;
    }
    TensorElement left = contract_counit_slot(h, t, 0), right = contract_counit_slot(h, t, 1);
    TensorElement self;
    self.order = 1;
    self.add({b}, FieldElement::one(h.conductor));
    if (left != self || right != self) {
      rep.counital = false;
      fail("counit axiom at " + label(h, b));
      break;
    }
  }

  // multiplicativity of Delta and epsilon
  rep.comult_multiplicative = true;
  rep.counit_multiplicative = true;
  auto check_pair = [&](long b, long c) {
    const AlgebraElement& prod = h.mult[static_cast<size_t>(b)][static_cast<size_t>(c)];
    PairTensor lhs = comult_eval(h, prod);
    PairTensor rhs = pair_multiply(h, h.comult[static_cast<size_t>(b)], h.comult[static_cast<size_t>(c)]);
    if (!pair_equal(lhs, rhs)) {
      rep.comult_multiplicative = false;
      fail("Delta not multiplicative at (" + label(h, b) + ", " + label(h, c) + ")");
      return false;
    }
    FieldElement el = counit_eval(h, prod);
    FieldElement er = h.counit[static_cast<size_t>(b)] * h.counit[static_cast<size_t>(c)];
    if (el != er) {
      rep.counit_multiplicative = false;
      fail("epsilon not multiplicative at (" + label(h, b) + ", " + label(h, c) + ")");
      return false;
    }
    return true;
  };
  if (h.dim <= exhaustive_pair_dim) {
    for (long b = 0; b < h.dim && rep.comult_multiplicative && rep.counit_multiplicative; ++b)
      for (long c = 0; c < h.dim; ++c)
        if (!check_pair(b, c)) break;
  } else {
    rep.pairs_exhaustive = false;
    // generator * basis pairs extend to all pairs by induction over words;
    // a seeded random sample guards the reasoning
    std::vector<long> gens = {h.a_power_index(1)};
    if (h.has_x()) gens.push_back(h.x_index());
    if (h.has_y()) gens.push_back(h.y_index());
    for (long b = 0; b < h.dim && rep.comult_multiplicative && rep.counit_multiplicative; ++b)
      for (long g : gens)
        if (!check_pair(b, g)) break;
    std::mt19937_64 rng(20240229);
    std::uniform_int_distribution<long> pick(0, h.dim - 1);
    for (int t = 0; t < 500 && rep.comult_multiplicative && rep.counit_multiplicative; ++t)
      check_pair(pick(rng), pick(rng));
  }

  // antipode axiom on every basis element
  rep.antipode_axiom = true;
  for (long b = 0; b < h.dim; ++b) {
    const PairTensor& d = h.comult[static_cast<size_t>(b)];
    PairTensor s_left, s_right;
    for (const auto& [k, c] : d) {
      AlgebraElement sc = apply_matrix(h.antipode, {{k.first, FieldElement::one(h.conductor)}});
      for (const auto& [p, v] : sc) {
        auto key = PairKey{p, k.second};
        auto it = s_left.find(key);
        if (it == s_left.end())
          s_left.emplace(key, c * v);
        else {
          it->second += c * v;
          if (it->second.is_zero()) s_left.erase(it);
        }
      }
      AlgebraElement sd = apply_matrix(h.antipode, {{k.second, FieldElement::one(h.conductor)}});
      for (const auto& [p, v] : sd) {
        auto key = PairKey{k.first, p};
        auto it = s_right.find(key);
        if (it == s_right.end())
          s_right.emplace(key, c * v);
        else {
          it->second += c * v;
          if (it->second.is_zero()) s_right.erase(it);
        }
      }
    }
    AlgebraElement left = contract_pair_multiply(h, s_left);
    AlgebraElement right = contract_pair_multiply(h, s_right);
    AlgebraElement expect = scalar_mul(h.counit[static_cast<size_t>(b)], h.unit);
    if (left != expect || right != expect) {
      rep.antipode_axiom = false;
      fail("antipode axiom at " + label(h, b));
      break;
    }
  }

  return rep;
}

nlohmann::json AxiomReport::to_json() const {
  return nlohmann::json{{"coassociative", coassociative},
                        {"counital", counital},
                        {"comult_multiplicative", comult_multiplicative},
                        {"counit_multiplicative", counit_multiplicative},
                        {"antipode_axiom", antipode_axiom},
                        {"unital", unital},
                        {"pairs_exhaustive", pairs_exhaustive},
                        {"ok", ok()},
                        {"first_failure", first_failure}};
}

ExactMatrix antipode_inverse(const HopfData& h) {
  auto inv = inverse(h.antipode);
  if (!inv) throw SingularAntipode("antipode matrix is singular");
  return *inv;
}

HopfData cop_of(const HopfData& h) {
  HopfData c = h;
  c.pres.reset();
  for (long b = 0; b < h.dim; ++b) {
    PairTensor flipped;
    for (const auto& [k, v] : h.comult[static_cast<size_t>(b)]) flipped[{k.second, k.first}] = v;
    c.comult[static_cast<size_t>(b)] = std::move(flipped);
  }
  c.antipode = antipode_inverse(h);
  return c;
}

std::vector<long> grouplike_basis_monomials(const HopfData& h) {
  std::vector<long> out;
  for (long b = 0; b < h.dim; ++b) {
    AlgebraElement e = {{b, FieldElement::one(h.conductor)}};
    if (is_grouplike(h, e)) out.push_back(b);
  }
  return out;
}

}  // namespace hopfkit
