#pragma once

// Materialized Hopf structure on the PBW basis a^i x^j y^l.
//
// build() rewrites products of basis words to normal form to obtain the
// multiplication table, computes Delta on a basis monomial as
// Delta(a)^i Delta(x)^j Delta(y)^l multiplied out in H (x) H, extends the
// antipode as an anti-algebra map from its generator images, and caches
// everything.  Derived algebras (duals, doubles, cop-twists) reuse the same
// HopfData container without a presentation attached.

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/linalg.hpp"
#include "hopfkit/presentation.hpp"
#include "hopfkit/rewrite.hpp"
#include "vendor_json_fwd.hpp"

namespace hopfkit {

struct ConfluenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrderMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularAntipode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using AlgebraElement = SparseVec;  // basis index -> coefficient
using PairKey = std::pair<long, long>;
using PairTensor = std::map<PairKey, FieldElement>;  // element of H (x) H

struct BasisMonomial {
  long i = 0, j = 0, l = 0;
};

// Sparse element of H^{(x)t}.
struct TensorElement {
  long order = 2;
  std::map<std::vector<long>, FieldElement> terms;

  void add(const std::vector<long>& key, const FieldElement& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const TensorElement& o) const { return order == o.order && terms == o.terms; }
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator*(const FieldElement& c) const;
};

struct HopfData {
  std::optional<Presentation> pres;
  long dim = 0;
  long conductor = 1;
  std::vector<std::string> labels;                // diagnostic names per index
  std::vector<std::vector<AlgebraElement>> mult;  // [b][c]
  std::vector<PairTensor> comult;                 // [b]
  std::vector<FieldElement> counit;               // [b]
  ExactMatrix antipode;                           // column b = S(e_b)
  AlgebraElement unit;

  // PBW shape (valid when pres has a value)
  long N = 1, rx = 1, ry = 1;
  long index_of(long i, long j, long l) const;  // exponents taken mod bounds where legal
  BasisMonomial monomial_of(long idx) const;
  long a_power_index(long i) const { return index_of(((i % N) + N) % N, 0, 0); }
  long x_index() const { return index_of(0, 1, 0); }
  long y_index() const { return index_of(0, 0, 1); }
  bool has_x() const { return rx > 1; }
  bool has_y() const { return ry > 1; }
};

HopfData build(const Presentation& p);

// --- elementwise operations ------------------------------------------------

AlgebraElement multiply(const HopfData& h, const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement multiply(const HopfData& h, const std::vector<AlgebraElement>& factors);
AlgebraElement scalar_mul(const FieldElement& c, const AlgebraElement& u);
AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement sub(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement power(const HopfData& h, const AlgebraElement& u, long k);
FieldElement counit_eval(const HopfData& h, const AlgebraElement& u);
PairTensor comult_eval(const HopfData& h, const AlgebraElement& u);
AlgebraElement apply_matrix(const ExactMatrix& m, const AlgebraElement& u);
std::string element_to_string(const HopfData& h, const AlgebraElement& u);

bool is_grouplike(const HopfData& h, const AlgebraElement& g);

// --- tensor operations -----------------------------------------------------

TensorElement tensor_of(const std::vector<AlgebraElement>& slots);
TensorElement tensor_from_pair(const PairTensor& t);
PairTensor pair_from_tensor(const TensorElement& t);
// Slotwise product; throws OrderMismatch on different orders.
TensorElement tensor_multiply(const HopfData& h, const TensorElement& u, const TensorElement& v);
PairTensor pair_multiply(const HopfData& h, const PairTensor& u, const PairTensor& v);
TensorElement expand_comult_slot(const HopfData& h, const TensorElement& t, long slot);
TensorElement contract_counit_slot(const HopfData& h, const TensorElement& t, long slot);
TensorElement apply_matrix_slot(const ExactMatrix& m, const TensorElement& t, long slot);
TensorElement swap_slots(const TensorElement& t, long s1, long s2);
// m(S (x) id) Delta-style contractions: multiply out two chosen slots.
AlgebraElement contract_pair_multiply(const HopfData& h, const PairTensor& t);

// --- verification ----------------------------------------------------------

struct AxiomReport {
  bool coassociative = false;
  bool counital = false;
  bool comult_multiplicative = false;
  bool counit_multiplicative = false;
  bool antipode_axiom = false;
  bool unital = false;
  bool pairs_exhaustive = true;  // false when the pair checks were sampled
  std::string first_failure;     // empty when everything passed
  bool ok() const {
    return coassociative && counital && comult_multiplicative && counit_multiplicative &&
           antipode_axiom && unital;
  }
  nlohmann::json to_json() const;
};

// Exhaustive over all basis pairs up to `exhaustive_pair_dim`; above that the
// multiplicativity checks run on generator*basis pairs (which extend to all
// pairs by induction over words) plus a seeded random sample.
AxiomReport verify_hopf_axioms(const HopfData& h, long exhaustive_pair_dim = 96);

// Exact inverse of the antipode matrix; throws SingularAntipode.
ExactMatrix antipode_inverse(const HopfData& h);

// Comultiplication-flipped copy (H^cop); the antipode becomes S^{-1}.
HopfData cop_of(const HopfData& h);

// Basis monomials g with Delta(g) = g (x) g and eps(g) = 1.
std::vector<long> grouplike_basis_monomials(const HopfData& h);

}  // namespace hopfkit
