#pragma once

// Grouplikes and characters, skew-primitive spaces, the first coradical
// filtration term, integrals and the distinguished grouplike, plus the
// semisimple-quotient census used to certify uniqueness of simple
// subcoalgebras of the dual.

#include <optional>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

struct IntegralDimensionAnomaly : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebra homomorphism H -> k, stored as its value vector on the basis.
struct Character {
  FieldElement a_image;
  AlgebraElement functional;  // chi(e_b) at index b
  long order = 1;             // order in G(H*)
};

// All characters: a |-> zeta_N^i enumerated, x and y forced to 0 by the
// commutation relation when q != 1, each candidate verified multiplicative on
// every basis pair.
std::vector<Character> characters(const HopfData& h);

struct SkewPrimitiveSpace {
  long g = 0, hh = 0;                      // P_{a^g, a^hh}
  std::vector<AlgebraElement> basis;       // exact kernel basis
  std::vector<AlgebraElement> complement;  // complement of sp{a^g - a^hh}
  long dim() const { return static_cast<long>(basis.size()); }
  long complement_dim() const { return static_cast<long>(complement.size()); }
};

// z with Delta(z) = z (x) g + hh (x) z for arbitrary (grouplike) elements.
std::vector<AlgebraElement> skew_primitive_space(const HopfData& h, const AlgebraElement& g,
                                                 const AlgebraElement& hh);

SkewPrimitiveSpace skew_primitives(const HopfData& h, long g_exp, long h_exp);

struct CoradicalH1 {
  long dim = 0;
  std::vector<long> skew_dims;        // dim P_{a^v,1} for v = 0..N-1
  std::vector<long> complement_dims;  // dim P'_{a^v,1}
  bool shift_identity_verified = false;  // a^h P_{a^v,1} = P_{a^{v+h},a^h} checked
};

CoradicalH1 coradical_h1(const HopfData& h);

struct IntegralData {
  std::vector<AlgebraElement> left_basis, right_basis;
  AlgebraElement lambda_left, lambda_right;  // canonical representatives
  bool unimodular = false;
  bool two_sided_verified = false;           // lambda_left is also right
  std::optional<Character> psi;              // distinguished grouplike of H^*
};

// Left/right integral spaces from the generator actions alone (generators
// generate); canonical representative scales the minimal-index support
// coefficient to 1.  Throws IntegralDimensionAnomaly when a space is not
// 1-dimensional.
IntegralData integrals(const HopfData& h);

struct Lemma13Report {
  long g = 0;
  long intersection_dim = 0;
  bool equals_span_g_minus_1 = false;
};

// P_{a^g,1} intersected with the centralizer of a^g must be sp{a^g - 1}.
Lemma13Report lemma13_check(const HopfData& h, long g);

struct GrouplikeCensus {
  std::vector<long> power_indices;   // the verified grouplike basis monomials
  bool only_group_monomials = true;  // no other basis monomial is grouplike
  long random_slices_checked = 0;
  bool random_slices_clean = true;   // no grouplike outside (a) found
};

// Exact scan over basis monomials plus a randomized falsification pass that
// solves the grouplike equation on random 2-dimensional affine slices.
// Completeness of G(H) = (a) itself rests on the generator structure of the
// family presentations and is flagged as such in reports.
GrouplikeCensus grouplike_census(const HopfData& h, long slices = 200, uint64_t seed = 1);

struct SemisimpleCensus {
  long radical_dim = 0;
  long semisimple_dim = 0;   // dim H - radical_dim
  long blocks = 0;           // dim of the center of H/rad
  long one_dim_blocks = 0;   // = number of characters
  // dims d >= 2 with sum d^2 = semisimple_dim - one_dim_blocks, when the
  // accounting has a unique solution
  std::optional<std::vector<long>> big_block_dims;
};

// Radical via the regular-representation trace form (char 0), block count via
// the center of the quotient.
SemisimpleCensus semisimple_census(const HopfData& h);

// Engine check of the closed-form commutation
//   y^i x = q^{-i nu} x y^i
//         + gamma (q^{-(i-1)nu} sum_{j<i} q^{-j nu}) a^{2 nu} y^{i-1}
//         - gamma (sum_{j<i} q^{-j nu}) y^{i-1}
// for 1 <= i < r; returns the first failing i or nullopt when all match.
std::optional<long> check_yx_commutation(const HopfData& h);

}  // namespace hopfkit
