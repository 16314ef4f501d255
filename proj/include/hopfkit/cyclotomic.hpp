#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_M).
//
// A FieldElement is the residue of a rational polynomial in zeta_M modulo the
// M-th cyclotomic polynomial Phi_M, stored as its coefficient vector of length
// phi(M).  Phi_M is irreducible over Q, so the representation is canonical:
// two elements over the same conductor are equal iff their coefficient
// vectors are equal, and every nonzero element is invertible.
//
// Binary operations on mismatched conductors first embed both arguments into
// Q(zeta_lcm).  Conductors are never shrunk implicitly; see try_descend().

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/rational.hpp"

namespace hopfkit {

struct NonDivisibleConductor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long euler_phi(long m);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

// Monic coefficient vector of Phi_M, low degree first (size phi(M)+1).
const std::vector<Rational>& cyclotomic_polynomial(long M);

class FieldElement {
 public:
  FieldElement() : m_(1), coeffs_(1, Rational(0)) {}
  explicit FieldElement(const Rational& r) : m_(1), coeffs_(1, r) {}
  FieldElement(long M, std::vector<Rational> residue_coeffs);

  static FieldElement zero(long M = 1);
  static FieldElement one(long M = 1);
  // zeta_M^e as an element of Q(zeta_M).
  static FieldElement zeta(long M, long e = 1);
  // From an arbitrary-degree polynomial in zeta_M (reduces mod Phi_M).
  static FieldElement from_polynomial(long M, const std::vector<Rational>& poly);

  long conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // Rational iff all coefficients above the constant vanish.
  std::optional<Rational> as_rational() const;

  // Image in Q(zeta_M2); requires conductor() | M2.
  FieldElement embed(long M2) const;
  // Inverse of embed when the element actually lies in Q(zeta_M2).
  std::optional<FieldElement> try_descend(long M2) const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;  // throws std::domain_error on zero
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  FieldElement pow(long k) const;  // negative k via inverse

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // Total order usable as a map key (conductor, then coefficients).
  bool operator<(const FieldElement& o) const;

  std::string to_string() const;  // human-readable, e.g. "1/2 + 3*z^2"

 private:
  long m_;
  std::vector<Rational> coeffs_;  // length phi(m_)
  void trim_check() const;
};

inline FieldElement operator*(const Rational& r, const FieldElement& x) {
  return FieldElement(x.conductor(), [&] {
    std::vector<Rational> c = x.coeffs();
    for (auto& v : c) v *= r;
    return c;
  }());
}

// A root of unity zeta_M^e together with its multiplicative order.
struct RootOfUnity {
  long M = 1;
  long e = 0;
  long order() const { return M / gcd_long(M, ((e % M) + M) % M == 0 ? M : ((e % M) + M) % M); }
  FieldElement element() const { return FieldElement::zeta(M, e); }
  bool operator==(const RootOfUnity& o) const;
};

// Least n >= 1 with u^n = 1, or nullopt if u is not a root of unity.  The
// roots of unity of Q(zeta_M) are exactly the lcm(2,M)-th ones, so the search
// is bounded.
std::optional<long> order_of(const FieldElement& u);

// All roots of unity of Q(zeta_M), i.e. +-zeta_M^k, deduplicated.
std::vector<FieldElement> all_roots_of_unity(long M);

}  // namespace hopfkit
