#pragma once

// Exact rational scalars. GMP does the heavy lifting; this header only adds
// the parsing/printing conventions used by the JSON formats ("p/q" in lowest
// terms, "p" when the denominator is 1).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfkit {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) {
  return r.get_str();  // canonical "p" or "p/q", lowest terms
}

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  r.canonicalize();
  return r;
}

// Exact integer nth root: returns true and sets root iff v is a perfect
// nth power (v >= 0, n >= 1).
inline bool perfect_nth_root(const mpz_class& v, unsigned long n, mpz_class& root) {
  if (sgn(v) < 0) return false;
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), n);
  if (exact == 0) return false;
  root = r;
  return true;
}

// Rational perfect nth power test: c = (p/q)^n with c > 0.
inline bool perfect_nth_root(const Rational& c, unsigned long n, Rational& root) {
  if (sgn(c) <= 0) return false;
  mpz_class pn, qn;
  if (!perfect_nth_root(c.get_num(), n, pn)) return false;
  if (!perfect_nth_root(c.get_den(), n, qn)) return false;
  root = Rational(pn, qn);
  root.canonicalize();
  return true;
}

}  // namespace hopfkit
