#include "hopfkit/roots.hpp"

#include <cassert>

namespace hopfkit {

namespace {

int legendre_symbol(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  // Euler's criterion with small exponentiation
  long result = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

// Quadratic Gauss sum over Q(zeta_p): squares to p when p = 1 mod 4, to -p
// when p = 3 mod 4.
FieldElement gauss_sum(long p) {
  FieldElement g = FieldElement::zero(p);
  for (long a = 1; a < p; ++a) {
    FieldElement z = FieldElement::zeta(p, a);
    g += legendre_symbol(a, p) == 1 ? z : -z;
  }
  return g;
}

}  // namespace

FieldElement unit_root(long M, long s) {
  long Mp = lcm_long(2, M);
  s = ((s % Mp) + Mp) % Mp;
  if (M % 2 == 0) return FieldElement::zeta(M, s);
  // zeta_{2M} = -zeta_M^{(M+1)/2}
  FieldElement z = FieldElement::zeta(M, (s * ((M + 1) / 2)) % M);
  return (s % 2 == 0) ? z : -z;
}

std::optional<FieldElement> sqrt_rational_in_field(const Rational& d, long M) {
  if (sgn(d) < 0) return std::nullopt;
  if (sgn(d) == 0) return FieldElement::zero(M);
  // d = (k/den)^2 * s with s a squarefree positive integer
  mpz_class ab = d.get_num() * d.get_den();
  mpz_class k = 1, s = 1;
  for (mpz_class f = 2; f * f <= ab; ++f) {
    if (ab % f != 0) continue;
    int e = 0;
    while (ab % f == 0) {
      ab /= f;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= f;
    if (e % 2) s *= f;
  }
  s *= ab;  // leftover prime
  Rational rational_part(k, d.get_den());
  rational_part.canonicalize();
  if (s == 1) return FieldElement(M, {rational_part});

  if (!s.fits_slong_p()) return std::nullopt;
  long sl = s.get_si();
  FieldElement radical = FieldElement::one(M);
  long sign_swaps = 0;  // count of factors whose Gauss sum squares to -p
  long rest = sl;
  if (rest % 2 == 0) {
    if (M % 8 != 0) return std::nullopt;
    // sqrt(2) = zeta_8 + zeta_8^{-1}
    FieldElement r2 = FieldElement::zeta(8, 1) + FieldElement::zeta(8, 7);
    radical *= r2.embed(M);
    rest /= 2;
  }
  for (long p = 3; p <= rest; p += 2) {
    if (rest % p != 0) continue;
    if (M % p != 0) return std::nullopt;
    radical *= gauss_sum(p).embed(M);
    if (p % 4 == 3) ++sign_swaps;
    rest /= p;
  }
  if (sign_swaps % 2) {
    // radical^2 = -s; divide by i to land on +s
    if (M % 4 != 0) return std::nullopt;
    radical *= FieldElement::zeta(M, 3 * (M / 4));  // zeta_4^{-1} = zeta_4^3
  }
  // guard the sign bookkeeping
  FieldElement sq = radical * radical;
  if (sq != FieldElement(M, {Rational(sl)})) return std::nullopt;
  return rational_part * radical;
}

std::optional<FieldElement> nth_root_in_field(const FieldElement& x, long n, long M2) {
  assert(n >= 1);
  FieldElement xe = x.embed(M2);
  long M = M2;
  if (xe.is_zero()) return FieldElement::zero(M);
  if (n == 1) return xe;

  long Mp = lcm_long(2, M);
  for (long s = 0; s < Mp; ++s) {
    // try x = c * zeta_{Mp}^s with c a positive rational
    FieldElement w = unit_root(M, s);
    auto c_opt = (xe * w.inverse()).as_rational();
    if (!c_opt || sgn(*c_opt) <= 0) continue;
    Rational c = *c_opt;

    // v^n = zeta_{Mp}^s needs n*e = s (mod Mp)
    long g = gcd_long(n % Mp == 0 ? Mp : n % Mp, Mp);
    if (s % g != 0) return std::nullopt;  // s is unique, no other factorization helps
    long e = 0;
    for (long cand = 0; cand < Mp; ++cand) {
      if ((n * cand) % Mp == s) {
        e = cand;
        break;
      }
    }
    FieldElement v = unit_root(M, e);

    // rho^n = c with rho rational or a quadratic radical
    std::optional<FieldElement> rho;
    Rational root;
    if (perfect_nth_root(c, static_cast<unsigned long>(n), root)) {
      rho = FieldElement(M, {root});
    } else if (n % 2 == 0) {
      Rational d;
      if (n == 2) {
        d = c;
      } else if (!perfect_nth_root(c, static_cast<unsigned long>(n / 2), d)) {
        return std::nullopt;
      }
      rho = sqrt_rational_in_field(d, M);
    }
    if (!rho) return std::nullopt;
    FieldElement y = v * *rho;
    assert(y.pow(n) == xe);
    return y;
  }
  return std::nullopt;  // x is not (root of unity) * (positive rational)
}

std::optional<FieldElement> nth_root_in_field(const FieldElement& x, long n) {
  return nth_root_in_field(x, n, x.conductor());
}

}  // namespace hopfkit
