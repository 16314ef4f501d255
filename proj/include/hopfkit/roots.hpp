#pragma once

// nth roots inside a fixed cyclotomic field.
//
// The search covers candidates of the form  y = (root of unity) * rho  where
// rho is the real positive radical of a rational.  By Kronecker-Weber a real
// radical c^{1/n} with c rational lies in an abelian extension only when it
// is rational or quadratic, so for radicands that factor as
// (root of unity) * (positive rational) this candidate family is complete.
// Square roots of rationals are realized explicitly through quadratic Gauss
// sums (sqrt(p) from the Legendre-weighted sum of p-th roots of unity, and
// sqrt(2) = zeta_8 + zeta_8^{-1}).

#include <optional>

#include "hopfkit/cyclotomic.hpp"

namespace hopfkit {

// sqrt of a positive rational inside Q(zeta_M), if it exists there.
std::optional<FieldElement> sqrt_rational_in_field(const Rational& d, long M);

// y with y^n = x and y in Q(zeta_M), M = x.conductor(); nullopt if no
// candidate of the structured form works.
std::optional<FieldElement> nth_root_in_field(const FieldElement& x, long n);

// Same, searching in the larger field Q(zeta_M2) (M | M2).
std::optional<FieldElement> nth_root_in_field(const FieldElement& x, long n, long M2);

// zeta_{lcm(2,M)}^s as an element of Q(zeta_M); the roots of unity of the
// field are exactly these.
FieldElement unit_root(long M, long s);

}  // namespace hopfkit
