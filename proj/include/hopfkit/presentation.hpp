#pragma once

// Validated parameter records for the four Hopf-algebra families
//
//   H   = H_{n,q,N,nu}            a^N=1, x^r=0, xa=qax           (r = |q^nu|)
//   HA  = H_{n,q,N,nu,alpha}      x^n = alpha (a^{nu n} - 1)     (alpha != 0)
//   U   = U_{(N,nu,omega)}        adds y, x^r=y^r=0, yx - q^{-nu}xy = a^{2nu}-1
//   UA  = U_{(n,N,nu,q,alpha,beta,gamma)}  the three-parameter deformation
//
// plus the oriented substitution rules each one feeds to the rewriting
// engine.  All scalars live in one working cyclotomic field whose conductor
// is the lcm of N and the conductors of q, alpha, beta, gamma.

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/cyclotomic.hpp"
#include "vendor_json_fwd.hpp"

namespace hopfkit {

struct InvalidParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { H, HA, U, UA };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct Presentation {
  Family family = Family::H;
  long n = 1;
  long N = 1;
  long nu = 1;
  RootOfUnity q;                 // primitive nth root
  FieldElement alpha, beta, gamma;
  // derived
  long r = 1;                    // |q^nu|
  long conductor = 1;            // working field Q(zeta_conductor)
  std::optional<long> omega_exp; // family U: omega = zeta_N^omega_exp with omega^nu = q

  bool has_y() const { return family == Family::U || family == Family::UA; }
  long dim() const { return has_y() ? N * r * r : N * r; }
  FieldElement q_elem() const { return q.element().embed(conductor); }
  FieldElement scalar(const FieldElement& x) const { return x.embed(conductor); }
  // zeta_N inside the working field
  FieldElement zeta_N() const { return FieldElement::zeta(conductor, conductor / N); }

  nlohmann::json to_json() const;       // canonical form (sorted keys)
  static Presentation from_json(const nlohmann::json& j);
  std::string content_hash() const;     // stable hex digest of canonical JSON
};

// Validates every family constraint; throws InvalidParams naming the violated
// constraint.  Absent scalars default to 0 (alpha, beta) and to the family's
// fixed value for gamma (1 for U, given for UA, unused for H/HA).
Presentation make_presentation(Family family, long n, long N, long nu, RootOfUnity q,
                               const FieldElement& alpha = FieldElement(),
                               const FieldElement& beta = FieldElement(),
                               const FieldElement& gamma = FieldElement());

// Radford's U_{(N,nu,omega)} as the sub-family UA(N/(N,nu), N, nu, omega^nu, 0, 0, 1).
Presentation make_U(long N, long nu, RootOfUnity omega);

// Convenience constructors used everywhere in the tests.
Presentation make_H(long n, long N, long nu, RootOfUnity q);
Presentation make_HA(long n, long N, long nu, RootOfUnity q, const FieldElement& alpha);

struct Rule {
  std::string lhs;              // word over A,B,D,X,Y
  // rhs lives in rewrite::FreeElement; stored flat here to avoid a cycle
  std::vector<std::pair<std::string, FieldElement>> rhs;
};

// Oriented, degree-lexicographically decreasing substitution rules.
std::vector<Rule> emit_rules(const Presentation& p);

}  // namespace hopfkit
