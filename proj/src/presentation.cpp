#include "hopfkit/presentation.hpp"

#include <sstream>

namespace hopfkit {

std::string family_name(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::HA: return "HA";
    case Family::U: return "U";
    case Family::UA: return "UA";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "H") return Family::H;
  if (s == "HA") return Family::HA;
  if (s == "U") return Family::U;
  if (s == "UA") return Family::UA;
  throw InvalidParams("unknown family '" + s + "'");
}

namespace {

long order_of_power(const RootOfUnity& q, long e) {
  // |q^e| without building field elements
  long M = q.M;
  long exp = ((q.e * (e % M)) % M + M) % M;
  return exp == 0 ? 1 : M / gcd_long(M, exp);
}

void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidParams(what);
}

}  // namespace

Presentation make_presentation(Family family, long n, long N, long nu, RootOfUnity q,
                               const FieldElement& alpha, const FieldElement& beta,
                               const FieldElement& gamma) {
  Presentation p;
  p.family = family;
  p.n = n;
  p.N = N;
  p.nu = nu;
  p.q = q;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;

  require(n >= 1 && N >= 1, "n and N must be positive");
  require(N % n == 0, "n divides N");
  require(1 <= nu && nu < N, "1 <= nu < N");
  require(q.order() == n, "order(q) = n");
  p.r = order_of_power(q, nu);

  bool a0 = alpha.is_zero(), b0 = beta.is_zero(), g0 = gamma.is_zero();

  switch (family) {
    case Family::H:
      require(a0 && b0 && g0, "family H carries no alpha, beta, gamma");
      break;
    case Family::HA:
      require(b0 && g0, "family HA carries no beta, gamma");
      if (!a0) {
        require(gcd_long(n, nu) == 1, "gcd(n,nu) = 1 when alpha != 0");
        require(n > 1, "n > 1 when alpha != 0");
        require((nu * n) % N != 0, "N divides nu*n but alpha != 0");
      }
      break;
    case Family::U: {
      require(a0 && b0, "family U has alpha = beta = 0");
      require(!g0, "family U has gamma = 1");
      require((nu * nu) % N != 0, "N divides nu^2");
      require(n == N / gcd_long(N, nu), "family U requires n = N/(N,nu)");
      // q must be omega^nu for some primitive Nth root omega
      FieldElement qe = q.element();
      std::optional<long> found;
      for (long k = 1; k < N; ++k) {
        if (gcd_long(k, N) != 1) continue;
        if (FieldElement::zeta(N, k * nu) == qe) {
          found = k;
          break;
        }
      }
      if (N == 1 && qe.is_one()) found = 0;
      require(found.has_value(), "family U requires q = omega^nu for a primitive Nth root omega");
      p.omega_exp = found;
      break;
    }
    case Family::UA:
      require(n > 1, "family UA requires n > 1");
      if (!(a0 && b0)) {
        require(gcd_long(n, nu) == 1, "gcd(n,nu) = 1 when (alpha,beta) != (0,0)");
        require((nu * n) % N != 0, "N divides nu*n but (alpha,beta) != (0,0)");
      }
      break;
  }

  // Degenerate guard: q^nu = 1 makes x = y = 0 in the quotient, and a nonzero
  // gamma then forces a^{2nu} = 1, which the rewriting system cannot express
  // without completion.  Reject unless the group relation already absorbs it.
  if (p.has_y() && p.r == 1 && !g0)
    require((2 * nu) % N == 0, "q^nu = 1 with gamma != 0 collapses a^{2nu}");

  long M = lcm_long(2, lcm_long(N, q.M));
  for (const FieldElement* s : {&p.alpha, &p.beta, &p.gamma})
    M = lcm_long(M, s->conductor());
  p.conductor = M;
  return p;
}

Presentation make_U(long N, long nu, RootOfUnity omega) {
  require(omega.order() == N, "omega must be a primitive Nth root of unity");
  require(1 <= nu && nu < N, "1 <= nu < N");
  require((nu * nu) % N != 0, "N divides nu^2");
  long n = N / gcd_long(N, nu);
  RootOfUnity q{omega.M, (omega.e * nu) % omega.M};
  return make_presentation(Family::U, n, N, nu, q, FieldElement::zero(), FieldElement::zero(),
                           FieldElement::one());
}

Presentation make_H(long n, long N, long nu, RootOfUnity q) {
  return make_presentation(Family::H, n, N, nu, q);
}

Presentation make_HA(long n, long N, long nu, RootOfUnity q, const FieldElement& alpha) {
  return make_presentation(Family::HA, n, N, nu, q, alpha);
}

std::vector<Rule> emit_rules(const Presentation& p) {
  std::vector<Rule> rules;
  long M = p.conductor;
  FieldElement one = FieldElement::one(M);
  FieldElement qe = p.q_elem();

  auto word_pow = [](char g, long k) { return std::string(static_cast<size_t>(k), g); };

  // A^N -> 1
  rules.push_back({word_pow('A', p.N), {{"", one}}});
  // B -> A^nu, D -> 1
  rules.push_back({"B", {{word_pow('A', p.nu), one}}});
  rules.push_back({"D", {{"", one}}});

  // x-power right-hand side: alpha (A^{nu n} - 1), empty when alpha = 0.
  // Exponents are kept literal; the A^N -> 1 rule reduces them during use.
  auto power_rhs = [&](const FieldElement& coeff) {
    std::vector<std::pair<std::string, FieldElement>> rhs;
    if (!coeff.is_zero()) {
      FieldElement c = p.scalar(coeff);
      rhs.push_back({word_pow('A', p.nu * p.n), c});
      rhs.push_back({"", -c});
    }
    return rhs;
  };

  if (p.r > 1) {
    rules.push_back({"XA", {{"AX", qe}}});
    rules.push_back({word_pow('X', p.r), power_rhs(p.alpha)});
    if (p.has_y()) {
      rules.push_back({"YA", {{"AY", qe.inverse()}}});
      rules.push_back({word_pow('Y', p.r), power_rhs(p.beta)});
      // YX -> q^{-nu} XY + gamma (A^{2nu} - 1)
      std::vector<std::pair<std::string, FieldElement>> rhs = {{"XY", qe.pow(-p.nu)}};
      if (!p.gamma.is_zero()) {
        FieldElement g = p.scalar(p.gamma);
        rhs.push_back({word_pow('A', 2 * p.nu), g});
        rhs.push_back({"", -g});
      }
      rules.push_back({"YX", rhs});
    }
  } else {
    // q^nu = 1: x (and y) vanish in the quotient
    rules.push_back({"X", {}});
    if (p.has_y()) rules.push_back({"Y", {}});
  }
  return rules;
}

namespace {

nlohmann::json field_to_json(const FieldElement& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_to_string(c));
  return nlohmann::json{{"M", x.conductor()}, {"coeffs", coeffs}};
}

FieldElement field_from_json(const nlohmann::json& j) {
  if (j.is_null()) return FieldElement::zero();
  long M = j.at("M").get<long>();
  std::vector<Rational> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.push_back(rational_from_string(s.get<std::string>()));
  return FieldElement(M, std::move(coeffs));
}

}  // namespace

nlohmann::json Presentation::to_json() const {
  nlohmann::json j;
  j["family"] = family_name(family);
  j["n"] = n;
  j["N"] = N;
  j["nu"] = nu;
  j["q"] = nlohmann::json{{"M", q.M}, {"e", ((q.e % q.M) + q.M) % q.M}};
  j["alpha"] = alpha.is_zero() && family != Family::UA ? nlohmann::json(nullptr) : field_to_json(alpha);
  j["beta"] = beta.is_zero() && family != Family::UA ? nlohmann::json(nullptr) : field_to_json(beta);
  j["gamma"] = (family == Family::H || family == Family::HA) ? nlohmann::json(nullptr) : field_to_json(gamma);
  if (omega_exp) j["omega_exp"] = *omega_exp;
  return j;
}

Presentation Presentation::from_json(const nlohmann::json& j) {
  Family f = family_from_name(j.at("family").get<std::string>());
  long n = j.at("n").get<long>();
  long N = j.at("N").get<long>();
  long nu = j.at("nu").get<long>();
  RootOfUnity q{j.at("q").at("M").get<long>(), j.at("q").at("e").get<long>()};
  FieldElement alpha = j.contains("alpha") ? field_from_json(j["alpha"]) : FieldElement::zero();
  FieldElement beta = j.contains("beta") ? field_from_json(j["beta"]) : FieldElement::zero();
  FieldElement gamma = j.contains("gamma") ? field_from_json(j["gamma"]) : FieldElement::zero();
  if (f == Family::U && gamma.is_zero()) gamma = FieldElement::one();
  return make_presentation(f, n, N, nu, q, alpha, beta, gamma);
}

std::string Presentation::content_hash() const {
  static const char* kVersion = "hopfkit-1";
  std::string s = std::string(kVersion) + ":" + to_json().dump();
  // FNV-1a 64
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace hopfkit
