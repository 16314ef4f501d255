#include "hopfkit/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopfkit {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long m) {
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using Poly = std::vector<Rational>;  // low degree first

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  poly_trim(c);
  return c;
}

// Quotient of exact division a / b (monic or not); remainder must be zero
// when exact==true, otherwise returns the remainder in `a`.
Poly poly_divmod(Poly& a, const Poly& b) {
  assert(!b.empty());
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    Rational f = a.back() / lead;
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    poly_trim(a);
    if (a.empty()) break;
    if (a.size() >= b.size() && a.back() == 0) poly_trim(a);
  }
  poly_trim(q);
  return q;
}

std::map<long, Poly>& phi_cache() {
  static std::map<long, Poly> cache;
  return cache;
}

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

// Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d, computed recursively.
const Poly& phi_poly(long M) {
  std::lock_guard<std::mutex> lock(phi_mutex());
  auto it = phi_cache().find(M);
  if (it != phi_cache().end()) return it->second;

  std::vector<long> divisors;
  for (long d = 1; d < M; ++d)
    if (M % d == 0) divisors.push_back(d);

  // Compute missing proper divisors first (recursion without re-locking).
  std::vector<long> stack = {M};
  while (!stack.empty()) {
    long m = stack.back();
    bool ready = true;
    for (long d = 1; d < m; ++d) {
      if (m % d == 0 && !phi_cache().count(d)) {
        stack.push_back(d);
        ready = false;
      }
    }
    if (!ready) continue;
    stack.pop_back();
    if (phi_cache().count(m)) continue;
    Poly num(m + 1, Rational(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
      if (m % d == 0) {
        Poly q = poly_divmod(num, phi_cache().at(d));
        assert(num.empty());
        num = std::move(q);
      }
    }
    phi_cache().emplace(m, std::move(num));
  }
  return phi_cache().at(M);
}

Poly reduce_mod_phi(Poly p, long M) {
  const Poly& phi = phi_poly(M);
  if (p.size() >= phi.size()) poly_divmod(p, phi);
  p.resize(phi.size() - 1, Rational(0));
  return p;
}

// Extended Euclid in Q[x]: returns (g, s) with s*a = g (mod b), g = gcd.
std::pair<Poly, Poly> half_ext_gcd(Poly a, Poly b) {
  Poly s0 = {Rational(1)}, s1 = {};
  while (!b.empty()) {
    Poly r = a;
    Poly q = poly_divmod(r, b);
    a = b;
    b = r;
    Poly s2 = s0;
    Poly qs = poly_mul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    s0 = s1;
    s1 = s2;
  }
  return {a, s0};
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(long M) { return phi_poly(M); }

FieldElement::FieldElement(long M, std::vector<Rational> residue_coeffs)
    : m_(M), coeffs_(std::move(residue_coeffs)) {
  assert(M >= 1);
  size_t d = static_cast<size_t>(euler_phi(M));
  if (coeffs_.size() > d) coeffs_ = reduce_mod_phi(std::move(coeffs_), M);
  coeffs_.resize(d, Rational(0));
}

FieldElement FieldElement::zero(long M) { return FieldElement(M, {}); }

FieldElement FieldElement::one(long M) { return FieldElement(M, {Rational(1)}); }

FieldElement FieldElement::zeta(long M, long e) {
  e = ((e % M) + M) % M;
  std::vector<Rational> p(static_cast<size_t>(e) + 1, Rational(0));
  p[static_cast<size_t>(e)] = 1;
  return FieldElement(M, std::move(p));
}

FieldElement FieldElement::from_polynomial(long M, const std::vector<Rational>& poly) {
  return FieldElement(M, poly);
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rational> FieldElement::as_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

FieldElement FieldElement::embed(long M2) const {
  if (M2 == m_) return *this;
  if (M2 % m_ != 0)
    throw NonDivisibleConductor("embed: conductor " + std::to_string(m_) +
                                " does not divide " + std::to_string(M2));
  long stride = M2 / m_;
  std::vector<Rational> p(coeffs_.size() * static_cast<size_t>(stride), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) p[i * static_cast<size_t>(stride)] = coeffs_[i];
  return FieldElement(M2, std::move(p));
}

std::optional<FieldElement> FieldElement::try_descend(long M2) const {
  if (m_ % M2 != 0)
    throw NonDivisibleConductor("try_descend: target conductor must divide source");
  if (M2 == m_) return *this;
  // Solve sum_k c_k * embed(zeta_M2^k) = *this by matching coefficients.
  long d2 = euler_phi(M2);
  long stride = m_ / M2;
  // embed(zeta_M2^k) = zeta_M^(k*stride) reduced; build the small linear system.
  std::vector<std::vector<Rational>> cols;
  cols.reserve(static_cast<size_t>(d2));
  for (long k = 0; k < d2; ++k)
    cols.push_back(FieldElement::zeta(m_, k * stride).coeffs());
  // Gaussian elimination on the (phi(m_) x d2) system.
  size_t rows = coeffs_.size();
  std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(static_cast<size_t>(d2) + 1, Rational(0)));
  for (size_t r = 0; r < rows; ++r) {
    for (long k = 0; k < d2; ++k) mat[r][static_cast<size_t>(k)] = cols[static_cast<size_t>(k)][r];
    mat[r][static_cast<size_t>(d2)] = coeffs_[r];
  }
  std::vector<long> pivot_col(rows, -1);
  size_t rank = 0;
  for (long c = 0; c < d2 && rank < rows; ++c) {
    size_t sel = rank;
    while (sel < rows && mat[sel][static_cast<size_t>(c)] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(mat[rank], mat[sel]);
    Rational inv = 1 / mat[rank][static_cast<size_t>(c)];
    for (auto& v : mat[rank]) v *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || mat[r][static_cast<size_t>(c)] == 0) continue;
      Rational f = mat[r][static_cast<size_t>(c)];
      for (size_t j = 0; j <= static_cast<size_t>(d2); ++j) mat[r][j] -= f * mat[rank][j];
    }
    pivot_col[rank] = c;
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r)
    if (mat[r][static_cast<size_t>(d2)] != 0) return std::nullopt;  // not in the subfield
  std::vector<Rational> sol(static_cast<size_t>(d2), Rational(0));
  for (size_t r = 0; r < rank; ++r) sol[static_cast<size_t>(pivot_col[r])] = mat[r][static_cast<size_t>(d2)];
  FieldElement candidate(M2, std::move(sol));
  if (candidate.embed(m_) != *this) return std::nullopt;
  return candidate;
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v = -v;
  return FieldElement(m_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (m_ != o.m_) {
    long L = lcm_long(m_, o.m_);
    return embed(L) + o.embed(L);
  }
  std::vector<Rational> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return FieldElement(m_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (m_ != o.m_) {
    long L = lcm_long(m_, o.m_);
    return embed(L) * o.embed(L);
  }
  Poly prod = poly_mul(coeffs_, o.coeffs_);
  return FieldElement(m_, std::move(prod));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  Poly a = coeffs_;
  poly_trim(a);
  auto [g, s] = half_ext_gcd(a, phi_poly(m_));
  // g is a nonzero constant since Phi_M is irreducible.
  assert(g.size() == 1);
  Rational ginv = 1 / g[0];
  for (auto& v : s) v *= ginv;
  return FieldElement(m_, std::move(s));
}

FieldElement FieldElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElement acc = FieldElement::one(m_);
  FieldElement base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (m_ == o.m_) return coeffs_ == o.coeffs_;
  long L = lcm_long(m_, o.m_);
  return embed(L).coeffs_ == o.embed(L).coeffs_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  if (m_ != o.m_) {
    long L = lcm_long(m_, o.m_);
    return embed(L) < o.embed(L);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string FieldElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "z" << m_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void FieldElement::trim_check() const {}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
  return element() == o.element();
}

std::optional<long> order_of(const FieldElement& u) {
  if (u.is_zero()) return std::nullopt;
  long bound = lcm_long(2, u.conductor());
  FieldElement p = u;
  for (long n = 1; n <= bound; ++n) {
    if (p.is_one()) return n;
    p *= u;
  }
  return std::nullopt;
}

std::vector<FieldElement> all_roots_of_unity(long M) {
  std::vector<FieldElement> out;
  for (long k = 0; k < M; ++k) {
    FieldElement z = FieldElement::zeta(M, k);
    out.push_back(z);
    FieldElement mz = -z;
    if (std::find(out.begin(), out.end(), mz) == out.end()) out.push_back(mz);
  }
  // Drop duplicates among the zeta powers themselves (possible when M odd).
  std::vector<FieldElement> dedup;
  for (const auto& z : out)
    if (std::find(dedup.begin(), dedup.end(), z) == dedup.end()) dedup.push_back(z);
  return dedup;
}

}  // namespace hopfkit
