#include "gwa/polyring.hpp"

#include <algorithm>
#include <ostream>

#include "gwa/textformat.hpp"

namespace gwa {

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly Poly::from_rationals(const std::vector<Rational>& coeffs) {
  std::vector<Scalar> c(coeffs.begin(), coeffs.end());
  return Poly(std::move(c));
}

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coefficient(int k) const {
  if (k < 0 || k > degree()) return Scalar(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

int Poly::field_order() const {
  int m = 1;
  for (const auto& c : coeffs_) m = std::max(m, c.order());
  return m;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  strip();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

Scalar Poly::evaluate(const Scalar& x) const {
  Scalar r(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) r = r * x + coeffs_[k];
  return r;
}

Poly Poly::substitute_affine(const Scalar& scale, const Scalar& offset) const {
  Poly lin(std::vector<Scalar>{offset, scale});
  Poly r;
  for (std::size_t k = coeffs_.size(); k-- > 0;) r = r * lin + Poly::constant(coeffs_[k]);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::string Poly::to_string(char var) const {
  std::vector<std::string> s;
  s.reserve(coeffs_.size());
  for (const auto& c : coeffs_) s.push_back(c.to_string());
  return text::format_polynomial(s, var);
}

std::string Poly::to_list_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += coeffs_[i].to_string();
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> r(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) r[static_cast<std::size_t>(k - 1)] = p.coefficient(k) * Scalar(k);
  return Poly(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> rem = a.coefficients();
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Scalar inv_lead = b.leading().inverse();
  const auto& bc = b.coefficients();
  for (int k = a.degree(); k >= b.degree(); --k) {
    const Scalar& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Scalar f = top * inv_lead;
    std::size_t shift = static_cast<std::size_t>(k - b.degree());
    for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] -= f * bc[j];
    quo[shift] = f;
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd_monic(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  return extended_gcd(p, q).g;
}

BezoutResult extended_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  Poly r0 = p, r1 = q;
  Poly s0 = Poly::constant(Scalar(1)), s1;
  Poly t0, t1 = Poly::constant(Scalar(1));
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    Poly s2 = s0 - quo * s1;
    Poly t2 = t0 - quo * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Scalar inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

ShiftSigma::ShiftSigma(Scalar h0) : h0_(std::move(h0)) {
  if (h0_.is_zero()) throw std::invalid_argument("shift h0 must be nonzero");
}

Poly sigma_pow(const Poly& p, long k, const ShiftSigma& s) {
  if (k == 0 || p.is_constant()) return p;
  return p.substitute_affine(Scalar(1), -(s.h0() * Scalar(k)));
}

DegreeInvariants degree_invariants(const Poly& a) {
  if (a.is_constant()) throw std::invalid_argument("defining polynomial must be non-constant");
  return {a.degree(), gcd_monic(a, derivative(a)).degree()};
}

Poly compose_scale(const Poly& p, long r) {
  if (r < 1) throw std::invalid_argument("compose_scale: r must be positive");
  std::vector<Scalar> c = p.coefficients();
  Scalar rk(1);
  for (auto& x : c) {
    x *= rk;
    rk *= Scalar(r);
  }
  return Poly(std::move(c));
}

Poly cyclotomic_polynomial(int m) { return Poly::from_rationals(cyclotomic_coefficients(m)); }

Poly parse_poly(std::string_view text, char var) {
  return Poly::from_rationals(text::parse_rational_polynomial(text, var));
}

}  // namespace gwa
