#include "gwa/exactfield.hpp"

#include <cctype>
#include <ostream>

#include "gwa/textformat.hpp"

namespace gwa {

using RatPoly = std::vector<Rational>;

namespace {

void strip(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  strip(r);
  return r;
}

// Quotient and remainder of a by nonzero b.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  strip(a);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    Rational f = a[k] / lead;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    if (k == 0) break;
  }
  strip(a);
  strip(q);
  return {q, a};
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip(a);
  return a;
}

// Representative of p modulo the field modulus, padded to the field degree.
std::vector<Rational> reduce(const RatPoly& p, const CyclotomicField& f) {
  RatPoly r = divmod(p, f.modulus).second;
  r.resize(static_cast<std::size_t>(f.degree), Rational(0));
  return r;
}

std::shared_ptr<const CyclotomicField> make_field(int m, int max_order) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (m > max_order) {
    throw std::invalid_argument("cyclotomic order " + std::to_string(m) + " exceeds cap " +
                                std::to_string(max_order));
  }
  if (euler_phi(m) == 1) return nullptr;
  auto f = std::make_shared<CyclotomicField>();
  f->order = m;
  f->degree = euler_phi(m);
  f->modulus = cyclotomic_coefficients(m);
  return f;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = text::trim(text);
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  bool slash = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      ++digits;
    } else if (s[j] == '/' && !slash && digits > 0 && j + 1 < s.size()) {
      slash = true;
      digits = 0;
    } else {
      throw ParseError("not a rational number: '" + s + "'");
    }
  }
  if (digits == 0) throw ParseError("not a rational number: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  try {
    q = Rational(s);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Rational> cyclotomic_coefficients(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
  RatPoly p(static_cast<std::size_t>(m) + 1, Rational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [q, r] = divmod(p, cyclotomic_coefficients(d));
    if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  return p;
}

Scalar Scalar::zeta(int m, int max_order) {
  auto f = make_field(m, max_order);
  if (!f) return Scalar(m == 1 ? 1 : -1);
  std::vector<Rational> c(static_cast<std::size_t>(f->degree), Rational(0));
  c[1] = 1;
  return Scalar(std::move(f), std::move(c));
}

Scalar Scalar::from_powers(int m, const std::vector<Rational>& coeffs, int max_order) {
  auto f = make_field(m, max_order);
  if (!f) {
    // zeta_1 = 1, zeta_2 = -1.
    Rational sum(0);
    Rational z(m == 1 ? 1 : -1);
    Rational zp(1);
    for (const auto& c : coeffs) {
      sum += c * zp;
      zp *= z;
    }
    return Scalar(sum);
  }
  RatPoly p(coeffs.begin(), coeffs.end());
  strip(p);
  auto r = reduce(p, *f);
  return Scalar(std::move(f), std::move(r));
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool Scalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational Scalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

void Scalar::lift_to(const std::shared_ptr<const CyclotomicField>& f) {
  if (field_ == f || !f) return;
  // Only rational values can move between fields.
  Rational c = coeffs_[0];
  coeffs_.assign(static_cast<std::size_t>(f->degree), Rational(0));
  coeffs_[0] = c;
  field_ = f;
}

void Scalar::unify(Scalar& other) {
  if (field_ == other.field_) return;
  if (order() == other.order()) {
    other.field_ = field_;
    return;
  }
  if (!field_ || (is_rational() && other.field_)) {
    lift_to(other.field_);
  } else if (!other.field_ || other.is_rational()) {
    other.lift_to(field_);
  } else {
    throw FieldMismatch("cannot combine elements of Q(zeta_" + std::to_string(order()) +
                        ") and Q(zeta_" + std::to_string(other.order()) + ")");
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Scalar b = o;
  unify(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  Scalar b = o;
  unify(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!field_ && !o.field_) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  Scalar b = o;
  unify(b);
  if (!field_) {
    coeffs_[0] *= b.coeffs_[0];
    return *this;
  }
  coeffs_ = reduce(mul(coeffs_, b.coeffs_), *field_);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (!field_) return Scalar(Rational(1) / coeffs_[0]);
  // Extended Euclid: s * c + t * Phi = g, with g a nonzero constant.
  RatPoly r0 = field_->modulus;
  RatPoly r1(coeffs_.begin(), coeffs_.end());
  strip(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational g = r1.at(0);
  for (auto& c : s1) c /= g;
  return Scalar(field_, reduce(s1, *field_));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  return false;
}

std::string Scalar::to_string() const {
  if (!field_) return gwa::to_string(coeffs_[0]);
  return "(" + text::format_rational_polynomial(coeffs_, 'z') + ") @ zeta" +
         std::to_string(field_->order);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar parse_scalar(std::string_view text, int max_order) {
  text = text::trim(text);
  std::size_t at = text.find('@');
  if (at == std::string_view::npos) return Scalar(parse_rational(text));
  std::string_view body = text::trim(text.substr(0, at));
  std::string_view tag = text::trim(text.substr(at + 1));
  if (tag.substr(0, 4) != "zeta") throw ParseError("expected 'zetaM' after '@'");
  int m = 0;
  try {
    m = std::stoi(std::string(tag.substr(4)));
  } catch (const std::exception&) {
    throw ParseError("bad cyclotomic order in '" + std::string(text) + "'");
  }
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  return Scalar::from_powers(m, text::parse_rational_polynomial(body, 'z'), max_order);
}

}  // namespace gwa
