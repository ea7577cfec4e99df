#pragma once

// Normal-form arithmetic in the generalized Weyl algebra A = A(k[h], a, sigma):
//   yx = a,  xy = sigma(a),  x r = sigma(r) x,  r y = y sigma(r).
// Elements are stored as sum_j p_j(h) X^j with X^j = x^j for j > 0 and
// y^|j| for j < 0; polynomials always sit to the left.

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gwa/polyring.hpp"

namespace gwa {

struct GwaSpec {
  GwaSpec(Poly a, ShiftSigma sigma);
  Poly a;
  ShiftSigma sigma;
  int n() const { return a.degree(); }
};

class Element {
 public:
  using Terms = std::map<int, Poly>;

  Element() = default;
  explicit Element(Terms terms);
  static Element poly(const Poly& p, int weight = 0);
  static Element scalar(const Scalar& c) { return poly(Poly::constant(c)); }
  static Element x(int k = 1) { return poly(Poly::constant(Scalar(1)), k); }
  static Element y(int k = 1) { return poly(Poly::constant(Scalar(1)), -k); }
  static Element h() { return poly(Poly::h()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Polynomial attached to weight j (zero when absent).
  Poly coefficient(int weight) const;
  Element weight_component(int weight) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  Element operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// e.g. "(h^2 - 1)*x^2 + 3*y"
  std::string to_string() const;

 private:
  void add_term(int weight, const Poly& p);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

/// Parses the element text format; x/y powers must come last in each term.
Element parse_element(std::string_view text);

struct Torus {
  Scalar w;
};
/// exp(lambda ad(y^m)), with ad(u)(v) = uv - vu.
struct ExpY {
  int m;
  Scalar lambda;
};
/// exp(lambda ad(x^m)).
struct ExpX {
  int m;
  Scalar lambda;
};
/// x -> y, y -> (-1)^n x, h -> h0 + rho - h.
struct Omega {
  Scalar rho;
};
class AutomorphismSpec;
/// parts[0] is applied first.
struct Composite {
  std::vector<AutomorphismSpec> parts;
};

class AutomorphismSpec {
 public:
  using Kind = std::variant<Torus, ExpY, ExpX, Omega, Composite>;
  AutomorphismSpec(Kind k);  // NOLINT(google-explicit-constructor)
  AutomorphismSpec(Torus t) : AutomorphismSpec(Kind(std::move(t))) {}  // NOLINT
  AutomorphismSpec(ExpY e) : AutomorphismSpec(Kind(std::move(e))) {}   // NOLINT
  AutomorphismSpec(ExpX e) : AutomorphismSpec(Kind(std::move(e))) {}   // NOLINT
  AutomorphismSpec(Omega o) : AutomorphismSpec(Kind(std::move(o))) {}  // NOLINT
  AutomorphismSpec(Composite c) : AutomorphismSpec(Kind(std::move(c))) {}  // NOLINT
  static AutomorphismSpec identity() { return Torus{Scalar(1)}; }
  const Kind& kind() const { return kind_; }
  std::string to_string() const;

 private:
  Kind kind_;
};

/// Thrown when an internal consistency check fails (rewriting, d o d, ...).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Algebra {
 public:
  explicit Algebra(GwaSpec spec);

  const GwaSpec& spec() const { return spec_; }
  int n() const { return spec_.n(); }
  const ShiftSigma& sigma() const { return spec_.sigma; }

  /// sigma^k(a), cached for small |k|.
  Poly sigma_a(long k) const;
  Poly sigma(const Poly& p, long k = 1) const { return sigma_pow(p, k, spec_.sigma); }

  Element multiply(const Element& u, const Element& v) const;
  Element power(const Element& u, int k) const;
  Element commutator(const Element& u, const Element& v) const;
  /// u*v - v*g(u): the commutator with coefficients twisted by g.
  Element twisted_commutator(const Element& u, const Element& v, const AutomorphismSpec& g) const;

  struct GeneratorImages {
    Element x;
    Element y;
    Element h;
  };
  GeneratorImages images(const AutomorphismSpec& g) const;
  Element apply(const AutomorphismSpec& g, const Element& u) const;

  /// sum_i lambda^i/i! (ad t)^i (u); throws InternalError past the cap.
  Element exp_ad(const Element& t, const Scalar& lambda, const Element& u, int cap) const;
  int ad_series_cap(int m) const { return 4 * (m * n() + 1); }

  /// True iff a(rho - h) = (-1)^n a(h).
  bool is_reflection_center(const Scalar& rho) const;

 private:
  Element apply_images(const GeneratorImages& img, const Element& u) const;

  GwaSpec spec_;
  static constexpr long kCache = 16;
  std::vector<Poly> sigma_a_;  // index k + kCache
};

}  // namespace gwa
