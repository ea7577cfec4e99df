#pragma once

// Univariate polynomials k[h] over exact scalars, the shift automorphism
// sigma(h) = h - h0, and the gcd machinery behind n = deg a, d = deg(a; a').

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwa/exactfield.hpp"

namespace gwa {

class Poly {
 public:
  Poly() = default;
  /// Ascending coefficients; trailing zeros are stripped.
  explicit Poly(std::vector<Scalar> coeffs);
  static Poly from_rationals(const std::vector<Rational>& coeffs);
  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, int k);
  static Poly h() { return monomial(Scalar(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(int k) const;
  Scalar leading() const { return coefficient(degree()); }
  /// Largest cyclotomic order among the coefficients (1 over Q).
  int field_order() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Scalar evaluate(const Scalar& x) const;
  /// p(scale * h + offset).
  Poly substitute_affine(const Scalar& scale, const Scalar& offset) const;
  Poly monic() const;

  std::string to_string(char var = 'h') const;
  /// Ascending coefficient list, e.g. "[1, -3/2, 1]".
  std::string to_list_string() const;

 private:
  void strip();
  std::vector<Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly derivative(const Poly& p);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd; throws std::invalid_argument when both inputs are zero.
Poly gcd_monic(const Poly& p, const Poly& q);

/// s*p + t*q = g with g the monic gcd.
struct BezoutResult {
  Poly g;
  Poly s;
  Poly t;
};
BezoutResult extended_gcd(const Poly& p, const Poly& q);

/// The automorphism sigma(h) = h - h0 of k[h].
class ShiftSigma {
 public:
  explicit ShiftSigma(Scalar h0);
  const Scalar& h0() const { return h0_; }
  friend bool operator==(const ShiftSigma& a, const ShiftSigma& b) { return a.h0_ == b.h0_; }

 private:
  Scalar h0_;
};

/// p(h - k*h0); negative k gives the inverse powers.
Poly sigma_pow(const Poly& p, long k, const ShiftSigma& s);

struct DegreeInvariants {
  int n;  // deg a
  int d;  // deg gcd(a, a')
};

/// Throws std::invalid_argument when a is constant.
DegreeInvariants degree_invariants(const Poly& a);

/// p(r * H) as a polynomial in H.
Poly compose_scale(const Poly& p, long r);

/// Phi_m as a polynomial over Q.
Poly cyclotomic_polynomial(int m);

/// "h^2 - 3/2*h + 1" or "[1, -3/2, 1]"; rational coefficients.
Poly parse_poly(std::string_view text, char var = 'h');

}  // namespace gwa
