#pragma once

// Exact scalars: GMP rationals and elements of the cyclotomic fields Q(zeta_m),
// represented as Q[t]/(Phi_m) with canonical reduced representatives.

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gwa {

using Rational = mpq_class;

/// Thrown on malformed text input (polynomials, scalars, config).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when scalars from incompatible cyclotomic fields are combined.
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kDefaultMaxCyclotomicOrder = 64;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

int euler_phi(int m);

/// Coefficients of the m-th cyclotomic polynomial in ascending degree,
/// obtained by dividing t^m - 1 by Phi_d for every proper divisor d of m.
std::vector<Rational> cyclotomic_coefficients(int m);

/// Shared, immutable description of Q(zeta_m) for m >= 3.
struct CyclotomicField {
  int order;
  int degree;                    // phi(order)
  std::vector<Rational> modulus;  // Phi_m, ascending, monic
};

class Scalar {
 public:
  Scalar() : coeffs_{Rational(0)} {}
  Scalar(long v) : coeffs_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q) : coeffs_{q} { coeffs_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)

  /// Primitive m-th root of unity. Orders 1 and 2 give the rationals 1 and -1.
  static Scalar zeta(int m, int max_order = kDefaultMaxCyclotomicOrder);
  /// Element sum_i coeffs[i] * zeta_m^i, reduced modulo Phi_m.
  static Scalar from_powers(int m, const std::vector<Rational>& coeffs,
                            int max_order = kDefaultMaxCyclotomicOrder);

  /// 1 for rationals, otherwise m with the value living in Q(zeta_m).
  int order() const { return field_ ? field_->order : 1; }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  /// Canonical coefficient vector on 1, z, ..., z^(phi(m)-1).
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value is rational, whatever field it is stored in.
  bool is_rational() const;
  /// Throws std::domain_error when the value is not rational.
  Rational to_rational() const;

  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q" for rationals, "(1 + 2*z) @ zeta4" for cyclotomic values.
  std::string to_string() const;

 private:
  Scalar(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> c)
      : field_(std::move(f)), coeffs_(std::move(c)) {}

  // Brings both operands into a common field; throws FieldMismatch.
  void unify(Scalar& other);
  void lift_to(const std::shared_ptr<const CyclotomicField>& f);

  std::shared_ptr<const CyclotomicField> field_;  // null means Q
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Accepts "p", "p/q" and "(c0 + c1*z + ...) @ zetaM".
Scalar parse_scalar(std::string_view text, int max_order = kDefaultMaxCyclotomicOrder);

}  // namespace gwa
