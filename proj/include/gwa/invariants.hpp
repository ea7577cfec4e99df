#pragma once

// Invariant subalgebras under cyclic torus groups, simplicity and reflectivity
// tests, brute-force HH_0, the Omega action on H_0(A, Ag), and group data.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwa/closedform.hpp"

namespace gwa {

/// A result's hypotheses do not hold for the given input.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ã(H) = prod_{j<r} σ^{-j}(a)(rH) with the same shift h0; the subalgebra of
/// invariants under x -> wx, y -> w^{-1}y for w of order r.
GwaSpec invariant_gwa(const GwaSpec& spec, int r);
/// Checks y^r x^r = ã(h/r) in A. Throws std::invalid_argument for r outside 1..6.
bool verify_invariant_identity(const GwaSpec& spec, int r);

/// a squarefree and no two roots differ by an integer multiple of h0.
/// Throws std::invalid_argument for non-rational a or h0.
bool simplicity_check(const GwaSpec& spec);

struct Reflectivity {
  bool reflective = false;
  std::optional<Scalar> rho;
};
/// ρ with a(ρ - h) = (-1)^n a(h), if any.
Reflectivity reflectivity(const Poly& a);

/// codim of [A_{-1}, x] + [A_1, y] in k[h], stabilized.
StabilizedDim h0_bruteforce(const GwaSpec& spec, const std::optional<Schedule>& schedule = std::nullopt);
/// Same with commutators twisted by x -> wx, y -> w^{-1}y.
StabilizedDim twisted_h0_bruteforce(const GwaSpec& spec, const Scalar& w,
                                    const std::optional<Schedule>& schedule = std::nullopt);
/// True iff the classes of 1, h, ..., h^(n-2) are independent modulo the
/// weight-zero commutators in k[h]_{<=d}.
bool hh0_standard_basis_independent(const GwaSpec& spec, int d);

/// Dimension of the fixed space of h -> h0 + ρ - h acting on
/// k[h] / (σ - w)(a k[h]) = H_0(A, Ag). Throws HypothesisError when the map
/// is not a well-defined involution of the quotient.
int omega_fixed_dim(const GwaSpec& spec, const Scalar& w, const Scalar& rho);

/// Weight-zero parts of ExpY(m, λ)(h^i) and ExpX(m, λ)(h^i) equal h^i for 1 <= i <= i_max.
bool exp_triviality_on_h0(const GwaSpec& spec, int m, const Scalar& lambda, int i_max);

struct ConjugacyClass {
  int order = 1;  // torus order of a representative
  bool omega_in_centralizer = false;
  friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

struct GroupClassData {
  std::vector<ConjugacyClass> classes;
  int a1() const;
  int a2() const;
  /// One line per class: "order=<m> omega=<yes|no>"; blank lines and '#' comments ignored.
  /// Throws ParseError; requires exactly one class of order 1.
  static GroupClassData parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const GroupClassData&, const GroupClassData&) = default;
};

/// HH^* of the invariant subalgebra A^G. Requires simplicity_check and, when
/// some class has Ω in its centralizer, a reflective a. For cyclic data
/// (r classes, all without Ω, an element of order r) agreement records the
/// comparison with hh_dims(invariant_gwa(spec, r))[0] = r n - 1.
DimReport group_report(const GwaSpec& spec, const GroupClassData& classes, int p_max = 4);

}  // namespace gwa
