#pragma once

// The resolution-based oracle for Hochschild (co)homology.
//
// Rows of the double complex are copies of A ⊗ Λ*V ⊗ A, V = span(e_x, e_y, e_h),
// with the Chevalley-Eilenberg differential horizontally and the map .df
// between consecutive rows. Row j, exterior degree k sits in total degree k + 2j.
// Chains are reduced to weight zero, where every component is a copy of k[h].

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwa/gwacore.hpp"
#include "gwa/trunclin.hpp"

namespace gwa {

enum class Variant { Homology, Cohomology };

struct ComplexKind {
  Variant variant = Variant::Homology;
  std::optional<Scalar> twist;  // torus parameter w of the coefficient twist

  static ComplexKind homology() { return {Variant::Homology, std::nullopt}; }
  static ComplexKind cohomology() { return {Variant::Cohomology, std::nullopt}; }
  static ComplexKind twisted(Variant v, const Scalar& w);

  bool is_twisted() const { return twist.has_value(); }
  AutomorphismSpec automorphism() const;
  std::string to_string() const;
};

// Exterior monomials are bitmasks over x = 1, y = 2, h = 4.
inline constexpr unsigned kEx = 1, kEy = 2, kEh = 4;
int wedge_degree(unsigned mask);
/// deg e_x = 1, deg e_y = -1, deg e_h = 0.
int wedge_weight(unsigned mask);
/// Sign and mask of e_{f1} ∧ e_{f2} ∧ ... for single factors; sign 0 if a factor repeats.
std::pair<int, unsigned> wedge_sequence(const std::vector<unsigned>& factors);
/// Canonical masks of exterior degree k (x < y < h).
std::vector<unsigned> masks_of_degree(int k);

struct Generator {
  int row = 0;
  unsigned mask = 0;
  int degree() const { return wedge_degree(mask) + 2 * row; }
  auto operator<=>(const Generator&) const = default;
};

/// Generators of total degree p: rows j with 0 <= p - 2j <= 3.
std::vector<Generator> degree_generators(int p);

/// left ⊗ target ⊗ right in the free bimodule.
struct BimoduleTerm {
  Element left;
  Generator target;
  Element right;
};

/// Horizontal differential of 1 ⊗ ω ⊗ 1 (targets in the same row).
std::vector<BimoduleTerm> ce_terms(const Algebra& A, unsigned mask, int row = 0);
/// Vertical map .df of 1 ⊗ ω ⊗ 1 from row `row` >= 1 to row - 1.
std::vector<BimoduleTerm> df_terms(const Algebra& A, unsigned mask, int row);
/// Total differential: horizontal part plus the signed vertical part.
std::vector<BimoduleTerm> total_terms(const Algebra& A, const Generator& g);

/// Homology chain sum_g m_g ⊗ g, or a cochain g -> f(g).
using Chain = std::map<Generator, Element>;

/// Homology boundary in M ⊗ (resolution), M = A with right action twisted by g.
Chain boundary(const Algebra& A, const ComplexKind& kind, const Chain& c, bool horizontal_only = false);
/// Cohomology coboundary evaluated on the given generators.
Chain coboundary(const Algebra& A, const ComplexKind& kind, const Chain& f,
                 const std::vector<Generator>& targets, bool horizontal_only = false);

/// Truncated weight-zero differentials of one total complex.
struct WeightZeroChain {
  ComplexKind kind;
  int p_max = 0;
  std::vector<TruncatedSpace> spaces;        // spaces[p], p = 0..p_max
  std::vector<TruncatedMap> differentials;   // homology: d_p for p >= 1; cohomology: δ^p for p < p_max
};

/// Builds and caches weight-zero matrices of one complex.
class ComplexAssembler {
 public:
  ComplexAssembler(Algebra A, ComplexKind kind, bool horizontal_only = false);

  const Algebra& algebra() const { return A_; }
  const ComplexKind& kind() const { return kind_; }
  int field_order() const;
  /// Generators in degree p (a single row when horizontal_only).
  std::vector<Generator> generators(int p) const;

  /// Homology: C_p -> C_{p-1}. Cohomology: C^p -> C^{p+1}.
  /// Throws InternalError if an image leaves weight zero or exceeds d_cod.
  TruncatedMap differential(int p, int d_dom, int d_cod);

 private:
  using Column = std::vector<std::pair<Generator, Poly>>;
  const Column& column(const Generator& g, int power);
  const std::vector<BimoduleTerm>& terms(const Generator& g);

  Algebra A_;
  ComplexKind kind_;
  bool horizontal_only_;
  std::map<Generator, std::vector<BimoduleTerm>> terms_;
  std::map<Generator, std::vector<std::pair<Generator, BimoduleTerm>>> incoming_;
  std::map<std::pair<Generator, int>, Column> columns_;
};

/// Truncation margin n + 1: each codomain bound exceeds its domain bound by it.
int truncation_margin(const GwaSpec& spec);

/// Throws InternalError when two consecutive differentials do not compose to zero.
WeightZeroChain build_differentials(const GwaSpec& spec, const ComplexKind& kind, int p_max, int d);

inline constexpr int kMaxDegree = 8;

/// Stabilized (co)homology dimensions in degrees 0..p_max.
std::vector<StabilizedDim> oracle_dims(const GwaSpec& spec, const ComplexKind& kind, int p_max,
                                       const std::optional<Schedule>& schedule = std::nullopt);
/// Same value at a single truncation bound.
int oracle_dim_at(ComplexAssembler& assembler, int p, int d);

/// Homology of a single row at Λ^0..Λ^3 (cohomology: entry i is Λ^{3-i}).
std::array<StabilizedDim, 4> row_homology_dims(const GwaSpec& spec, const ComplexKind& kind,
                                               const std::optional<Schedule>& schedule = std::nullopt);

struct BezoutWitness {
  Poly alpha;
  Poly beta;
  Poly gamma;
};
struct BezoutD2 {
  bool epimorphism = false;  // gcd(a, a') = 1
  std::optional<BezoutWitness> witness;
  bool verified = false;     // witness satisfies both forms of the identity
};
/// Solves (σ^-1(α) - β) a - σ^-1(γ) a' = 1 when gcd(a, a') = 1.
BezoutD2 bezout_d2_test(const Poly& a, const ShiftSigma& s);
bool check_bezout_witness(const Poly& a, const ShiftSigma& s, const BezoutWitness& w);

/// s(c ⊗ ω) = c ⊗ (e_h ∧ ω); checks d s + s d = -h0 * weight * id on random
/// homogeneous chains of nonzero weight.
bool euler_homotopy_check(const GwaSpec& spec, int samples, unsigned seed = 1);
/// c ⊗ ω -> c ⊗ (e_h ∧ ω), which is (-1)^k c ⊗ (ω ∧ e_h) in exterior degree k.
Chain euler_homotopy(const Chain& c);

/// Weight-zero elements commuting with x, y and h.
StabilizedDim center_dim(const GwaSpec& spec, const std::optional<Schedule>& schedule = std::nullopt);

}  // namespace gwa
