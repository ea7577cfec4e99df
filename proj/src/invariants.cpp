#include "gwa/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "gwa/textformat.hpp"

namespace gwa {

GwaSpec invariant_gwa(const GwaSpec& spec, int r) {
  if (r < 1) throw std::invalid_argument("invariant_gwa: r must be positive");
  Poly prod = Poly::constant(Scalar(1));
  for (int j = 0; j < r; ++j) prod *= compose_scale(sigma_pow(spec.a, -j, spec.sigma), r);
  return GwaSpec(prod, spec.sigma);
}

bool verify_invariant_identity(const GwaSpec& spec, int r) {
  if (r < 1 || r > 6) throw std::invalid_argument("verify_invariant_identity: r must be in 1..6");
  Algebra A(spec);
  Element lhs = A.multiply(A.power(Element::y(), r), A.power(Element::x(), r));
  Poly expected = invariant_gwa(spec, r).a.substitute_affine(Scalar(Rational(1, r)), Scalar(0));
  return lhs == Element::poly(expected);
}

namespace {

Rational rational_of(const Scalar& s, const char* what) {
  if (!s.is_rational()) throw std::invalid_argument(std::string(what) + " must be rational");
  return s.to_rational();
}

}  // namespace

bool simplicity_check(const GwaSpec& spec) {
  const Poly& a = spec.a;
  std::vector<Rational> c;
  for (const auto& s : a.coefficients()) c.push_back(rational_of(s, "simplicity_check: coefficients of a"));
  Rational h0 = abs(rational_of(spec.sigma.h0(), "simplicity_check: h0"));
  if (degree_invariants(a).d != 0) return false;

  Rational bound(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max<Rational>(bound, abs(c[i] / c.back()));
  bound += 1;
  Rational ratio = 2 * bound / h0;
  mpz_class j_max;
  mpz_cdiv_q(j_max.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  for (long j = 1; j <= j_max.get_si(); ++j) {
    if (!gcd_monic(a, sigma_pow(a, -j, spec.sigma)).is_constant()) return false;
  }
  return true;
}

Reflectivity reflectivity(const Poly& a) {
  DegreeInvariants inv = degree_invariants(a);
  const int n = inv.n;
  Scalar rho = Scalar(-2) * a.coefficient(n - 1) / (Scalar(n) * a.leading());
  Poly reflected = a.substitute_affine(Scalar(-1), rho);
  Poly expected = n % 2 == 0 ? a : -a;
  if (reflected != expected) return {};
  return {true, rho};
}

namespace {

// Codimension of the weight-zero span of [h^i y, x]_g and [h^i x, y]_g in k[h]_{<=d}.
Matrix commutator_columns(const Algebra& A, const AutomorphismSpec& g, int d) {
  std::vector<Poly> cols;
  for (int i = 0; i <= d; ++i) {
    Element hi = Element::poly(Poly::monomial(Scalar(1), i));
    for (const auto& [u, v] : {std::pair{A.multiply(hi, Element::y()), Element::x()},
                               std::pair{A.multiply(hi, Element::x()), Element::y()}}) {
      Element c = A.twisted_commutator(u, v, g);
      Poly p = c.coefficient(0);
      if (c != Element::poly(p)) throw InternalError("commutator left weight zero");
      if (p.degree() <= d) cols.push_back(p);
    }
  }
  Matrix m(d + 1, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (int k = 0; k <= cols[j].degree(); ++k) m.at(k, static_cast<int>(j)) = cols[j].coefficient(k);
  }
  return m;
}

StabilizedDim quotient_dim(const GwaSpec& spec, const AutomorphismSpec& g, const std::optional<Schedule>& schedule,
                           const std::string& what) {
  Algebra A(spec);
  Schedule sch = schedule.value_or(Schedule::for_degree(spec.n()));
  return stabilize(sch, [&](int d) { return d + 1 - rank(commutator_columns(A, g, d)); }, what);
}

}  // namespace

StabilizedDim h0_bruteforce(const GwaSpec& spec, const std::optional<Schedule>& schedule) {
  return quotient_dim(spec, AutomorphismSpec::identity(), schedule, "HH_0 brute force");
}

StabilizedDim twisted_h0_bruteforce(const GwaSpec& spec, const Scalar& w, const std::optional<Schedule>& schedule) {
  if (w.is_one() || w.is_zero()) throw std::invalid_argument("twisted_h0_bruteforce: w must be a root of unity != 1");
  return quotient_dim(spec, Torus{w}, schedule, "twisted H_0 brute force");
}

bool hh0_standard_basis_independent(const GwaSpec& spec, int d) {
  Algebra A(spec);
  Matrix c = commutator_columns(A, AutomorphismSpec::identity(), d);
  const int k = std::max(spec.n() - 1, 0);
  Matrix basis(d + 1, k);
  for (int i = 0; i < k; ++i) basis.at(i, i) = Scalar(1);
  return rank(Matrix::hconcat(c, basis)) == rank(c) + k;
}

namespace {

// Normal forms in k[h] / (σ - w)(a k[h]): representatives of degree < n.
class TwistedQuotient {
 public:
  TwistedQuotient(const GwaSpec& spec, const Scalar& w) : spec_(spec), w_(w) {}

  int dim() const { return spec_.n(); }

  Poly reduce(Poly f) const {
    const int n = spec_.n();
    while (!f.is_zero() && f.degree() >= n) {
      Poly b = relation(f.degree() - n);
      f -= b * (f.leading() / b.leading());
    }
    return f;
  }

  // (σ - w)(a h^i), degree n + i.
  Poly relation(int i) const {
    Poly p = spec_.a * Poly::monomial(Scalar(1), i);
    return sigma_pow(p, 1, spec_.sigma) - w_ * p;
  }

 private:
  const GwaSpec& spec_;
  Scalar w_;
};

}  // namespace

int omega_fixed_dim(const GwaSpec& spec, const Scalar& w, const Scalar& rho) {
  if (w.is_one() || w.is_zero()) throw std::invalid_argument("omega_fixed_dim: w must be a root of unity != 1");
  if (!Algebra(spec).is_reflection_center(rho)) {
    throw HypothesisError("omega_fixed_dim: a(rho - h) != (-1)^n a(h)");
  }
  TwistedQuotient q(spec, w);
  const int n = q.dim();
  const Scalar shift = spec.sigma.h0() + rho;
  auto omega = [&](const Poly& p) { return q.reduce(p.substitute_affine(Scalar(-1), shift)); };

  for (int i = 0; i <= n; ++i) {
    if (!omega(q.relation(i)).is_zero()) {
      throw HypothesisError("omega_fixed_dim: h -> h0 + rho - h does not preserve the relations for w = " +
                            w.to_string());
    }
  }
  Matrix id_minus(n, n);
  for (int k = 0; k < n; ++k) {
    Poly image = omega(Poly::monomial(Scalar(1), k));
    if (omega(image) != Poly::monomial(Scalar(1), k)) {
      throw HypothesisError("omega_fixed_dim: induced map is not an involution");
    }
    for (int i = 0; i < n; ++i) {
      id_minus.at(i, k) = (i == k ? Scalar(1) : Scalar(0)) - image.coefficient(i);
    }
  }
  return n - rank(id_minus);
}

bool exp_triviality_on_h0(const GwaSpec& spec, int m, const Scalar& lambda, int i_max) {
  Algebra A(spec);
  for (int i = 1; i <= i_max; ++i) {
    Element hi = Element::poly(Poly::monomial(Scalar(1), i));
    for (const AutomorphismSpec& g : {AutomorphismSpec(ExpY{m, lambda}), AutomorphismSpec(ExpX{m, lambda})}) {
      if (A.apply(g, hi).weight_component(0) != hi) return false;
    }
  }
  return true;
}

int GroupClassData::a1() const {
  return static_cast<int>(std::count_if(classes.begin(), classes.end(), [](const ConjugacyClass& c) {
    return c.order != 1 && !c.omega_in_centralizer;
  }));
}

int GroupClassData::a2() const {
  return static_cast<int>(std::count_if(classes.begin(), classes.end(), [](const ConjugacyClass& c) {
    return c.order != 1 && c.omega_in_centralizer;
  }));
}

GroupClassData GroupClassData::parse(std::string_view text) {
  GroupClassData out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = text::trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    std::istringstream fields{std::string(body)};
    std::string field;
    std::optional<int> order;
    std::optional<bool> omega;
    auto fail = [&](const std::string& why) {
      return ParseError("group class line " + std::to_string(lineno) + ": " + why);
    };
    while (fields >> field) {
      auto eq = field.find('=');
      if (eq == std::string::npos) throw fail("expected key=value, got '" + field + "'");
      std::string key = field.substr(0, eq), value = field.substr(eq + 1);
      if (key == "order") {
        if (order) throw fail("duplicate order");
        try {
          std::size_t used = 0;
          int v = std::stoi(value, &used);
          if (used != value.size() || v < 1) throw std::invalid_argument("bad order");
          order = v;
        } catch (const std::exception&) {
          throw fail("order must be a positive integer, got '" + value + "'");
        }
      } else if (key == "omega") {
        if (omega) throw fail("duplicate omega");
        if (value != "yes" && value != "no") throw fail("omega must be yes or no");
        omega = value == "yes";
      } else {
        throw fail("unknown key '" + key + "'");
      }
    }
    if (!order || !omega) throw fail("both order and omega are required");
    out.classes.push_back({*order, *omega});
  }
  long identities = std::count_if(out.classes.begin(), out.classes.end(),
                                  [](const ConjugacyClass& c) { return c.order == 1; });
  if (identities != 1) throw ParseError("group class data needs exactly one class of order 1");
  return out;
}

std::string GroupClassData::to_string() const {
  std::string s;
  for (const auto& c : classes) {
    s += "order=" + std::to_string(c.order) + " omega=" + (c.omega_in_centralizer ? "yes" : "no") + "\n";
  }
  return s;
}

DimReport group_report(const GwaSpec& spec, const GroupClassData& classes, int p_max) {
  if (!simplicity_check(spec)) {
    throw HypothesisError("group_report: a is not squarefree or has roots differing by a multiple of h0");
  }
  if (classes.a2() > 0 && !reflectivity(spec.a).reflective) {
    throw HypothesisError("group_report: Omega is declared in a centralizer but a is not reflective");
  }
  DimReport r = group_coh_dims(spec.n(), classes.a1(), classes.a2(), p_max);
  r.d = degree_invariants(spec.a).d;

  const int count = static_cast<int>(classes.classes.size());
  int max_order = 0;
  for (const auto& c : classes.classes) max_order = std::max(max_order, c.order);
  if (classes.a2() == 0 && max_order == count) {
    // Cyclic of order r: HH_0 of the invariant GWA is r n - 1 = dim HH^2(A^G).
    GwaSpec inv = invariant_gwa(spec, count);
    int hh0 = hh_dims(inv.a, inv.sigma, 0).dims[0];
    r.agreement = p_max >= 2 && hh0 == r.dims[2] && hh0 == count * spec.n() - 1;
  }
  return r;
}

}  // namespace gwa
