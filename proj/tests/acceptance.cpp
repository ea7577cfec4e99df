// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gwa/gwacli.hpp"

using namespace gwa;

namespace {

using Clock = std::chrono::steady_clock;
using V = std::vector<int>;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string show(const V& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str() + ']';
}

std::vector<int> values(const std::vector<StabilizedDim>& dims) {
  V out;
  for (const auto& d : dims) out.push_back(d.value);
  return out;
}

struct Case {
  Poly a;
  Rational h0;
  GwaSpec spec() const { return GwaSpec(a, ShiftSigma(Scalar(h0))); }
  std::string label() const { return "a = " + a.to_string() + ", h0 = " + h0.get_str(); }
};

// Fixed polynomials of degree 1..5 plus seeded random ones; h0 cycles through 1, 2, 1/2.
std::vector<Case> suite() {
  std::vector<Poly> polys;
  for (const char* a : {"h", "2*h + 3", "h - 1/2", "h^2 - 1", "h^2 - 2", "h^2", "-h^2 - h - 1/4", "1 - h - h^2",
                        "h^2 + h + 1", "h^3", "h^3 - h", "h^3 - h - 1", "h^3 - 3*h + 2", "h^3 + 2*h^2 + h",
                        "h^4 - 5*h^2 + 6", "h^4 - 2*h^2 + 1", "h^4 + h + 1", "h^4", "h^5 - h", "h^5 - 2*h^4 + h^3",
                        "h^5 + 3*h^2 - 1/2", "h^5 - 2*h^3 + h"}) {
    polys.push_back(parse_poly(a));
  }
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  auto random_poly = [&](int deg) {
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng), den(rng));
    c.emplace_back(coef(rng) == 0 ? 1 : 2);
    return Poly::from_rationals(c);
  };
  for (int deg : {3, 4, 5}) polys.push_back(random_poly(deg));
  for (int deg : {1, 2, 3}) {
    // Engineered repeated root: (h - r)^2 * random.
    Poly lin = Poly::from_rationals({Rational(-coef(rng), den(rng)), Rational(1)});
    polys.push_back(lin * lin * random_poly(deg));
  }
  const Rational h0s[3] = {Rational(1), Rational(2), Rational(1, 2)};
  std::vector<Case> out;
  for (std::size_t i = 0; i < polys.size(); ++i) out.push_back({polys[i], h0s[i % 3]});
  return out;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = since(t0);
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << s << " s)\n";
  for (const auto& n : o.notes) std::cout << "    " << n << '\n';
  std::cout.flush();
  if (!o.pass) ++failures;
}

// Formula and oracle for homology and cohomology must both equal the expected lists.
void expect_both(Outcome& o, const GwaSpec& spec, int p_max, const V& hh, const V& coh) {
  V f_hh = hh_dims(spec.a, spec.sigma, p_max).dims;
  V f_coh = coh_dims(spec.a, spec.sigma, p_max).dims;
  V o_hh = values(oracle_dims(spec, ComplexKind::homology(), p_max));
  V o_coh = values(oracle_dims(spec, ComplexKind::cohomology(), p_max));
  o.expect(f_hh == hh, "formula HH_* = " + show(f_hh) + ", expected " + show(hh));
  o.expect(o_hh == hh, "oracle HH_* = " + show(o_hh) + ", expected " + show(hh));
  o.expect(f_coh == coh, "formula HH^* = " + show(f_coh) + ", expected " + show(coh));
  o.expect(o_coh == coh, "oracle HH^* = " + show(o_coh) + ", expected " + show(coh));
}

// (σ⁻¹(α) - β) a - σ⁻¹(γ) a' = 1, evaluated directly.
bool witness_identity(const Poly& a, const ShiftSigma& s, const BezoutWitness& w) {
  Poly lhs = (sigma_pow(w.alpha, -1, s) - w.beta) * a - sigma_pow(w.gamma, -1, s) * derivative(a);
  return lhs == Poly::constant(Scalar(1));
}

}  // namespace

int main() {
  const std::vector<Case> cases = suite();
  std::cout << "suite: " << cases.size() << " polynomials\n";

  criterion(1, "Weyl algebra HH_* = [0,0,1,0,0,0], HH^* = [1,0,0,0,0,0] in < 5 s", [](Outcome& o) {
    auto t0 = Clock::now();
    expect_both(o, GwaSpec(parse_poly("h"), ShiftSigma(Scalar(1))), 5, {0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0});
    double s = since(t0);
    o.expect(s < 5, "runtime " + std::to_string(s) + " s");
  });

  criterion(2, "B_lambda regular (lambda = 1): [1,0,1,0,0] both ways, duality", [](Outcome& o) {
    GwaSpec spec(parse_poly("1 - h - h^2"), ShiftSigma(Scalar(1)));
    expect_both(o, spec, 4, {1, 0, 1, 0, 0}, {1, 0, 1, 0, 0});
    o.expect(duality_flag(spec.a, spec.sigma), "duality flag false");
  });

  criterion(3, "B_lambda singular (lambda = -1/4): [1,0,1,1,1] both ways, no duality", [](Outcome& o) {
    GwaSpec spec(parse_poly("-1/4 - h - h^2"), ShiftSigma(Scalar(1)));
    expect_both(o, spec, 4, {1, 0, 1, 1, 1}, {1, 0, 1, 1, 1});
    o.expect(!duality_flag(spec.a, spec.sigma), "duality flag true");
  });

  criterion(4, "oracle = closed forms for HH_* and HH^* on the suite, degrees 0..4, < 10 min", [&](Outcome& o) {
    auto t0 = Clock::now();
    int squarefree = 0;
    for (const auto& c : cases) {
      GwaSpec spec = c.spec();
      if (degree_invariants(c.a).d == 0) ++squarefree;
      for (const auto& kind : {ComplexKind::homology(), ComplexKind::cohomology()}) {
        DimReport f = formula_dims(spec, kind, 4);
        DimReport r = oracle_report(spec, kind, 4);
        o.expect(mark_agreement(f, r), c.label() + " " + kind.to_string() + ": formula " + show(f.dims) +
                                           ", oracle " + show(r.dims));
      }
    }
    o.expect(squarefree > 0 && squarefree < static_cast<int>(cases.size()), "suite lacks a squarefree/multiple mix");
    double s = since(t0);
    o.expect(s < 600, "runtime " + std::to_string(s) + " s");
    o.notes.push_back(std::to_string(cases.size()) + " polynomials, " + std::to_string(squarefree) +
                      " squarefree, " + std::to_string(s) + " s");
  });

  criterion(5, "twisted oracle = [n,d,d,...] / [0,0,n,d,...] for w in {-1, zeta3, zeta4}", [&](Outcome& o) {
    for (const auto& c : cases) {
      GwaSpec spec = c.spec();
      for (const Scalar& w : {Scalar(-1), Scalar::zeta(3), Scalar::zeta(4)}) {
        for (Variant v : {Variant::Homology, Variant::Cohomology}) {
          ComplexKind kind = ComplexKind::twisted(v, w);
          DimReport f = formula_dims(spec, kind, 4);
          DimReport r = oracle_report(spec, kind, 4);
          o.expect(mark_agreement(f, r), c.label() + " " + kind.to_string() + ": formula " + show(f.dims) +
                                             ", oracle " + show(r.dims));
        }
      }
    }
  });

  criterion(6, "invariant subalgebras: y^r x^r identity and HH_0(A^G) = r n - 1", [](Outcome& o) {
    for (const char* a : {"h", "h^2 - 2", "h^3 - h - 1"}) {
      GwaSpec spec(parse_poly(a), ShiftSigma(Scalar(1)));
      o.expect(simplicity_check(spec), std::string(a) + ": simplicity_check false");
      for (int r : {2, 3}) {
        o.expect(verify_invariant_identity(spec, r), std::string(a) + ", r = " + std::to_string(r) + ": identity");
        GwaSpec inv = invariant_gwa(spec, r);
        int hh0 = hh_dims(inv.a, inv.sigma, 0).dims[0];
        o.expect(hh0 == r * spec.n() - 1, std::string(a) + ", r = " + std::to_string(r) +
                                              ": HH_0 = " + std::to_string(hh0));
        std::string block = "order=1 omega=no\n";
        for (int k = 1; k < r; ++k) block += "order=" + std::to_string(r) + " omega=no\n";
        DimReport g = group_report(spec, GroupClassData::parse(block));
        o.expect(g.agreement == std::optional<bool>(true) && g.dims[2] == hh0,
                 std::string(a) + ", r = " + std::to_string(r) + ": group report");
      }
    }
  });

  criterion(7, "Omega fixed dimension = floor((n+1)/2) on reflective samples", [](Outcome& o) {
    int samples = 0;
    for (const char* a : {"h", "1 - h - h^2", "h^2 - 2", "h^3 - 3*h^2 + 2*h", "h^3 - 4*h", "h^4 - 5*h^2 + 6",
                          "h^4 + 2*h^3 - h - 1/4", "h^5 - 5*h^3 + 4*h"}) {
      GwaSpec spec(parse_poly(a), ShiftSigma(Scalar(1)));
      Reflectivity refl = reflectivity(spec.a);
      if (!refl.reflective) {
        o.fail(std::string(a) + " is not reflective");
        continue;
      }
      ++samples;
      int dim = omega_fixed_dim(spec, Scalar(-1), *refl.rho);
      o.expect(dim == (spec.n() + 1) / 2, std::string(a) + ": fixed dimension " + std::to_string(dim));
    }
    o.expect(samples >= 5, "fewer than 5 reflective samples");
  });

  criterion(8, "property suite: d o d, Euler homotopy, center, GWA identities, HH_0 basis, exp triviality",
            [&](Outcome& o) {
              for (const auto& c : cases) {
                for (const auto& check : cli::property_suite(c.spec(), 1, 50)) {
                  o.expect(check.passed, c.label() + ": " + check.name + " " + check.detail);
                }
              }
              GwaSpec h3(parse_poly("h^3"), ShiftSigma(Scalar(1)));
              for (int m : {1, 2}) {
                for (const Rational& l : {Rational(1), Rational(3, 2)}) {
                  o.expect(exp_triviality_on_h0(h3, m, Scalar(l), 3), "exp triviality on a = h^3");
                }
              }
            });

  criterion(9, "Bezout d2 criterion agrees with gcd(a, a') = 1; witnesses satisfy the identity", [&](Outcome& o) {
    int witnesses = 0;
    for (const auto& c : cases) {
      ShiftSigma s(Scalar(c.h0));
      BezoutD2 b = bezout_d2_test(c.a, s);
      bool coprime = gcd_monic(c.a, derivative(c.a)).is_constant();
      o.expect(b.epimorphism == coprime, c.label() + ": criterion " + (b.epimorphism ? "true" : "false"));
      o.expect(b.witness.has_value() == coprime, c.label() + ": witness presence");
      if (b.witness) {
        ++witnesses;
        o.expect(witness_identity(c.a, s, *b.witness), c.label() + ": witness fails the identity");
      }
    }
    o.notes.push_back(std::to_string(witnesses) + " witnesses checked");
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << '\n';
  return failures == 0 ? 0 : 1;
}
