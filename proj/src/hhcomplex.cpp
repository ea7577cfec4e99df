#include "gwa/hhcomplex.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace gwa {

ComplexKind ComplexKind::twisted(Variant v, const Scalar& w) {
  if (w.is_zero()) throw std::invalid_argument("twist parameter must be nonzero");
  return {v, w};
}

AutomorphismSpec ComplexKind::automorphism() const {
  return twist ? AutomorphismSpec(Torus{*twist}) : AutomorphismSpec::identity();
}

std::string ComplexKind::to_string() const {
  std::string s = variant == Variant::Homology ? "homology" : "cohomology";
  if (twist) s += "[w=" + twist->to_string() + "]";
  return s;
}

int wedge_degree(unsigned mask) { return std::popcount(mask); }

int wedge_weight(unsigned mask) { return ((mask & kEx) ? 1 : 0) - ((mask & kEy) ? 1 : 0); }

std::pair<int, unsigned> wedge_sequence(const std::vector<unsigned>& factors) {
  unsigned mask = 0;
  int sign = 1;
  for (unsigned f : factors) {
    if (mask & f) return {0, 0};
    // f moves left past every factor already present that is larger than it
    unsigned larger = mask & ~((f << 1) - 1);
    if (std::popcount(larger) % 2) sign = -sign;
    mask |= f;
  }
  return {sign, mask};
}

std::vector<unsigned> masks_of_degree(int k) {
  switch (k) {
    case 0: return {0};
    case 1: return {kEx, kEy, kEh};
    case 2: return {kEx | kEy, kEx | kEh, kEy | kEh};
    case 3: return {kEx | kEy | kEh};
    default: return {};
  }
}

std::vector<Generator> degree_generators(int p) {
  std::vector<Generator> out;
  for (int j = 0; 2 * j <= p; ++j) {
    for (unsigned m : masks_of_degree(p - 2 * j)) out.push_back({j, m});
  }
  return out;
}

namespace {

Element hpow(int i) { return Element::poly(Poly::monomial(Scalar(1), i)); }

Element gen_of(unsigned bit) {
  switch (bit) {
    case kEx: return Element::x();
    case kEy: return Element::y();
    default: return Element::h();
  }
}

std::vector<unsigned> factors_of(unsigned mask) {
  std::vector<unsigned> f;
  for (unsigned b : {kEx, kEy, kEh})
    if (mask & b) f.push_back(b);
  return f;
}

// sum_k p_k sum_{i<k} L(h^i) ⊗ e ⊗ R(h^{k-1-i}), with L, R = id or sigma.
void push_derivation(std::vector<BimoduleTerm>& out, const Algebra& A, const Poly& p, Scalar coef,
                     unsigned mask, int row, bool sigma_left, bool sigma_right) {
  for (int k = 1; k <= p.degree(); ++k) {
    Scalar c = p.coefficient(k) * coef;
    if (c.is_zero()) continue;
    for (int i = 0; i < k; ++i) {
      Poly l = Poly::monomial(Scalar(1), i);
      Poly r = Poly::monomial(Scalar(1), k - 1 - i);
      if (sigma_left) l = A.sigma(l);
      if (sigma_right) r = A.sigma(r);
      out.push_back({Element::poly(l) * c, {row, mask}, Element::poly(r)});
    }
  }
}

// Sign of the vertical part in the total differential.
int vertical_sign(int /*k*/) { return 1; }

}  // namespace

std::vector<BimoduleTerm> ce_terms(const Algebra& A, unsigned mask, int row) {
  std::vector<BimoduleTerm> out;
  auto f = factors_of(mask);
  int k = static_cast<int>(f.size());
  for (int i = 0; i < k; ++i) {
    Scalar sign(i % 2 == 0 ? 1 : -1);  // (-1)^(i+1) with 1-based i
    unsigned rest = mask & ~f[i];
    out.push_back({gen_of(f[i]) * sign, {row, rest}, Element::scalar(Scalar(1))});
    out.push_back({Element::scalar(-sign), {row, rest}, gen_of(f[i])});
  }
  const Scalar h0 = A.sigma().h0();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Scalar sign((i + j) % 2 == 0 ? 1 : -1);
      unsigned rest = mask & ~f[i] & ~f[j];
      auto attach = [&](unsigned e, Element left, Element right) {
        std::vector<unsigned> seq{e};
        for (unsigned b : factors_of(rest)) seq.push_back(b);
        auto [s, m] = wedge_sequence(seq);
        if (s == 0) return;
        out.push_back({left * (sign * Scalar(s)), {row, m}, std::move(right)});
      };
      unsigned pair = f[i] | f[j];
      if (pair == (kEx | kEy)) {
        // [x, y] = sigma(a) - a, represented through its formal derivative
        std::vector<BimoduleTerm> der;
        push_derivation(der, A, A.sigma_a(1) - A.spec().a, Scalar(1), kEh, row, false, false);
        for (auto& t : der) attach(kEh, t.left, t.right);
      } else if (pair == (kEx | kEh)) {
        attach(kEx, Element::scalar(-h0), Element::scalar(Scalar(1)));
      } else {
        attach(kEy, Element::scalar(h0), Element::scalar(Scalar(1)));
      }
    }
  }
  return out;
}

std::vector<BimoduleTerm> df_terms(const Algebra& A, unsigned mask, int row) {
  if (row < 1) return {};
  std::vector<BimoduleTerm> out;
  const int r = row - 1;
  const Poly& a = A.spec().a;
  const Element one = Element::scalar(Scalar(1));
  auto w = [](std::vector<unsigned> seq) { return wedge_sequence(seq); };
  auto push = [&](Element left, std::vector<unsigned> seq, Element right, Scalar c) {
    auto [s, m] = w(std::move(seq));
    if (s == 0) return;
    out.push_back({left * (c * Scalar(s)), {r, m}, std::move(right)});
  };
  switch (mask) {
    case 0:
      push(Element::y(), {kEx}, one, Scalar(1));
      push(one, {kEy}, Element::x(), Scalar(1));
      push_derivation(out, A, a, Scalar(-1), kEh, r, false, false);
      break;
    case kEx:
      push(one, {kEx, kEy}, Element::x(), Scalar(-1));
      push_derivation(out, A, a, Scalar(1), kEx | kEh, r, true, false);
      break;
    case kEy:
      push(Element::y(), {kEy, kEx}, one, Scalar(-1));
      push_derivation(out, A, a, Scalar(1), kEy | kEh, r, false, true);
      break;
    case kEh:
      push(Element::y(), {kEh, kEx}, one, Scalar(-1));
      push(one, {kEh, kEy}, Element::x(), Scalar(-1));
      break;
    case kEy | kEh:
      push(Element::y(), {kEy, kEh, kEx}, one, Scalar(1));
      break;
    case kEx | kEh:
      push(one, {kEx, kEh, kEy}, Element::x(), Scalar(1));
      break;
    case kEx | kEy:
      push_derivation(out, A, a, Scalar(-1), kEx | kEy | kEh, r, true, true);
      break;
    default:
      break;
  }
  return out;
}

std::vector<BimoduleTerm> total_terms(const Algebra& A, const Generator& g) {
  auto out = ce_terms(A, g.mask, g.row);
  Scalar s(vertical_sign(wedge_degree(g.mask)));
  for (auto& t : df_terms(A, g.mask, g.row)) {
    t.left *= s;
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

void add_to(Chain& c, const Generator& g, const Element& e) {
  if (e.is_zero()) return;
  auto it = c.find(g);
  if (it == c.end()) {
    c.emplace(g, e);
    return;
  }
  it->second += e;
  if (it->second.is_zero()) c.erase(it);
}

}  // namespace

Chain boundary(const Algebra& A, const ComplexKind& kind, const Chain& c, bool horizontal_only) {
  AutomorphismSpec g = kind.automorphism();
  Chain out;
  for (const auto& [gen, m] : c) {
    auto terms = horizontal_only ? ce_terms(A, gen.mask, gen.row) : total_terms(A, gen);
    for (const auto& t : terms) {
      add_to(out, t.target, A.multiply(A.multiply(t.right, m), A.apply(g, t.left)));
    }
  }
  return out;
}

Chain coboundary(const Algebra& A, const ComplexKind& kind, const Chain& f,
                 const std::vector<Generator>& targets, bool horizontal_only) {
  AutomorphismSpec g = kind.automorphism();
  Chain out;
  for (const auto& u : targets) {
    auto terms = horizontal_only ? ce_terms(A, u.mask, u.row) : total_terms(A, u);
    for (const auto& t : terms) {
      auto it = f.find(t.target);
      if (it == f.end()) continue;
      add_to(out, u, A.multiply(A.multiply(t.left, it->second), A.apply(g, t.right)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ComplexAssembler

ComplexAssembler::ComplexAssembler(Algebra A, ComplexKind kind, bool horizontal_only)
    : A_(std::move(A)), kind_(std::move(kind)), horizontal_only_(horizontal_only) {}

int ComplexAssembler::field_order() const {
  int m = A_.spec().a.field_order();
  if (kind_.twist && !kind_.twist->is_rational()) m = std::max(m, kind_.twist->order());
  return m;
}

std::vector<Generator> ComplexAssembler::generators(int p) const {
  if (p < 0) return {};
  if (!horizontal_only_) return degree_generators(p);
  std::vector<Generator> out;
  for (unsigned m : masks_of_degree(p)) out.push_back({0, m});
  return out;
}

const std::vector<BimoduleTerm>& ComplexAssembler::terms(const Generator& g) {
  auto it = terms_.find(g);
  if (it != terms_.end()) return it->second;
  auto t = horizontal_only_ ? ce_terms(A_, g.mask, g.row) : total_terms(A_, g);
  return terms_.emplace(g, std::move(t)).first->second;
}

const ComplexAssembler::Column& ComplexAssembler::column(const Generator& g, int power) {
  auto key = std::make_pair(g, power);
  auto it = columns_.find(key);
  if (it != columns_.end()) return it->second;

  AutomorphismSpec tw = kind_.automorphism();
  Chain image;
  if (kind_.variant == Variant::Homology) {
    Element m = Element::poly(Poly::monomial(Scalar(1), power), -wedge_weight(g.mask));
    for (const auto& t : terms(g)) {
      add_to(image, t.target, A_.multiply(A_.multiply(t.right, m), A_.apply(tw, t.left)));
    }
  } else {
    if (!incoming_.count(g)) {
      auto& list = incoming_[g];
      for (const auto& u : generators(g.degree() + 1)) {
        for (const auto& t : terms(u)) {
          if (t.target == g) list.emplace_back(u, t);
        }
      }
    }
    Element f = Element::poly(Poly::monomial(Scalar(1), power), wedge_weight(g.mask));
    for (const auto& [u, t] : incoming_[g]) {
      add_to(image, u, A_.multiply(A_.multiply(t.left, f), A_.apply(tw, t.right)));
    }
  }

  Column col;
  for (const auto& [u, e] : image) {
    int slot = kind_.variant == Variant::Homology ? -wedge_weight(u.mask) : wedge_weight(u.mask);
    for (const auto& [w, p] : e.terms()) {
      if (w != slot) throw InternalError("differential left weight zero at " + e.to_string());
    }
    col.emplace_back(u, e.coefficient(slot));
  }
  return columns_.emplace(key, std::move(col)).first->second;
}

TruncatedMap ComplexAssembler::differential(int p, int d_dom, int d_cod) {
  auto dom = generators(p);
  auto cod = generators(kind_.variant == Variant::Homology ? p - 1 : p + 1);
  int order = field_order();
  TruncatedMap m{{order, static_cast<int>(dom.size()), d_dom},
                 {order, static_cast<int>(cod.size()), d_cod},
                 Matrix(static_cast<int>(cod.size()) * (d_cod + 1), static_cast<int>(dom.size()) * (d_dom + 1))};
  std::map<Generator, int> cod_index;
  for (std::size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = static_cast<int>(i);
  for (std::size_t t = 0; t < dom.size(); ++t) {
    for (int i = 0; i <= d_dom; ++i) {
      for (const auto& [u, poly] : column(dom[t], i)) {
        auto it = cod_index.find(u);
        if (it == cod_index.end()) throw InternalError("differential hit a generator of the wrong degree");
        if (poly.degree() > d_cod) {
          throw InternalError("truncation margin too small: image degree " + std::to_string(poly.degree()) +
                              " > " + std::to_string(d_cod));
        }
        for (int k = 0; k <= poly.degree(); ++k) {
          m.matrix.at(m.codomain.index(it->second, k), m.domain.index(static_cast<int>(t), i)) =
              poly.coefficient(k);
        }
      }
    }
  }
  return m;
}

int truncation_margin(const GwaSpec& spec) { return spec.n() + 1; }

WeightZeroChain build_differentials(const GwaSpec& spec, const ComplexKind& kind, int p_max, int d) {
  if (p_max < 0 || p_max > kMaxDegree) throw std::invalid_argument("p_max out of range");
  ComplexAssembler as(Algebra(spec), kind);
  const int mu = truncation_margin(spec);
  const bool hom = kind.variant == Variant::Homology;
  auto bound = [&](int q) { return hom ? d + (p_max - q) * mu : d + q * mu; };
  WeightZeroChain out;
  out.kind = kind;
  out.p_max = p_max;
  for (int q = 0; q <= p_max; ++q) {
    out.spaces.push_back({as.field_order(), static_cast<int>(as.generators(q).size()), bound(q)});
  }
  out.differentials.resize(static_cast<std::size_t>(p_max + 1));
  for (int q = 0; q <= p_max; ++q) {
    if (hom && q >= 1) out.differentials[q] = as.differential(q, bound(q), bound(q - 1));
    if (!hom && q < p_max) out.differentials[q] = as.differential(q, bound(q), bound(q + 1));
  }
  for (int q = 0; q + 1 <= p_max; ++q) {
    const TruncatedMap& first = hom ? out.differentials[q + 1] : out.differentials[q];
    const TruncatedMap* second = nullptr;
    if (hom && q >= 1) second = &out.differentials[q];
    if (!hom && q + 1 < p_max) second = &out.differentials[q + 1];
    if (!second) continue;
    if (!sparse_product(second->matrix, first.matrix).is_zero()) {
      throw InternalError("d o d != 0 in " + kind.to_string() + " at degree " + std::to_string(q));
    }
  }
  return out;
}

int oracle_dim_at(ComplexAssembler& as, int p, int d) {
  const int mu = truncation_margin(as.algebra().spec());
  if (as.kind().variant == Variant::Homology) {
    TruncatedMap out = as.differential(p, d, d + mu);
    TruncatedMap in = as.differential(p + 1, d + mu, d + 2 * mu);
    return homology_dim_at(out, in);
  }
  TruncatedMap out = as.differential(p, d, d + mu);
  TruncatedMap in = as.differential(p - 1, d + mu, d + 2 * mu);
  return homology_dim_at(out, in);
}

std::vector<StabilizedDim> oracle_dims(const GwaSpec& spec, const ComplexKind& kind, int p_max,
                                       const std::optional<Schedule>& schedule) {
  if (p_max < 0 || p_max > kMaxDegree) throw std::invalid_argument("p_max out of range");
  Schedule sch = schedule.value_or(Schedule::for_degree(spec.n()));
  ComplexAssembler as(Algebra(spec), kind);
  std::vector<StabilizedDim> out;
  for (int p = 0; p <= p_max; ++p) {
    out.push_back(stabilize(sch, [&](int d) { return oracle_dim_at(as, p, d); },
                            kind.to_string() + " degree " + std::to_string(p)));
  }
  return out;
}

std::array<StabilizedDim, 4> row_homology_dims(const GwaSpec& spec, const ComplexKind& kind,
                                               const std::optional<Schedule>& schedule) {
  Schedule sch = schedule.value_or(Schedule::for_degree(spec.n()));
  ComplexAssembler as(Algebra(spec), kind, true);
  std::array<StabilizedDim, 4> out;
  for (int k = 0; k <= 3; ++k) {
    int slot = kind.variant == Variant::Homology ? k : 3 - k;
    out[slot] = stabilize(sch, [&](int d) { return oracle_dim_at(as, k, d); },
                          "row " + kind.to_string() + " at exterior degree " + std::to_string(k));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bezout criterion

bool check_bezout_witness(const Poly& a, const ShiftSigma& s, const BezoutWitness& w) {
  const Poly one = Poly::constant(Scalar(1));
  Poly da = derivative(a);
  Poly lhs = (sigma_pow(w.alpha, -1, s) - w.beta) * a - sigma_pow(w.gamma, -1, s) * da;
  Poly shifted = (w.alpha - sigma_pow(w.beta, 1, s)) * sigma_pow(a, 1, s) - w.gamma * sigma_pow(da, 1, s);
  return lhs == one && shifted == one;
}

BezoutD2 bezout_d2_test(const Poly& a, const ShiftSigma& s) {
  if (a.is_constant()) throw std::invalid_argument("bezout_d2_test: a must be non-constant");
  BezoutD2 r;
  auto e = extended_gcd(a, derivative(a));
  if (e.g.degree() != 0) return r;
  r.epimorphism = true;
  // e.s * a + e.t * a' = 1
  r.witness = BezoutWitness{Poly(), -e.s, -sigma_pow(e.t, 1, s)};
  r.verified = check_bezout_witness(a, s, *r.witness);
  return r;
}

// ---------------------------------------------------------------------------
// Euler homotopy and center

Chain euler_homotopy(const Chain& c) {
  Chain out;
  for (const auto& [g, m] : c) {
    std::vector<unsigned> seq = factors_of(g.mask);
    seq.insert(seq.begin(), kEh);
    auto [s, mask] = wedge_sequence(seq);
    if (s == 0) continue;
    add_to(out, {g.row, mask}, m * Scalar(s));
  }
  return out;
}

bool euler_homotopy_check(const GwaSpec& spec, int samples, unsigned seed) {
  Algebra A(spec);
  ComplexKind kind = ComplexKind::homology();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> weight(-3, 3);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> ext(0, 3);
  const Scalar h0 = spec.sigma.h0();
  for (int trial = 0; trial < samples; ++trial) {
    int w = 0;
    while (w == 0) w = weight(rng);
    Chain c;
    int k = ext(rng);
    for (unsigned mask : masks_of_degree(k)) {
      std::vector<Rational> cs;
      for (int i = 0, d = deg(rng); i <= d; ++i) cs.emplace_back(coef(rng));
      add_to(c, {0, mask}, Element::poly(Poly::from_rationals(cs), w - wedge_weight(mask)));
    }
    if (c.empty()) continue;
    Chain lhs = boundary(A, kind, euler_homotopy(c), true);
    for (const auto& [g, m] : euler_homotopy(boundary(A, kind, c, true))) add_to(lhs, g, m);
    Chain rhs;
    for (const auto& [g, m] : c) add_to(rhs, g, m * (-h0 * Scalar(w)));
    if (lhs != rhs) return false;
  }
  return true;
}

StabilizedDim center_dim(const GwaSpec& spec, const std::optional<Schedule>& schedule) {
  Algebra A(spec);
  Schedule sch = schedule.value_or(Schedule::for_degree(spec.n()));
  auto at = [&](int d) {
    // rows: coefficients of [p, x] (weight 1), [p, y] (weight -1), [p, h] (weight 0)
    Matrix m(3 * (d + 1), d + 1);
    for (int i = 0; i <= d; ++i) {
      Element p = hpow(i);
      const Element gens[3] = {Element::x(), Element::y(), Element::h()};
      const int weights[3] = {1, -1, 0};
      for (int g = 0; g < 3; ++g) {
        Element c = A.commutator(p, gens[g]);
        for (const auto& [w, q] : c.terms()) {
          if (w != weights[g] || q.degree() > d) throw InternalError("center_dim: unexpected commutator");
        }
        Poly q = c.coefficient(weights[g]);
        for (int k = 0; k <= q.degree(); ++k) m.at(g * (d + 1) + k, i) = q.coefficient(k);
      }
    }
    return d + 1 - rank(m);
  };
  return stabilize(sch, at, "center_dim");
}

}  // namespace gwa
