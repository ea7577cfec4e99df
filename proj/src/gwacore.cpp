#include "gwa/gwacore.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>

#include "gwa/textformat.hpp"

namespace gwa {

GwaSpec::GwaSpec(Poly a_, ShiftSigma sigma_) : a(std::move(a_)), sigma(std::move(sigma_)) {
  if (a.is_constant()) throw std::invalid_argument("defining polynomial a must be non-constant");
}

// ---------------------------------------------------------------------------
// Element

Element::Element(Terms terms) {
  for (auto& [w, p] : terms) add_term(w, p);
}

Element Element::poly(const Poly& p, int weight) {
  Element e;
  e.add_term(weight, p);
  return e;
}

void Element::add_term(int weight, const Poly& p) {
  if (p.is_zero()) return;
  auto it = terms_.find(weight);
  if (it == terms_.end()) {
    terms_.emplace(weight, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Element::coefficient(int weight) const {
  auto it = terms_.find(weight);
  return it == terms_.end() ? Poly() : it->second;
}

Element Element::weight_component(int weight) const { return poly(coefficient(weight), weight); }

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, p] : o.terms_) add_term(w, p);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, p] : o.terms_) add_term(w, -p);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, p] : terms_) p *= c;
  return *this;
}

bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, p] = *it;
    std::string gen;
    if (w != 0) {
      gen = w > 0 ? "x" : "y";
      if (std::abs(w) > 1) gen += "^" + std::to_string(std::abs(w));
    }
    auto nonzero = std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                 [](const Scalar& s) { return !s.is_zero(); });
    std::string coef = p.to_string();
    bool negative = false;
    if ((nonzero == 1 || gen.empty()) && coef.front() == '-') {
      negative = true;
      coef.erase(0, 1);
    }
    std::string term;
    if (gen.empty()) {
      term = coef;
    } else if (nonzero == 1) {
      term = coef == "1" ? gen : coef + "*" + gen;
    } else {
      term = "(" + coef + ")*" + gen;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string_view s) : s_(s) {}

  Element parse() {
    Element result;
    bool first = true;
    while (skip(), pos_ < s_.size()) {
      Scalar sign(1);
      if (s_[pos_] == '-') {
        sign = Scalar(-1);
        ++pos_;
      } else if (s_[pos_] == '+') {
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += term() * sign;
    }
    if (first) fail("empty element");
    return result;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse element '" + std::string(s_) + "': " + what);
  }
  int exponent() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("missing exponent");
      return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }
    return 1;
  }
  Element term() {
    Poly coef = Poly::constant(Scalar(1));
    int weight = 0;
    bool any = false;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c == '(') {
        std::size_t close = s_.find(')', pos_);
        if (close == std::string_view::npos) fail("unbalanced parenthesis");
        coef *= parse_poly(s_.substr(pos_ + 1, close - pos_ - 1));
        pos_ = close + 1;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
          ++pos_;
        }
        coef *= Scalar(parse_rational(s_.substr(start, pos_ - start)));
      } else if (c == 'h') {
        if (weight != 0) fail("h after x/y is not in normal form");
        ++pos_;
        coef *= Poly::monomial(Scalar(1), exponent());
      } else if (c == 'x' || c == 'y') {
        if (weight != 0) fail("only one x/y power per term");
        ++pos_;
        int e = exponent();
        weight = c == 'x' ? e : -e;
      } else {
        break;
      }
      any = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      skip();
      if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'y' || s_[pos_] == 'h' ||
                               s_[pos_] == '(')) {
        continue;
      }
      break;
    }
    if (!any) fail("expected a term");
    return Element::poly(coef, weight);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text) { return ElementParser(text).parse(); }

// ---------------------------------------------------------------------------
// Automorphisms

AutomorphismSpec::AutomorphismSpec(Kind k) : kind_(std::move(k)) {
  if (const auto* t = std::get_if<Torus>(&kind_); t && t->w.is_zero()) {
    throw std::invalid_argument("torus parameter w must be nonzero");
  }
  if (const auto* e = std::get_if<ExpY>(&kind_); e && e->m < 1) {
    throw std::invalid_argument("exponential automorphism needs m >= 1");
  }
  if (const auto* e = std::get_if<ExpX>(&kind_); e && e->m < 1) {
    throw std::invalid_argument("exponential automorphism needs m >= 1");
  }
}

std::string AutomorphismSpec::to_string() const {
  struct Visitor {
    std::string operator()(const Torus& t) const { return "Torus(" + t.w.to_string() + ")"; }
    std::string operator()(const ExpY& e) const {
      return "ExpY(" + std::to_string(e.m) + ", " + e.lambda.to_string() + ")";
    }
    std::string operator()(const ExpX& e) const {
      return "ExpX(" + std::to_string(e.m) + ", " + e.lambda.to_string() + ")";
    }
    std::string operator()(const Omega& o) const { return "Omega(" + o.rho.to_string() + ")"; }
    std::string operator()(const Composite& c) const {
      std::string s = "Composite[";
      for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i) s += ", ";
        s += c.parts[i].to_string();
      }
      return s + "]";
    }
  };
  return std::visit(Visitor{}, kind_);
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(GwaSpec spec) : spec_(std::move(spec)) {
  sigma_a_.reserve(2 * kCache + 1);
  for (long k = -kCache; k <= kCache; ++k) sigma_a_.push_back(sigma_pow(spec_.a, k, spec_.sigma));
}

Poly Algebra::sigma_a(long k) const {
  if (k >= -kCache && k <= kCache) return sigma_a_[static_cast<std::size_t>(k + kCache)];
  return sigma_pow(spec_.a, k, spec_.sigma);
}

Element Algebra::multiply(const Element& u, const Element& v) const {
  Element::Terms out;
  auto accumulate = [&out](int w, Poly p) {
    if (p.is_zero()) return;
    auto it = out.find(w);
    if (it == out.end()) {
      out.emplace(w, std::move(p));
    } else {
      it->second += p;
    }
  };
  for (const auto& [i, p] : u.terms()) {
    for (const auto& [j, q] : v.terms()) {
      // p X^i q X^j = p sigma^i(q) X^i X^j
      Poly coef = p * sigma(q, i);
      if (i > 0 && j < 0) {
        // x^i y^k = sigma^i(a) sigma^(i-1)(a) ... x^(i-t) y^(k-t), t = min(i, k)
        int t = std::min(i, -j);
        for (int s = 0; s < t; ++s) coef *= sigma_a(i - s);
      } else if (i < 0 && j > 0) {
        // y^k x^l = sigma^-(k-1)(a) ... y^(k-t) x^(l-t)
        int k = -i;
        int t = std::min(k, j);
        for (int s = 0; s < t; ++s) coef *= sigma_a(-(k - 1 - s));
      }
      accumulate(i + j, std::move(coef));
    }
  }
  return Element(std::move(out));
}

Element Algebra::power(const Element& u, int k) const {
  if (k < 0) throw std::invalid_argument("negative power of an algebra element");
  Element r = Element::scalar(Scalar(1));
  for (int i = 0; i < k; ++i) r = multiply(r, u);
  return r;
}

Element Algebra::commutator(const Element& u, const Element& v) const {
  return multiply(u, v) - multiply(v, u);
}

Element Algebra::twisted_commutator(const Element& u, const Element& v,
                                    const AutomorphismSpec& g) const {
  return multiply(u, v) - multiply(v, apply(g, u));
}

bool Algebra::is_reflection_center(const Scalar& rho) const {
  Poly reflected = spec_.a.substitute_affine(Scalar(-1), rho);
  Poly expected = n() % 2 == 0 ? spec_.a : -spec_.a;
  return reflected == expected;
}

Element Algebra::exp_ad(const Element& t, const Scalar& lambda, const Element& u, int cap) const {
  Element result = u;
  Element term = u;
  Scalar coef(1);
  for (int i = 1;; ++i) {
    term = commutator(t, term);
    if (term.is_zero()) return result;
    if (i > cap) throw InternalError("ad-series did not terminate within " + std::to_string(cap) + " steps");
    coef = coef * lambda / Scalar(i);
    result += term * coef;
  }
}

Algebra::GeneratorImages Algebra::images(const AutomorphismSpec& g) const {
  struct Visitor {
    const Algebra& A;
    GeneratorImages operator()(const Torus& t) const {
      return {Element::x() * t.w, Element::y() * t.w.inverse(), Element::h()};
    }
    GeneratorImages operator()(const ExpY& e) const {
      Element t = Element::y(e.m);
      int cap = A.ad_series_cap(e.m);
      return {A.exp_ad(t, e.lambda, Element::x(), cap), A.exp_ad(t, e.lambda, Element::y(), cap),
              A.exp_ad(t, e.lambda, Element::h(), cap)};
    }
    GeneratorImages operator()(const ExpX& e) const {
      Element t = Element::x(e.m);
      int cap = A.ad_series_cap(e.m);
      return {A.exp_ad(t, e.lambda, Element::x(), cap), A.exp_ad(t, e.lambda, Element::y(), cap),
              A.exp_ad(t, e.lambda, Element::h(), cap)};
    }
    GeneratorImages operator()(const Omega& o) const {
      if (!A.is_reflection_center(o.rho)) {
        throw std::invalid_argument("Omega: a(rho - h) != (-1)^n a(h) for rho = " + o.rho.to_string());
      }
      Scalar sign(A.n() % 2 == 0 ? 1 : -1);
      Poly hh(std::vector<Scalar>{A.sigma().h0() + o.rho, Scalar(-1)});
      return {Element::y(), Element::x() * sign, Element::poly(hh)};
    }
    GeneratorImages operator()(const Composite& c) const {
      GeneratorImages img{Element::x(), Element::y(), Element::h()};
      for (const auto& part : c.parts) {
        img = {A.apply(part, img.x), A.apply(part, img.y), A.apply(part, img.h)};
      }
      return img;
    }
  };
  return std::visit(Visitor{*this}, g.kind());
}

Element Algebra::apply_images(const GeneratorImages& img, const Element& u) const {
  Element result;
  for (const auto& [j, p] : u.terms()) {
    // p(h') by Horner, then the generator power on the right.
    Element value;
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
      value = multiply(value, img.h) + Element::scalar(c[k]);
    }
    const Element& gen = j > 0 ? img.x : img.y;
    for (int s = 0; s < std::abs(j); ++s) value = multiply(value, gen);
    result += value;
  }
  return result;
}

Element Algebra::apply(const AutomorphismSpec& g, const Element& u) const {
  if (const auto* t = std::get_if<Torus>(&g.kind())) {
    Element::Terms out;
    for (const auto& [j, p] : u.terms()) out.emplace(j, p * t->w.pow(j));
    return Element(std::move(out));
  }
  if (const auto* c = std::get_if<Composite>(&g.kind())) {
    Element r = u;
    for (const auto& part : c->parts) r = apply(part, r);
    return r;
  }
  return apply_images(images(g), u);
}

}  // namespace gwa
