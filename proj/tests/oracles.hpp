#pragma once

// Independent reference implementations used only by the tests.

#include <map>

#include "gwa/gwacore.hpp"

namespace gwa::oracle {

// Skew Laurent ring k[h][X, X^-1; sigma] with (p X^i)(q X^j) = p sigma^i(q) X^(i+j).
// The GWA embeds into it through x -> X, y -> a X^-1.
class Laurent {
 public:
  using Terms = std::map<int, Poly>;

  Laurent(const Poly& a, const ShiftSigma& s) : a_(a), s_(s) {}

  Terms mul(const Terms& u, const Terms& v) const {
    Terms out;
    for (const auto& [i, p] : u) {
      for (const auto& [j, q] : v) {
        Poly t = p * sigma_pow(q, i, s_);
        auto [it, fresh] = out.emplace(i + j, t);
        if (!fresh) it->second += t;
      }
    }
    for (auto it = out.begin(); it != out.end();) {
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
  }

  Terms embed(const Element& e) const {
    Terms out;
    Terms yk{{-1, a_}};
    for (const auto& [j, p] : e.terms()) {
      Terms t{{0, p}};
      Terms gen = j > 0 ? Terms{{1, Poly::constant(Scalar(1))}} : yk;
      for (int s = 0; s < std::abs(j); ++s) t = mul(t, gen);
      for (const auto& [w, q] : t) {
        auto [it, fresh] = out.emplace(w, q);
        if (!fresh) it->second += q;
      }
    }
    for (auto it = out.begin(); it != out.end();) {
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
  }

 private:
  Poly a_;
  ShiftSigma s_;
};

}  // namespace gwa::oracle
