#include "gwa/closedform.hpp"

#include <stdexcept>

namespace gwa {

std::string to_string(Source s) { return s == Source::Formula ? "formula" : "oracle"; }

namespace {

DimReport base(const Poly& a, int p_max, const ComplexKind& kind) {
  if (p_max < 0) throw std::invalid_argument("p_max must be nonnegative");
  DegreeInvariants inv = degree_invariants(a);
  DimReport r;
  r.n = inv.n;
  r.d = inv.d;
  r.kind = kind;
  r.dims.assign(static_cast<std::size_t>(p_max + 1), 0);
  return r;
}

// Fills dims from a fixed prefix and a constant tail.
void fill(DimReport& r, const std::vector<int>& head, int tail) {
  for (std::size_t p = 0; p < r.dims.size(); ++p) r.dims[p] = p < head.size() ? head[p] : tail;
}

}  // namespace

DimReport hh_dims(const Poly& a, const ShiftSigma&, int p_max) {
  DimReport r = base(a, p_max, ComplexKind::homology());
  if (r.d == 0) {
    fill(r, {r.n - 1, 0, 1}, 0);
  } else {
    fill(r, {r.n - 1, r.d - 1}, r.d);
  }
  return r;
}

DimReport coh_dims(const Poly& a, const ShiftSigma&, int p_max) {
  DimReport r = base(a, p_max, ComplexKind::cohomology());
  fill(r, {1, 0, r.n - 1}, r.d);
  return r;
}

DimReport twisted_dims(const Poly& a, const ShiftSigma&, Variant variant, int p_max, const Scalar& w) {
  DimReport r = base(a, p_max, ComplexKind::twisted(variant, w));
  if (variant == Variant::Homology) {
    fill(r, {r.n}, r.d);
  } else {
    fill(r, {0, 0, r.n}, r.d);
  }
  return r;
}

DimReport group_coh_dims(int n, int a1, int a2, int p_max) {
  if (n < 1) throw std::invalid_argument("group_coh_dims: n must be at least 1");
  if (a1 < 0 || a2 < 0) throw std::invalid_argument("group_coh_dims: class counts must be nonnegative");
  if (p_max < 0) throw std::invalid_argument("p_max must be nonnegative");
  DimReport r;
  r.n = n;
  r.kind = ComplexKind::cohomology();
  r.dims.assign(static_cast<std::size_t>(p_max + 1), 0);
  const int head[3] = {1, 0, (n - 1) + n * a1 + ((n + 1) / 2) * a2};
  for (int p = 0; p <= std::min(p_max, 2); ++p) r.dims[p] = head[p];
  return r;
}

DimReport formula_dims(const GwaSpec& spec, const ComplexKind& kind, int p_max) {
  if (kind.is_twisted()) {
    DimReport r = twisted_dims(spec.a, spec.sigma, kind.variant, p_max, *kind.twist);
    r.kind = kind;
    return r;
  }
  return kind.variant == Variant::Homology ? hh_dims(spec.a, spec.sigma, p_max) : coh_dims(spec.a, spec.sigma, p_max);
}

DimReport oracle_report(const GwaSpec& spec, const ComplexKind& kind, int p_max,
                        const std::optional<Schedule>& schedule) {
  DimReport r = base(spec.a, p_max, kind);
  r.source = Source::Oracle;
  r.stabilization = oracle_dims(spec, kind, p_max, schedule);
  for (int p = 0; p <= p_max; ++p) r.dims[p] = r.stabilization[p].value;
  return r;
}

bool mark_agreement(DimReport& formula, DimReport& oracle) {
  bool same = formula.dims == oracle.dims;
  formula.agreement = same;
  oracle.agreement = same;
  return same;
}

bool duality_flag(const Poly& a, const ShiftSigma& s) {
  const int p_max = 4;
  DimReport hh = hh_dims(a, s, p_max);
  DimReport coh = coh_dims(a, s, p_max);
  for (int p = 0; p <= 2; ++p) {
    if (hh.dims[p] != coh.dims[2 - p]) return false;
  }
  for (int p = 3; p <= p_max; ++p) {
    if (hh.dims[p] != 0 || coh.dims[p] != 0) return false;
  }
  return true;
}

}  // namespace gwa
