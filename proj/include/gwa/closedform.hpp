#pragma once

// Closed-form dimension tables for HH_*, HH^*, twisted coefficients and
// invariant subalgebras, plus the duality flag.

#include <optional>
#include <string>
#include <vector>

#include "gwa/hhcomplex.hpp"

namespace gwa {

enum class Source { Formula, Oracle };
std::string to_string(Source s);

struct DimReport {
  int n = 0;
  int d = 0;
  std::vector<int> dims;  // indexed by degree
  Source source = Source::Formula;
  ComplexKind kind;
  std::optional<bool> agreement;
  std::vector<StabilizedDim> stabilization;  // oracle reports only
};

/// d = 0: [n-1, 0, 1, 0, ...]; d >= 1: [n-1, d-1, d, d, ...].
DimReport hh_dims(const Poly& a, const ShiftSigma& s, int p_max);
/// d = 0: [1, 0, n-1, 0, ...]; d >= 1: [1, 0, n-1, d, d, ...].
DimReport coh_dims(const Poly& a, const ShiftSigma& s, int p_max);
/// Coefficients twisted by a diagonal g != id: homology [n, d, d, ...],
/// cohomology [0, 0, n, d, d, ...]. Applicability is the caller's concern.
DimReport twisted_dims(const Poly& a, const ShiftSigma& s, Variant variant, int p_max = 4,
                       const Scalar& w = Scalar(-1));
/// [1, 0, (n-1) + n*a1 + floor((n+1)/2)*a2, 0, ...].
DimReport group_coh_dims(int n, int a1, int a2, int p_max = 4);

/// Formula table for the given kind (twisted kinds use twisted_dims).
DimReport formula_dims(const GwaSpec& spec, const ComplexKind& kind, int p_max);
/// Stabilized oracle values as a report.
DimReport oracle_report(const GwaSpec& spec, const ComplexKind& kind, int p_max,
                        const std::optional<Schedule>& schedule = std::nullopt);
/// Sets agreement on both reports; true iff the dimension lists are equal.
bool mark_agreement(DimReport& formula, DimReport& oracle);

/// hh_dims[p] == coh_dims[2-p] for p = 0, 1, 2 and both vanish beyond.
bool duality_flag(const Poly& a, const ShiftSigma& s);

}  // namespace gwa
