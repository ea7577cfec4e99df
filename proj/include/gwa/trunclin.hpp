#pragma once

// Exact linear algebra on truncated polynomial spaces k[h]_{<=D}^c.
//
// Ranks use Bareiss elimination over Z[zeta_m] after scaling each row to
// integral form; Phi_m is monic, so Z[zeta_m] is closed under the updates and
// the division by the previous pivot is exact.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwa/polyring.hpp"

namespace gwa {

/// Raised when truncated values fail to settle before the schedule's cap.
class StabilizationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TruncatedSpace {
  int field_order = 1;
  int copies = 1;
  int bound = 0;  // D
  int dim() const { return copies * (bound + 1); }
  int index(int copy, int power) const { return copy * (bound + 1) + power; }
  friend bool operator==(const TruncatedSpace&, const TruncatedSpace&) = default;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  /// Largest cyclotomic order among the entries.
  int field_order() const;
  Matrix transpose() const;
  /// Columns of a followed by columns of b; row counts must agree.
  static Matrix hconcat(const Matrix& a, const Matrix& b);
  Matrix select_rows(const std::vector<int>& rows) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Whitespace-separated grid, one row per line.
  std::string dump() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

struct TruncatedMap {
  TruncatedSpace domain;
  TruncatedSpace codomain;
  Matrix matrix;  // codomain.dim() x domain.dim()
};

/// p -> sum_t c_t * sigma^{k_t}(f_t * p).
class PolyOperator {
 public:
  struct Term {
    Scalar coef;
    long shift;
    Poly factor;
  };

  PolyOperator() = default;
  explicit PolyOperator(std::vector<Term> terms) : terms_(std::move(terms)) {}
  static PolyOperator identity() { return PolyOperator({{Scalar(1), 0, Poly::constant(Scalar(1))}}); }
  static PolyOperator multiply_by(const Poly& f) { return PolyOperator({{Scalar(1), 0, f}}); }
  static PolyOperator sigma(long k = 1) { return PolyOperator({{Scalar(1), k, Poly::constant(Scalar(1))}}); }

  const std::vector<Term>& terms() const { return terms_; }
  /// Upper bound on the degree increase.
  int degree() const;
  Poly apply(const Poly& p, const ShiftSigma& s) const;

  friend PolyOperator operator+(const PolyOperator& a, const PolyOperator& b);
  friend PolyOperator operator-(const PolyOperator& a, const PolyOperator& b);
  friend PolyOperator operator*(const Scalar& c, const PolyOperator& a);
  /// Composition: (a * b)(p) = a(b(p)).
  PolyOperator compose(const PolyOperator& inner, const ShiftSigma& s) const;

 private:
  std::vector<Term> terms_;
};

/// Throws std::invalid_argument when d_cod < d_dom + op.degree().
TruncatedMap operator_matrix(const PolyOperator& op, const ShiftSigma& s, int d_dom, int d_cod);

struct Schedule {
  int d0 = 12;
  int step = 4;
  int window = 2;
  int d_max = 240;
  /// D0 = max(4n, 12) with the remaining defaults.
  static Schedule for_degree(int n);
};

struct StabilizedDim {
  int value = 0;
  int stabilized_at_d = 0;
  std::vector<std::pair<int, int>> observations;  // (D, value)
  friend bool operator==(const StabilizedDim&, const StabilizedDim&) = default;
};

/// Evaluates f at D0, D0+step, ... until `window` consecutive values agree.
StabilizedDim stabilize(const Schedule& schedule, const std::function<int(int)>& f,
                        const std::string& what = "value");

/// Codimension of sum_i ops[i](k[h]) inside k[h], stabilized over the schedule.
StabilizedDim codim_of_image(const std::vector<PolyOperator>& ops, const ShiftSigma& s,
                             const Schedule& schedule);
/// Single-truncation value behind codim_of_image.
int codim_of_image_at(const std::vector<PolyOperator>& ops, const ShiftSigma& s, int d);

int rank(const Matrix& m);
/// Plain Bareiss over Z with first-nonzero pivoting, kept as a reference for tests.
int rank_bareiss(const Matrix& m);
/// Basis of the right kernel, as columns.
Matrix kernel_basis(const Matrix& m);

/// dim ker(dp) - dim(im(dnext) ∩ ker(dp)); dnext may land in a larger
/// truncation of the same space, into which ker(dp) is embedded.
int homology_dim_at(const TruncatedMap& dp, const TruncatedMap& dnext);

/// Re-indexes coordinates of `from` into the larger truncation `to`.
Matrix embed_rows(const Matrix& m, const TruncatedSpace& from, const TruncatedSpace& to);
/// Rows of coordinates with power > bound in `space`.
std::vector<int> rows_above(const TruncatedSpace& space, int bound);

/// Matrix over Q of multiplication by the entries of m on the basis 1, z, ..., z^(phi-1).
Matrix restriction_of_scalars(const Matrix& m);

/// Product that skips zero entries; used for d o d checks.
Matrix sparse_product(const Matrix& a, const Matrix& b);

}  // namespace gwa
