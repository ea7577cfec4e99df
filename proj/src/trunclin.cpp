#include "gwa/trunclin.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <type_traits>

namespace gwa {

// ---------------------------------------------------------------------------
// Matrix

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

int Matrix::field_order() const {
  int m = 1;
  for (const auto& s : data_) {
    if (s.is_rational()) continue;
    if (m != 1 && s.order() != m) {
      throw FieldMismatch("matrix mixes Q(zeta_" + std::to_string(m) + ") and Q(zeta_" +
                          std::to_string(s.order()) + ")");
    }
    m = s.order();
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row counts differ");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b.at(r, c);
  }
  return m;
}

Matrix Matrix::select_rows(const std::vector<int>& rows) const {
  Matrix m(static_cast<int>(rows.size()), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < cols_; ++c) m.at(static_cast<int>(i), c) = at(rows[i], c);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return sparse_product(a, b); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::dump() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).to_string();
    os << '\n';
  }
  return os.str();
}

Matrix sparse_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Scalar& y = b.at(k, j);
        if (!y.is_zero()) m.at(i, j) += x * y;
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// PolyOperator

int PolyOperator::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.factor.degree());
  return d;
}

Poly PolyOperator::apply(const Poly& p, const ShiftSigma& s) const {
  Poly r;
  for (const auto& t : terms_) r += sigma_pow(t.factor * p, t.shift, s) * t.coef;
  return r;
}

PolyOperator operator+(const PolyOperator& a, const PolyOperator& b) {
  auto t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return PolyOperator(std::move(t));
}

PolyOperator operator*(const Scalar& c, const PolyOperator& a) {
  auto t = a.terms_;
  for (auto& x : t) x.coef *= c;
  return PolyOperator(std::move(t));
}

PolyOperator operator-(const PolyOperator& a, const PolyOperator& b) { return a + Scalar(-1) * b; }

PolyOperator PolyOperator::compose(const PolyOperator& inner, const ShiftSigma& s) const {
  // sigma^k(f * sigma^l(g p)) = sigma^(k+l)(sigma^-l(f) g p)
  std::vector<Term> out;
  for (const auto& a : terms_) {
    for (const auto& b : inner.terms_) {
      out.push_back({a.coef * b.coef, a.shift + b.shift, sigma_pow(a.factor, -b.shift, s) * b.factor});
    }
  }
  return PolyOperator(std::move(out));
}

TruncatedMap operator_matrix(const PolyOperator& op, const ShiftSigma& s, int d_dom, int d_cod) {
  if (d_cod < d_dom + op.degree()) {
    throw std::invalid_argument("operator_matrix: codomain bound " + std::to_string(d_cod) +
                                " cannot hold images of degree " + std::to_string(d_dom + op.degree()));
  }
  TruncatedMap m{{1, 1, d_dom}, {1, 1, d_cod}, Matrix(d_cod + 1, d_dom + 1)};
  for (int i = 0; i <= d_dom; ++i) {
    Poly img = op.apply(Poly::monomial(Scalar(1), i), s);
    for (int k = 0; k <= img.degree(); ++k) m.matrix.at(k, i) = img.coefficient(k);
  }
  m.domain.field_order = m.codomain.field_order = m.matrix.field_order();
  return m;
}

// ---------------------------------------------------------------------------
// Stabilization

Schedule Schedule::for_degree(int n) {
  Schedule s;
  s.d0 = std::max(4 * n, 12);
  return s;
}

StabilizedDim stabilize(const Schedule& schedule, const std::function<int(int)>& f,
                        const std::string& what) {
  if (schedule.window < 1 || schedule.step < 1) throw std::invalid_argument("bad schedule");
  StabilizedDim out;
  for (int d = schedule.d0; d <= schedule.d_max; d += schedule.step) {
    int v = f(d);
    out.observations.emplace_back(d, v);
    int n = static_cast<int>(out.observations.size());
    if (n < schedule.window) continue;
    bool settled = true;
    for (int i = n - schedule.window; i < n; ++i) settled = settled && out.observations[i].second == v;
    if (settled) {
      out.value = v;
      out.stabilized_at_d = d;
      return out;
    }
  }
  std::string obs;
  for (const auto& [d, v] : out.observations) obs += " D=" + std::to_string(d) + ":" + std::to_string(v);
  throw StabilizationFailure(what + " did not stabilize up to D=" + std::to_string(schedule.d_max) + ";" + obs);
}

int codim_of_image_at(const std::vector<PolyOperator>& ops, const ShiftSigma& s, int d) {
  if (ops.empty()) return d + 1;
  int dom = d + 1;
  int deg = 0;
  for (const auto& op : ops) deg = std::max(deg, op.degree());
  int cod = dom + deg;
  Matrix m(cod + 1, 0);
  for (const auto& op : ops) m = Matrix::hconcat(m, operator_matrix(op, s, dom, cod).matrix);
  TruncatedSpace space{1, 1, cod};
  int inside = rank(m) - rank(m.select_rows(rows_above(space, d)));
  return d + 1 - inside;
}

StabilizedDim codim_of_image(const std::vector<PolyOperator>& ops, const ShiftSigma& s,
                             const Schedule& schedule) {
  return stabilize(schedule, [&](int d) { return codim_of_image_at(ops, s, d); }, "codim_of_image");
}

// ---------------------------------------------------------------------------
// Fraction-free (Bareiss) elimination over Z[zeta_m]

namespace {

struct IntRing {
  using T = mpz_class;
  bool zero(const T& x) const { return x == 0; }
  T mul(const T& a, const T& b) const { return a * b; }
  void fms(T& x, const T& p, const T& f, const T& y) const { x = p * x - f * y; }
  std::size_t size(const T& x) const { return mpz_sizeinbase(x.get_mpz_t(), 2); }

  struct Divisor {
    mpz_class d;
  };
  Divisor divisor(const T& p) const { return {p}; }
  void clear(T& x) const { x = 0; }
  T neg(const T& x) const { return -x; }
  void gcd_into(mpz_class& g, const T& x) const { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t()); }
  void divexact(T& x, const mpz_class& g) const { mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t()); }
  void divide(T& x, const Divisor& d) const { mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.d.get_mpz_t()); }
};

struct CycloRing {
  using T = std::vector<mpz_class>;
  int order;
  int phi;
  std::vector<mpz_class> modulus;  // monic Phi_m, ascending

  bool zero(const T& x) const {
    return std::all_of(x.begin(), x.end(), [](const mpz_class& c) { return c == 0; });
  }
  T mul(const T& a, const T& b) const {
    std::vector<mpz_class> r(static_cast<std::size_t>(2 * phi - 1));
    for (int i = 0; i < phi; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < phi; ++j) r[i + j] += a[i] * b[j];
    }
    for (int k = 2 * phi - 2; k >= phi; --k) {
      if (r[k] == 0) continue;
      for (int i = 0; i < phi; ++i) r[k - phi + i] -= r[k] * modulus[i];
    }
    r.resize(static_cast<std::size_t>(phi));
    return r;
  }
  void fms(T& x, const T& p, const T& f, const T& y) const {
    T a = mul(p, x);
    T b = mul(f, y);
    for (int i = 0; i < phi; ++i) x[i] = a[i] - b[i];
  }
  std::size_t size(const T& x) const {
    std::size_t s = 0;
    for (const auto& c : x) s += mpz_sizeinbase(c.get_mpz_t(), 2);
    return s;
  }

  // Exact division by p in Z[zeta]: multiply by num and divide by den, where
  // num / den is the inverse of p in Q(zeta).
  struct Divisor {
    T num;
    mpz_class den;
  };
  Divisor divisor(const T& p) const {
    std::vector<Rational> q(p.begin(), p.end());
    Scalar inv = Scalar::from_powers(order, q).inverse();
    std::vector<Rational> c(static_cast<std::size_t>(phi));
    if (inv.is_rational()) {
      c[0] = inv.coefficients()[0];
    } else {
      c = inv.coefficients();
    }
    Divisor d{T(static_cast<std::size_t>(phi)), 1};
    for (const auto& x : c) mpz_lcm(d.den.get_mpz_t(), d.den.get_mpz_t(), x.get_den_mpz_t());
    for (int i = 0; i < phi; ++i) d.num[i] = c[i].get_num() * (d.den / c[i].get_den());
    return d;
  }
  void clear(T& x) const {
    for (auto& c : x) c = 0;
  }
  T neg(const T& x) const {
    T r = x;
    for (auto& c : r) c = -c;
    return r;
  }
  void gcd_into(mpz_class& g, const T& x) const {
    for (const auto& c : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  void divexact(T& x, const mpz_class& g) const {
    for (auto& c : x) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  void divide(T& x, const Divisor& d) const {
    x = mul(x, d.num);
    for (auto& c : x) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.den.get_mpz_t());
  }
};

// Coefficients of s in Q(zeta_m) padded to phi(m).
std::vector<Rational> lifted(const Scalar& s, int phi) {
  std::vector<Rational> c(static_cast<std::size_t>(phi));
  if (s.is_rational()) {
    c[0] = s.coefficients()[0];
  } else {
    c = s.coefficients();
  }
  return c;
}

// Integral row: multiply by the lcm of all denominators in the row.
std::vector<std::vector<mpz_class>> integral_row(const Matrix& m, int r, int phi) {
  mpz_class l = 1;
  std::vector<std::vector<Rational>> q(static_cast<std::size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) {
    q[c] = lifted(m.at(r, c), phi);
    for (const auto& x : q[c]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<std::vector<mpz_class>> out(static_cast<std::size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) {
    out[c].resize(static_cast<std::size_t>(phi));
    for (int i = 0; i < phi; ++i) out[c][i] = q[c][i].get_num() * (l / q[c][i].get_den());
  }
  return out;
}

// Bareiss elimination: every entry outside the pivot row is replaced by
// (p * a_rc - a_r,col * a_k,c) / prev, an exact division by the previous pivot.
// With reduce_above the rows above the pivot are updated too (fraction-free
// Gauss-Jordan); all pivots then end up equal to the last one.
template <class Ring>
std::vector<int> bareiss(const Ring& ring, std::vector<std::vector<typename Ring::T>>& rows, int cols,
                         bool reduce_above) {
  std::vector<int> pivots;
  int rank = 0;
  int nrows = static_cast<int>(rows.size());
  std::optional<typename Ring::Divisor> prev;
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int best = -1;
    std::size_t best_size = 0;
    for (int r = rank; r < nrows; ++r) {
      if (ring.zero(rows[r][col])) continue;
      std::size_t sz = ring.size(rows[r][col]);
      if (best < 0 || sz < best_size) {
        best = r;
        best_size = sz;
      }
    }
    if (best < 0) continue;
    std::swap(rows[rank], rows[best]);
    const auto& piv = rows[rank];
    const auto p = piv[col];
    for (int r = reduce_above ? 0 : rank + 1; r < nrows; ++r) {
      if (r == rank) continue;
      auto& row = rows[r];
      const auto f = row[col];
      bool fz = ring.zero(f);
      for (int c = r < rank ? 0 : col + 1; c < cols; ++c) {
        if (c == col) continue;
        if (fz || ring.zero(piv[c])) {
          if (ring.zero(row[c])) continue;
          row[c] = ring.mul(p, row[c]);
        } else {
          ring.fms(row[c], p, f, piv[c]);
        }
        if (prev && !ring.zero(row[c])) ring.divide(row[c], *prev);
      }
      ring.clear(row[col]);
    }
    prev = ring.divisor(p);
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace

namespace {

// Runs the elimination over Z or Z[zeta_m] on integral rows of m; `use`
// receives the ring, the reduced rows and the pivot columns.
template <class F>
auto with_integral_rows(const Matrix& m, bool reduce_above, F&& use) {
  int order = m.field_order();
  int phi = euler_phi(order);
  if (phi == 1) {
    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
      auto ir = integral_row(m, r, 1);
      std::vector<mpz_class> row(static_cast<std::size_t>(m.cols()));
      for (int c = 0; c < m.cols(); ++c) row[c] = std::move(ir[c][0]);
      rows.push_back(std::move(row));
    }
    IntRing ring;
    auto pivots = bareiss(ring, rows, m.cols(), reduce_above);
    return use(ring, rows, pivots);
  }
  CycloRing ring{order, phi, {}};
  for (const auto& c : cyclotomic_coefficients(order)) ring.modulus.push_back(c.get_num());
  std::vector<std::vector<std::vector<mpz_class>>> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(integral_row(m, r, phi));
  auto pivots = bareiss(ring, rows, m.cols(), reduce_above);
  return use(ring, rows, pivots);
}

Scalar to_scalar(const IntRing&, const mpz_class& x) { return Scalar(Rational(x)); }
Scalar to_scalar(const CycloRing& ring, const std::vector<mpz_class>& x) {
  std::vector<Rational> q(x.begin(), x.end());
  return Scalar::from_powers(ring.order, q);
}

}  // namespace

int rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  if (m.cols() > m.rows()) return rank(m.transpose());
  return with_integral_rows(m, false, [](const auto&, const auto&, const std::vector<int>& pivots) {
    return static_cast<int>(pivots.size());
  });
}

int rank_bareiss(const Matrix& m) {
  if (m.field_order() != 1) throw std::invalid_argument("rank_bareiss: rational matrices only");
  int nr = m.rows(), nc = m.cols();
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(nr));
  for (int r = 0; r < nr; ++r) {
    auto ir = integral_row(m, r, 1);
    for (int c = 0; c < nc; ++c) a[r].push_back(ir[c][0]);
  }
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int piv = -1;
    for (int r = rank; r < nr; ++r) {
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < nr; ++r) {
      for (int c = col + 1; c < nc; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]);
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

Matrix kernel_basis(const Matrix& m) {
  const int nc = m.cols();
  if (m.rows() == 0) {
    Matrix k(nc, nc);
    for (int i = 0; i < nc; ++i) k.at(i, i) = Scalar(1);
    return k;
  }
  // After fraction-free Gauss-Jordan every pivot equals the last pivot P, so
  // the kernel vector of a free column f is P e_f - sum_i row_i[f] e_{pivot_i}.
  return with_integral_rows(m, true, [&](const auto& ring, const auto& rows, const std::vector<int>& pivots) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(nc), false);
    for (int c : pivots) is_pivot[c] = true;
    Matrix k(nc, nc - static_cast<int>(pivots.size()));
    using T = typename std::decay_t<decltype(ring)>::T;
    const T unit = pivots.empty() ? T{} : rows[pivots.size() - 1][pivots.back()];
    int out = 0;
    for (int f = 0; f < nc; ++f) {
      if (is_pivot[f]) continue;
      // Integral column, then divided by the gcd of all its integer coefficients.
      std::vector<std::pair<int, T>> entries;
      if (pivots.empty()) {
        k.at(f, out++) = Scalar(1);
        continue;
      }
      entries.emplace_back(f, unit);
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (!ring.zero(rows[i][f])) entries.emplace_back(pivots[i], ring.neg(rows[i][f]));
      }
      mpz_class g = 0;
      for (const auto& [idx, x] : entries) ring.gcd_into(g, x);
      for (auto& [idx, x] : entries) {
        if (g > 1) ring.divexact(x, g);
        k.at(idx, out) = to_scalar(ring, x);
      }
      ++out;
    }
    return k;
  });
}

Matrix embed_rows(const Matrix& m, const TruncatedSpace& from, const TruncatedSpace& to) {
  if (from.copies != to.copies || from.bound > to.bound || m.rows() != from.dim()) {
    throw std::invalid_argument("embed_rows: incompatible truncations");
  }
  Matrix out(to.dim(), m.cols());
  for (int t = 0; t < from.copies; ++t)
    for (int i = 0; i <= from.bound; ++i)
      for (int c = 0; c < m.cols(); ++c) out.at(to.index(t, i), c) = m.at(from.index(t, i), c);
  return out;
}

std::vector<int> rows_above(const TruncatedSpace& space, int bound) {
  std::vector<int> rows;
  for (int t = 0; t < space.copies; ++t)
    for (int i = bound + 1; i <= space.bound; ++i) rows.push_back(space.index(t, i));
  return rows;
}

int homology_dim_at(const TruncatedMap& dp, const TruncatedMap& dnext) {
  if (dp.matrix.cols() != dp.domain.dim() || dnext.matrix.rows() != dnext.codomain.dim() ||
      dnext.codomain.copies != dp.domain.copies || dnext.codomain.bound < dp.domain.bound) {
    throw std::invalid_argument("homology_dim_at: shape mismatch");
  }
  Matrix k = embed_rows(kernel_basis(dp.matrix), dp.domain, dnext.codomain);
  return rank(Matrix::hconcat(k, dnext.matrix)) - rank(dnext.matrix);
}

Matrix restriction_of_scalars(const Matrix& m) {
  int order = m.field_order();
  int phi = euler_phi(order);
  Matrix out(m.rows() * phi, m.cols() * phi);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const Scalar& e = m.at(r, c);
      if (e.is_zero()) continue;
      Scalar zj(1);
      Scalar z = phi == 1 ? Scalar(1) : Scalar::zeta(order);
      for (int j = 0; j < phi; ++j) {
        auto col = lifted(e * zj, phi);
        for (int i = 0; i < phi; ++i) out.at(r * phi + i, c * phi + j) = Scalar(col[i]);
        zj *= z;
      }
    }
  }
  return out;
}

}  // namespace gwa
