#include <gtest/gtest.h>

#include <random>

#include "gwa/trunclin.hpp"

using namespace gwa;

namespace {

Poly P(const char* s) { return parse_poly(s); }
const ShiftSigma kOne{Scalar(1)};

Matrix random_matrix(std::mt19937& rng, int r, int c, int rank_cap, int order = 1) {
  // Product of random r x k and k x c matrices, so the rank is at most k.
  std::uniform_int_distribution<int> num(-4, 4);
  auto entry = [&]() {
    if (order == 1) return Scalar(Rational(num(rng), 1 + (rng() % 3)));
    std::vector<Rational> v;
    for (int i = 0; i < euler_phi(order); ++i) v.emplace_back(num(rng));
    return Scalar::from_powers(order, v);
  };
  Matrix a(r, rank_cap), b(rank_cap, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < rank_cap; ++j) a.at(i, j) = entry();
  for (int i = 0; i < rank_cap; ++i)
    for (int j = 0; j < c; ++j) b.at(i, j) = entry();
  return a * b;
}

}  // namespace

TEST(OperatorMatrix, IdMinusSigma) {
  PolyOperator op = PolyOperator::identity() - PolyOperator::sigma();
  TruncatedMap m = operator_matrix(op, kOne, 1, 1);
  EXPECT_TRUE(m.matrix.at(0, 0).is_zero());
  EXPECT_EQ(m.matrix.at(0, 1), Scalar(1));
  EXPECT_TRUE(m.matrix.at(1, 1).is_zero());
  EXPECT_EQ(kernel_basis(m.matrix).cols(), 1);
}

TEST(OperatorMatrix, ComposedWithMultiplication) {
  PolyOperator op = (PolyOperator::identity() - PolyOperator::sigma())
                        .compose(PolyOperator::multiply_by(P("h^2")), kOne);
  EXPECT_EQ(op.apply(P("1"), kOne), P("2*h - 1"));
  TruncatedMap m = operator_matrix(op, kOne, 0, 2);
  EXPECT_EQ(m.matrix.at(0, 0), Scalar(-1));
  EXPECT_EQ(m.matrix.at(1, 0), Scalar(2));
  EXPECT_THROW(operator_matrix(op, kOne, 3, 4), std::invalid_argument);
}

TEST(OperatorMatrix, SigmaMinusW) {
  Scalar w = Scalar::zeta(3);
  PolyOperator op = PolyOperator::sigma() - w * PolyOperator::identity();
  EXPECT_EQ(op.apply(P("1"), kOne), Poly::constant(Scalar(1) - w));
  TruncatedMap m = operator_matrix(op, kOne, 5, 5);
  EXPECT_EQ(rank(m.matrix), 6);
  EXPECT_EQ(m.codomain.field_order, 3);
}

TEST(CodimOfImage, Examples) {
  Schedule sch = Schedule::for_degree(3);
  PolyOperator d = PolyOperator::identity() - PolyOperator::sigma();
  Poly a2 = P("h^2");
  EXPECT_EQ(codim_of_image({d.compose(PolyOperator::multiply_by(a2), kOne)}, kOne, sch).value, 1);
  Poly a3 = P("h^3");
  EXPECT_EQ(codim_of_image({d.compose(PolyOperator::multiply_by(a3), kOne),
                            d.compose(PolyOperator::multiply_by(derivative(a3)), kOne)},
                           kOne, sch)
                .value,
            1);
  PolyOperator t = PolyOperator::sigma() + PolyOperator::identity();
  EXPECT_EQ(codim_of_image({t.compose(PolyOperator::multiply_by(a2), kOne)}, kOne, sch).value, 2);
}

TEST(CodimOfImage, ScheduleStartIndependent) {
  PolyOperator d = PolyOperator::identity() - PolyOperator::sigma();
  for (const char* a : {"h^3 - h", "h^4 + 2*h", "h^5"}) {
    std::vector<PolyOperator> ops{d.compose(PolyOperator::multiply_by(P(a)), kOne)};
    Schedule s1 = Schedule::for_degree(5);
    Schedule s2 = s1;
    s2.d0 += 7;
    EXPECT_EQ(codim_of_image(ops, kOne, s1).value, codim_of_image(ops, kOne, s2).value) << a;
  }
}

TEST(Stabilize, FailsHonestly) {
  Schedule s{4, 4, 2, 20};
  EXPECT_THROW(stabilize(s, [](int d) { return d; }), StabilizationFailure);
  StabilizedDim v = stabilize(s, [](int d) { return d < 10 ? d : 7; });
  EXPECT_EQ(v.value, 7);
  EXPECT_EQ(v.stabilized_at_d, 16);
  Schedule s3{4, 4, 3, 40};
  EXPECT_EQ(stabilize(s3, [](int d) { return d < 10 ? d : 7; }).stabilized_at_d, 20);
}

TEST(HomologyDimAt, Trivial) {
  int d = 6;
  TruncatedSpace v{1, 1, d};
  TruncatedMap zero{v, v, Matrix(d + 1, d + 1)};
  EXPECT_EQ(homology_dim_at(zero, zero), d + 1);
  TruncatedMap id{v, v, operator_matrix(PolyOperator::identity(), kOne, d, d).matrix};
  EXPECT_EQ(homology_dim_at(id, zero), 0);
  EXPECT_EQ(homology_dim_at(zero, id), 0);
}

TEST(HomologyDimAt, TwoTermComplex) {
  Poly a = P("h^2 - 1");
  PolyOperator op = (PolyOperator::identity() - PolyOperator::sigma())
                        .compose(PolyOperator::multiply_by(a), kOne);
  int d = 10;
  TruncatedMap dp = operator_matrix(op, kOne, d, d + 3);
  TruncatedMap zero{{1, 1, d}, {1, 1, d}, Matrix(d + 1, d + 1)};
  EXPECT_EQ(homology_dim_at(dp, zero), 0);
}

TEST(Rank, RankNullity) {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    int r = 3 + rng() % 6, c = 3 + rng() % 6, k = 1 + rng() % 4;
    Matrix m = random_matrix(rng, r, c, k);
    int rk = rank(m);
    EXPECT_LE(rk, k);
    EXPECT_EQ(rk + kernel_basis(m).cols(), c);
    EXPECT_TRUE((m * kernel_basis(m)).is_zero());
  }
}

TEST(Rank, AgreesWithBareissReference) {
  std::mt19937 rng(8);
  for (int t = 0; t < 30; ++t) {
    int r = 2 + rng() % 8, c = 2 + rng() % 8, k = 1 + rng() % 6;
    Matrix m = random_matrix(rng, r, c, k);
    EXPECT_EQ(rank(m), rank_bareiss(m));
  }
}

TEST(Rank, RestrictionOfScalars) {
  std::mt19937 rng(9);
  for (int order : {3, 4, 5, 8}) {
    for (int t = 0; t < 5; ++t) {
      int r = 2 + rng() % 5, c = 2 + rng() % 5, k = 1 + rng() % 3;
      Matrix m = random_matrix(rng, r, c, k, order);
      EXPECT_EQ(rank(m) * euler_phi(order), rank(restriction_of_scalars(m))) << order;
      EXPECT_EQ(rank(m) + kernel_basis(m).cols(), c);
    }
  }
}

TEST(Matrix, Dump) {
  Matrix m(1, 2);
  m.at(0, 0) = Scalar(Rational(1, 2));
  EXPECT_EQ(m.dump(), "1/2 0\n");
}
