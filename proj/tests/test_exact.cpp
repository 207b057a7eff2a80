#include <jumploci/exact/errors.hpp>
#include <jumploci/exact/json_io.hpp>
#include <jumploci/exact/matrix.hpp>
#include <jumploci/exact/polymatrix.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace jl;

namespace {

MultiPoly var(const std::vector<std::string>& v, int i) { return MultiPoly::variable(v, i); }

Matrix random_matrix(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng)), m(i, j).canonicalize();
  return m;
}

// Largest k with a nonzero k x k minor.
int minor_rank(const Matrix& m) {
  for (int k = std::min(m.rows(), m.cols()); k > 0; --k)
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k))
        if (determinant(m.submatrix(rs, cs)) != 0) return k;
  return 0;
}

}  // namespace

TEST(Rational, ParseAndPrintInLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-5")), "-5");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, CombinatorialHelpers) {
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(floor_q(Rational(-3, 2)), -2);
  EXPECT_EQ(ceil_q(Rational(-3, 2)), -1);
}

TEST(Rref, IdentityHasFullRankAndNoKernel) {
  RrefResult r = rref(Matrix::identity(2));
  EXPECT_EQ(r.rank, 2);
  EXPECT_TRUE(r.kernel.empty());
}

TEST(Rref, ProportionalRowsGiveKernelMinusTwoOne) {
  RrefResult r = rref(Matrix::from_rows({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.rank, 1);
  ASSERT_EQ(r.kernel.size(), 1u);
  EXPECT_EQ(r.kernel[0], (Vec{-2, 1}));
}

TEST(Rref, RankMatchesMinorExpansionOnRandomMatrices) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, 5, 7);
    if (trial % 3 == 0)  // force a dependency
      for (int j = 0; j < 7; ++j) m(4, j) = m(0, j) - m(1, j);
    EXPECT_EQ(rank(m), minor_rank(m));
    for (const Vec& k : kernel(m)) EXPECT_TRUE(is_zero(m.apply(k)));
  }
}

TEST(Matrix, InverseAndSolve) {
  Matrix m = Matrix::from_rows({{2, 1}, {1, 1}});
  EXPECT_EQ(m * inverse(m), Matrix::identity(2));
  Vec x;
  ASSERT_TRUE(solve(m, {3, 2}, x));
  EXPECT_EQ(x, (Vec{1, 1}));
  EXPECT_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}), {1, 2}, x));
  EXPECT_THROW(inverse(Matrix::from_rows({{1, 2}, {2, 4}})), std::exception);
}

TEST(Minors, GenericTwoByTwoDeterminant) {
  std::vector<std::string> v{"x11", "x12", "x21", "x22"};
  PolyMatrix m(2, 2, v);
  for (int i = 0; i < 4; ++i) m.set(i / 2, i % 2, var(v, i));
  auto ms = minors(m, 2);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0], var(v, 0) * var(v, 3) - var(v, 1) * var(v, 2));
}

TEST(Minors, SizeConventions) {
  std::vector<std::string> v{"x"};
  PolyMatrix m(2, 3, v);
  auto unit = minors(m, 0);
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0], MultiPoly::constant(v, 1));
  EXPECT_TRUE(minors(m, 3).empty());
}

TEST(TruncatedRing, Nilpotency) {
  TruncatedLocalRing r2({"t"}, 2), r3({"t"}, 3);
  MultiPoly t = r2.var(0);
  EXPECT_TRUE(poly_mul_truncated(t, t, r2).is_zero());
  MultiPoly one = r3.one();
  MultiPoly expect = one - r3.mul(r3.var(0), r3.var(0));
  EXPECT_EQ(poly_mul_truncated(one + r3.var(0), one - r3.var(0), r3), expect);
}

TEST(TruncatedRing, SquareInTwoVariables) {
  TruncatedLocalRing r({"t1", "t2"}, 3);
  MultiPoly s = r.var(0) + r.var(1);
  MultiPoly expect = r.var(0) * r.var(0) + Rational(2) * r.var(0) * r.var(1) + r.var(1) * r.var(1);
  EXPECT_EQ(poly_mul_truncated(s, s, r), expect);
  EXPECT_TRUE(poly_mul_truncated(poly_mul_truncated(s, s, r), s, r).is_zero());
}

TEST(InitialForm, LowestDegreePart) {
  std::vector<std::string> v{"x", "y"};
  MultiPoly x = var(v, 0), y = var(v, 1);
  EXPECT_EQ(initial_form(x * x + y * y * y), x * x);
  EXPECT_EQ(initial_form(x + x * y), x);
  MultiPoly h = x * y - y * y;
  EXPECT_EQ(initial_form(h), h);
  EXPECT_THROW(initial_form(MultiPoly(v)), std::exception);
}

TEST(IdealNormalForm, CanonicalizesGenerators) {
  std::vector<std::string> v{"x", "y"};
  MultiPoly x = var(v, 0), y = var(v, 1);
  auto nf = ideal_normal_form({Rational(3) * x, MultiPoly(v), x, y});
  ASSERT_EQ(nf.size(), 2u);
  auto unit = ideal_normal_form({x, MultiPoly::constant(v, 1) + y});
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_TRUE(unit[0].is_constant());
}

TEST(Json, RationalsAreStrings) {
  EXPECT_EQ(rational_json(parse_rational("-3/6")), Json("-1/2"));
  EXPECT_EQ(rational_from_json(Json("7/14")), Rational(1, 2));
}

TEST(Json, PolyAndPolyMatrixRoundTrip) {
  std::vector<std::string> v{"x", "y"};
  MultiPoly p = Rational(1, 3) * var(v, 0) * var(v, 1) - var(v, 1) + MultiPoly::constant(v, 2);
  EXPECT_EQ(poly_from_json(poly_json(p)), p);
  PolyMatrix m(2, 1, v);
  m.set(0, 0, p);
  m.set(1, 0, var(v, 0));
  Json j = polymatrix_json(m);
  EXPECT_EQ(polymatrix_from_json(j), m);
  EXPECT_EQ(polymatrix_json(polymatrix_from_json(j)).dump(), j.dump());
}

TEST(Json, MalformedMatrixIsAParseError) {
  Json j = {{"rows", 2}, {"cols", 1}, {"vars", {"x"}}, {"entries", Json::array({Json::array({Json::array()})})}};
  EXPECT_THROW(polymatrix_from_json(j), ParseError);
}
