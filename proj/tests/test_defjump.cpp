#include <samples.hpp>

#include <jumploci/defjump/defjump.hpp>
#include <jumploci/exact/errors.hpp>
#include <jumploci/linf/checker.hpp>
#include <jumploci/linf/formality.hpp>
#include <jumploci/linf/json_io.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace jl;

namespace {

FreeComplex times_t(int order) {
  TruncatedLocalRing ring({"t"}, order);
  FreeComplex F;
  F.ring = ring;
  F.ranks = {1, 1};
  PolyMatrix d(1, 1, {"t"}, ring);
  d.set(0, 0, ring.var(0));
  F.d = {d};
  return F;
}

// Pair with M = M^1 of dim s, V = V^0 (+) V^1 and m_2 given by a b x a
// matrix of linear forms coefficient[i](r, c).
LInfinityPair m2_pair(const std::vector<Matrix>& coefficient, int a, int b, int cap = 4) {
  int s = static_cast<int>(coefficient.size());
  LInfinityPair P = LInfinityPair::zero(GradedVectorSpace(1, std::vector<int>{s}),
                                        GradedVectorSpace(0, {a, b}), cap);
  for (int i = 0; i < s; ++i)
    for (int c = 0; c < a; ++c) {
      Vec v(a + b);
      for (int r = 0; r < b; ++r) v[a + r] = coefficient[i](r, c);
      P.m(2).set({i, c}, v);
    }
  return P;
}

// The generic 2 x 2 space: x1..x4 placed row by row.
LInfinityPair generic_2x2_pair() {
  std::vector<Matrix> coeff;
  for (int i = 0; i < 4; ++i) {
    Matrix m(2, 2);
    m(i / 2, i % 2) = 1;
    coeff.push_back(m);
  }
  return m2_pair(coeff, 2, 2);
}

MCElement omega_of(const TruncatedLocalRing& ring, std::vector<MultiPoly> coords) {
  MCElement w{ring, std::move(coords)};
  return w;
}

}  // namespace

TEST(McResidual, AbelianAlgebraHasZeroResidual) {
  LInfinityAlgebra L = LInfinityAlgebra::zero(GradedVectorSpace(1, {2, 1}), 4);
  TruncatedLocalRing ring({"t"}, 3);
  MCElement w = omega_of(ring, {ring.var(0), ring.mul(ring.var(0), ring.var(0))});
  for (const auto& p : mc_residual(L, w)) EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(w.valid);
}

TEST(McResidual, BracketOfOmegaWithItselfIsDetected) {
  GradedVectorSpace S(1, {1, 1});
  LInfinityAlgebra L = LInfinityAlgebra::zero(S, 4);
  L.l(2).set({0, 0}, {0, 1});
  ASSERT_TRUE(check_algebra(L, 3).empty());
  TruncatedLocalRing ring({"t"}, 3);
  MCElement w = omega_of(ring, {ring.var(0)});
  auto res = mc_residual(L, w);
  ASSERT_EQ(res.size(), 1u);
  EXPECT_EQ(res[0], Rational(1, 2) * ring.mul(ring.var(0), ring.var(0)));
}

TEST(McResidual, MinimalPairHasEveryOmegaMaurerCartan) {
  std::mt19937 rng(3);
  LInfinityPair P = samples::random_admissible_pair(rng, 4);
  int s = P.algebra.space.total_dim();
  TruncatedLocalRing ring({"t1", "t2"}, 3);
  std::vector<MultiPoly> coords;
  for (int i = 0; i < s; ++i) coords.push_back(Rational(i + 1) * ring.var(i % 2));
  MCElement w = omega_of(ring, coords);
  for (const auto& p : mc_residual(P, w)) EXPECT_TRUE(p.is_zero());
}

TEST(McResidual, OmegaOutsideTheMaximalIdealIsRefused) {
  LInfinityAlgebra L = LInfinityAlgebra::zero(GradedVectorSpace(1, std::vector<int>{1}), 4);
  TruncatedLocalRing ring({"t"}, 3);
  MCElement w = omega_of(ring, {ring.one()});
  EXPECT_THROW(mc_residual(L, w), HypothesisError);
}

TEST(Aomoto, ZeroOmegaGivesM1) {
  GradedVectorSpace L(1, std::vector<int>{1}), V(0, {1, 1});
  LInfinityPair P = LInfinityPair::zero(L, V, 3);
  P.m(1).set({0}, {0, 2});
  TruncatedLocalRing ring({"t"}, 3);
  MCElement w = omega_of(ring, {ring.zero()});
  mc_residual(P, w);
  FreeComplex F = aomoto_complex(P, w);
  EXPECT_EQ(F.ranks, (std::vector<int>{1, 1}));
  EXPECT_EQ(F.differential(0)(0, 0), Rational(2) * ring.one());
}

TEST(Aomoto, OnlyM2GivesTheSubstitutedPetriMatrix) {
  LInfinityPair P = generic_2x2_pair();
  TruncatedLocalRing ring({"t"}, 3);
  MultiPoly t = ring.var(0), t2 = ring.mul(t, t);
  std::vector<MultiPoly> w_coords = {t, t2, Rational(-1) * t, t + t2};
  MCElement w = omega_of(ring, w_coords);
  mc_residual(P, w);
  FreeComplex F = aomoto_complex(P, w);
  PolyMatrix expect = petri_matrix(P).substitute(w_coords, ring);
  EXPECT_EQ(F.differential(0), expect);
}

TEST(JumpIdeals, TimesTMicroOracle) {
  FreeComplex F = times_t(3);
  JumpIdeal j1 = jump_ideals(F, 0, 1);
  ASSERT_EQ(j1.generators.size(), 1u);
  EXPECT_EQ(j1.generators[0], MultiPoly::variable({"t"}, 0));
  EXPECT_TRUE(jump_ideals(F, 0, 0).is_unit());
  EXPECT_TRUE(jump_ideals(F, 0, 2).is_unit());
  // H^1 = A/(t): dim H^1 >= 1 is cut by (t) as well.
  JumpIdeal h1 = jump_ideals(F, 1, 1);
  ASSERT_EQ(h1.generators.size(), 1u);
  EXPECT_EQ(h1.generators[0], MultiPoly::variable({"t"}, 0));
}

TEST(JumpIdeals, ZeroDifferentialThresholds) {
  TruncatedLocalRing ring({"t"}, 2);
  FreeComplex F;
  F.ring = ring;
  F.dmin = -1;
  F.ranks = {2, 3, 1};
  for (int j = 0; j < 3; ++j)
    for (int k = -1; k <= 5; ++k) {
      JumpIdeal J = jump_ideals(F, j - 1, k);
      if (k <= 0 || k > F.ranks[j])
        EXPECT_TRUE(J.is_unit()) << j << " " << k;
      else
        EXPECT_TRUE(J.is_zero()) << j << " " << k;
    }
}

TEST(JumpIdeals, IdealsGrowWithK) {
  // d^0 = diag(t1, t2) over Q[t1, t2]/m^3.
  TruncatedLocalRing ring({"t1", "t2"}, 3);
  FreeComplex F;
  F.ring = ring;
  F.ranks = {2, 2};
  PolyMatrix d(2, 2, ring.vars(), ring);
  d.set(0, 0, ring.var(0));
  d.set(1, 1, ring.var(1));
  F.d = {d};
  JumpIdeal j1 = jump_ideals(F, 0, 1), j2 = jump_ideals(F, 0, 2);
  ASSERT_EQ(j1.generators.size(), 1u);
  EXPECT_EQ(j1.generators[0], ring.mul(ring.var(0), ring.var(1)));
  // J_2 = (t1, t2) contains t1 t2.
  ASSERT_EQ(j2.generators.size(), 2u);
  EXPECT_TRUE((j2.generators[0] == ring.var(0) && j2.generators[1] == ring.var(1)) ||
              (j2.generators[0] == ring.var(1) && j2.generators[1] == ring.var(0)));
  EXPECT_TRUE(jump_ideals(F, 0, 3).is_unit());
}

TEST(UniversalMatrix, OnlyM2IsThePetriMatrix) {
  LInfinityPair P = generic_2x2_pair();
  PolyMatrix u = universal_matrix(P, 4);
  EXPECT_TRUE(u.is_linear());
  EXPECT_EQ(u, petri_matrix(P).truncated(4));
}

TEST(UniversalMatrix, M3GivesHalfWeightedQuadraticCorrections) {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    std::mt19937 rng(seed);
    LInfinityPair P = samples::random_admissible_pair(rng, 3);
    if (P.m(3).is_zero()) continue;
    int s = P.algebra.space.total_dim(), a = P.module_space.dim(0), b = P.module_space.dim(1);
    PolyMatrix q = universal_matrix(P, 3).homogeneous_part(2);
    auto vars = indexed_names("x", s);
    for (int r = 0; r < b; ++r)
      for (int c = 0; c < a; ++c) {
        MultiPoly expect(vars);
        for (int i = 0; i < s; ++i)
          for (int j = i; j < s; ++j) {
            Rational w = i == j ? Rational(1, 2) : Rational(1);
            Exponent e(s, 0);
            e[i] += 1;
            e[j] += 1;
            expect.add_term(e, w * P.m(3).at({i, j, c})[a + r]);
          }
        EXPECT_EQ(q(r, c), expect) << seed;
      }
    return;
  }
  FAIL() << "no sample with nonzero m_3";
}

TEST(UniversalMatrix, SymmetricVersionIsTheNegative) {
  std::mt19937 rng(5);
  LInfinityPair P = samples::random_admissible_pair(rng, 4);
  PolyMatrix u = universal_matrix(P, 4), s = universal_matrix_symmetric(P, 4);
  for (int r = 0; r < u.rows(); ++r)
    for (int c = 0; c < u.cols(); ++c) EXPECT_EQ(s(r, c), -u(r, c));
}

TEST(UniversalMatrix, LinearAfterPartialFormality) {
  for (unsigned seed = 1; seed <= 6; ++seed) {
    std::mt19937 rng(seed);
    FormalityResult f = partial_formality(samples::random_admissible_pair(rng, 5), 5);
    PolyMatrix u = universal_matrix(f.pair, 5);
    EXPECT_TRUE(u.is_linear());
    EXPECT_EQ(u, petri_matrix(f.pair).truncated(5));
  }
}

TEST(UniversalMatrix, RefusesNonCentralDegreeZero) {
  GradedVectorSpace L(0, {1, 1}), V(0, {1, 1});
  LInfinityPair P = LInfinityPair::zero(L, V, 3);
  P.m(2).set({0, 0}, {1, 0});  // M^0 acts nontrivially on V^0
  EXPECT_THROW(universal_matrix(P, 3), HypothesisError);
}

TEST(UniversalJumpIdeals, GenericTwoByTwo) {
  LInfinityPair P = generic_2x2_pair();
  EXPECT_TRUE(universal_jump_ideals(P, 0, 3).is_unit());
  JumpIdeal J = universal_jump_ideals(P, 1, 3);
  ASSERT_EQ(J.generators.size(), 1u);
  auto det = ideal_normal_form({determinant(petri_matrix(P))}, true);
  EXPECT_EQ(J.generators[0], det[0].truncated(3));
  JumpIdeal J2 = universal_jump_ideals(P, 2, 3);
  EXPECT_EQ(J2.generators.size(), 4u);
  EXPECT_TRUE(universal_jump_ideals(P, 3, 3).is_unit());
}

TEST(Tangent, ZeroProductGivesEverything) {
  LInfinityPair P = LInfinityPair::zero(GradedVectorSpace(1, std::vector<int>{3}),
                                        GradedVectorSpace(0, {2, 1}), 3);
  TangentJumpSpace T = tangent_jump_space(P, 0);
  EXPECT_EQ(T.kind, TangentJumpSpace::Kind::Kernel);
  EXPECT_EQ(T.ambient, 3);
  EXPECT_EQ(T.basis.size(), 3u);
  EXPECT_EQ(tangent_jump_space(P, 0, 1).kind, TangentJumpSpace::Kind::Full);
  EXPECT_EQ(tangent_jump_space(P, 0, 3).kind, TangentJumpSpace::Kind::Empty);
}

TEST(Tangent, InjectiveMapGivesZeroSubspace) {
  TangentJumpSpace T = tangent_jump_space(generic_2x2_pair(), 0);
  EXPECT_EQ(T.kind, TangentJumpSpace::Kind::Kernel);
  EXPECT_TRUE(T.basis.empty());
}

TEST(Tangent, KernelDimensionIsAmbientMinusRank) {
  for (unsigned seed = 1; seed <= 8; ++seed) {
    std::mt19937 rng(seed);
    LInfinityPair P = samples::random_admissible_pair(rng, 3);
    int s = P.algebra.space.total_dim(), a = P.module_space.dim(0), b = P.module_space.dim(1);
    Matrix A(a * b, s);
    for (int i = 0; i < s; ++i)
      for (int c = 0; c < a; ++c) {
        Vec v = P.m(2).at({i, c});
        for (int r = 0; r < b; ++r) A(r * a + c, i) = v[a + r];
      }
    TangentJumpSpace T = tangent_jump_space(P, 0);
    EXPECT_EQ(static_cast<int>(T.basis.size()), s - rank(A)) << seed;
  }
}

namespace {

QuadraticData quadratic_data(int h1, int h2, std::vector<int> dims) {
  QuadraticData q;
  q.h1 = h1;
  q.h2 = h2;
  q.cup.assign(h1, std::vector<Vec>(h1, Vec(h2)));
  q.dims = dims;
  q.action.resize(dims.size() - 1);
  for (std::size_t j = 0; j + 1 < dims.size(); ++j)
    q.action[j].assign(h1, Matrix(dims[j + 1], dims[j]));
  return q;
}

}  // namespace

TEST(QuadraticModel, ZeroCupHasNoEquations) {
  QuadraticData q = quadratic_data(2, 1, {1, 1});
  QuadraticModel m = quadratic_model(q, 0, 1);
  EXPECT_TRUE(m.q_equations.empty());
  EXPECT_TRUE(m.r_generators.empty());
}

TEST(QuadraticModel, ZeroActionKeepsQ) {
  QuadraticData q = quadratic_data(2, 1, {2, 1});
  q.cup[0][1][0] = 1;
  q.cup[1][0][0] = 1;
  QuadraticModel m = quadratic_model(q, 0, 2);
  ASSERT_EQ(m.q_equations.size(), 1u);
  EXPECT_EQ(m.r_generators, ideal_normal_form(m.q_equations, false));
}

TEST(QuadraticModel, RankOneActionCutsByItsEntry) {
  QuadraticData q = quadratic_data(2, 1, {1, 1});
  q.action[0][0](0, 0) = 1;
  q.action[0][1](0, 0) = 3;
  QuadraticModel m = quadratic_model(q, 0, 1);
  ASSERT_EQ(m.r_generators.size(), 1u);
  std::vector<std::string> v = m.vars;
  MultiPoly entry = MultiPoly::variable(v, 0) + Rational(3) * MultiPoly::variable(v, 1);
  EXPECT_EQ(m.r_generators[0], ideal_normal_form({entry}, false)[0]);
}

TEST(QuadraticModel, AsymmetricCupIsRefused) {
  QuadraticData q = quadratic_data(2, 1, {1, 1});
  q.cup[0][1][0] = 1;
  EXPECT_THROW(quadratic_model(q, 0, 1), HypothesisError);
}

TEST(DefjumpJson, RoundTrips) {
  FreeComplex F = times_t(3);
  Json fj = free_complex_json(F);
  EXPECT_EQ(free_complex_json(free_complex_from_json(fj)).dump(), fj.dump());
  TruncatedLocalRing ring({"t"}, 3);
  MCElement w = omega_of(ring, {ring.var(0)});
  Json wj = mc_json(w);
  EXPECT_EQ(mc_json(mc_from_json(wj)).dump(), wj.dump());
  Json jj = jump_ideal_json(jump_ideals(F, 0, 1));
  EXPECT_EQ(jj.at("generators")[0].at("text"), "t");
}

TEST(DefjumpJson, WrongShapeIsAParseError) {
  Json fj = free_complex_json(times_t(3));
  fj["ranks"] = {2, 1};
  EXPECT_THROW(free_complex_from_json(fj), ParseError);
}
