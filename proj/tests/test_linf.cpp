#include <samples.hpp>

#include <jumploci/linf/checker.hpp>
#include <jumploci/linf/formality.hpp>
#include <jumploci/linf/json_io.hpp>
#include <jumploci/linf/retract.hpp>
#include <jumploci/linf/signs.hpp>
#include <jumploci/linf/transfer.hpp>
#include <jumploci/linf/transport.hpp>
#include <jumploci/linf/trees.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace jl;

namespace {

// sl_2 in degree 0 with zero differential.
LInfinityAlgebra sl2_algebra(int cap) {
  samples::LieAlgebra g = samples::sl2();
  GradedVectorSpace S(0, std::vector<int>{g.dim});
  LInfinityAlgebra L = LInfinityAlgebra::zero(S, cap);
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) L.l(2).set({i, j}, g.bracket[i][j]);
  return L;
}

// sl_2 (basis e, f, h) acting on its standard representation.
LInfinityPair sl2_standard_pair(int cap) {
  GradedVectorSpace L(0, std::vector<int>{3}), V(0, std::vector<int>{2});
  LInfinityPair P = LInfinityPair::zero(L, V, cap);
  P.algebra = sl2_algebra(cap);
  std::vector<Matrix> act = {Matrix::from_rows({{0, 1}, {0, 0}}), Matrix::from_rows({{0, 0}, {1, 0}}),
                             Matrix::from_rows({{1, 0}, {0, -1}})};
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 2; ++c) P.m(2).set({i, c}, act[i].column(c));
  return P;
}

// Q --id--> Q in degrees 0, 1.
LInfinityAlgebra acyclic_line(int cap) {
  LInfinityAlgebra L = LInfinityAlgebra::zero(GradedVectorSpace(0, {1, 1}), cap);
  L.l(1).set({0}, {0, 1});
  return L;
}

bool all_higher_zero(const LInfinityAlgebra& L, int from) {
  for (int n = from; n <= L.arity_cap; ++n)
    if (!L.l(n).is_zero()) return false;
  return true;
}

}  // namespace

TEST(Signs, KoszulSwapExamples) {
  EXPECT_EQ(koszul_sign({0, 1, 2}, {3, 1, 2}, SignVariant::Symmetric), 1);
  EXPECT_EQ(koszul_sign({0, 1, 2}, {3, 1, 2}, SignVariant::Antisymmetric), 1);
  EXPECT_EQ(koszul_sign({1, 0}, {1, 1}, SignVariant::Symmetric), -1);
  EXPECT_EQ(koszul_sign({1, 0}, {1, 1}, SignVariant::Antisymmetric), 1);
  EXPECT_EQ(koszul_sign({1, 0}, {0, 1}, SignVariant::Symmetric), 1);
  EXPECT_EQ(koszul_sign({1, 0}, {0, 1}, SignVariant::Antisymmetric), -1);
}

TEST(Signs, DecalageExponent) {
  EXPECT_EQ(decalage_sign({5}), 1);
  EXPECT_EQ(decalage_sign({1, 1}), 1);
  EXPECT_EQ(decalage_sign({0, 1}), -1);  // (2-1)(0-1)
}

TEST(Signs, UnshuffleCounts) {
  EXPECT_EQ(unshuffles(4, 2).size(), 6u);
  EXPECT_EQ(unshuffles(5, 1).size(), 5u);
}

TEST(Decalage, RoundTripOnRandomMaps) {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    std::mt19937 rng(seed);
    LInfinityAlgebra L = samples::random_dgla(rng, 4);
    for (int n = 1; n <= 2; ++n) {
      EXPECT_EQ(decalage(decalage_inverse(L.l(n))), L.l(n));
      EXPECT_EQ(decalage_inverse(decalage(L.l(n).with_symmetry(Symmetry::Symmetric))),
                L.l(n).with_symmetry(Symmetry::Symmetric));
    }
  }
}

TEST(CheckAlgebra, DglasAndAbelianPass) {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    std::mt19937 rng(seed);
    EXPECT_TRUE(check_algebra(samples::random_dgla(rng, 4), 4).empty());
  }
  EXPECT_TRUE(check_algebra(sl2_algebra(4), 4).empty());
  EXPECT_TRUE(check_algebra(LInfinityAlgebra::zero(GradedVectorSpace(0, {2, 1, 2}), 4), 4).empty());
}

TEST(CheckAlgebra, PerturbedBracketFails) {
  LInfinityAlgebra L = sl2_algebra(4);
  Vec v = L.l(2).at({0, 1});
  v[0] += 1;
  L.l(2).set({0, 1}, v);
  auto res = check_algebra(L, 3);
  ASSERT_FALSE(res.empty());
  for (const auto& r : res) EXPECT_TRUE(r.arity == 2 || r.arity == 3);
}

TEST(CheckModule, DglPairsAndDifferentialOnlyPass) {
  for (unsigned seed = 1; seed <= 3; ++seed) {
    std::mt19937 rng(seed);
    EXPECT_TRUE(check_module(samples::random_dgl_pair(rng, 4), 4).empty());
  }
  GradedVectorSpace L(0, std::vector<int>{1}), V(0, {1, 1});
  LInfinityPair P = LInfinityPair::zero(L, V, 4);
  P.m(1).set({0}, {0, 1});
  EXPECT_TRUE(check_module(P, 4).empty());
}

TEST(CheckModule, PerturbedPairFails) {
  LInfinityPair P = sl2_standard_pair(3);
  ASSERT_TRUE(check_module(P, 3).empty());
  // Rescaling the action of h breaks [e, f] = h on the module.
  for (int c = 0; c < 2; ++c) P.m(2).set({2, c}, scale(P.m(2).at({2, c}), 3));
  EXPECT_FALSE(check_module(P, 3).empty());
}

TEST(Retract, ZeroDifferentialIsIdentity) {
  HomotopyRetract r = build_retract(underlying_complex(sl2_algebra(3)));
  EXPECT_TRUE(r.violations().empty());
  EXPECT_EQ(r.iota, Matrix::identity(3));
  EXPECT_EQ(r.p, Matrix::identity(3));
  EXPECT_TRUE(r.h.is_zero());
}

TEST(Retract, AcyclicLineInvertsTheDifferential) {
  HomotopyRetract r = build_retract(underlying_complex(acyclic_line(3)));
  EXPECT_TRUE(r.violations().empty());
  EXPECT_EQ(r.cohomology.total_dim(), 0);
  EXPECT_EQ(r.h(0, 1), 1);
}

TEST(Retract, RandomComplexesSatisfyTheIdentities) {
  for (unsigned seed = 1; seed <= 8; ++seed) {
    std::mt19937 rng(seed);
    Complex C = underlying_complex(samples::random_dgla(rng, 3));
    HomotopyRetract r = build_retract(C);
    EXPECT_TRUE(r.violations().empty());
    int n = C.space.total_dim();
    EXPECT_EQ(r.p * r.iota, Matrix::identity(r.cohomology.total_dim()));
    EXPECT_EQ(Matrix::identity(n) - r.iota * r.p, C.d * r.h + r.h * C.d);
  }
}

TEST(Trees, CountsAndAutomorphisms) {
  const std::size_t counts[] = {1, 1, 1, 2, 3, 6};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_trees(n).size(), counts[n - 1]) << n;
  auto four = enumerate_trees(4);
  ASSERT_EQ(four.size(), 2u);
  for (const auto& t : four) {
    if (t.shape == "((*,*),(*,*))")
      EXPECT_EQ(t.automorphisms, 8);
    else
      EXPECT_EQ(t.automorphisms, 2);
  }
  EXPECT_EQ(enumerate_trees(3)[0].automorphisms, 2);
}

TEST(Transfer, AbelianDglaHasNoHigherBrackets) {
  std::mt19937 rng(5);
  LInfinityAlgebra L = samples::random_dgla(rng, 4);
  for (int n = 2; n <= L.arity_cap; ++n) L.l(n) = make_operation(L.space, n, 2 - n);
  LInfinityAlgebra T = transfer_algebra(L, build_retract(underlying_complex(L)), 4);
  EXPECT_TRUE(all_higher_zero(T, 2));
}

TEST(Transfer, ZeroDifferentialKeepsTheBracket) {
  LInfinityAlgebra L = sl2_algebra(4);
  LInfinityAlgebra T = transfer_algebra(L, build_retract(underlying_complex(L)), 4);
  EXPECT_EQ(T.l(2).values(), L.l(2).values());  // homology relabels the basis
  EXPECT_TRUE(all_higher_zero(T, 3));
}

TEST(Transfer, HigherBracketsAppearAndSatisfyTheAxioms) {
  samples::Cdga A = samples::heisenberg_cdga();
  LInfinityAlgebra L = samples::tensor_dgla(samples::two_dim_nonabelian(), A, 4);
  LInfinityAlgebra T = transfer_algebra(L, build_retract(underlying_complex(L)), 4);
  EXPECT_TRUE(T.verified);
  EXPECT_TRUE(check_algebra(T, 4).empty());
  std::mt19937 rng(3);
  LInfinityAlgebra S = samples::sl2_dual_numbers(rng, 4);
  EXPECT_TRUE(check_algebra(transfer_algebra(S, build_retract(underlying_complex(S)), 4), 4).empty());
}

TEST(Transfer, RandomDglasPassUpToArityFour) {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    std::mt19937 rng(seed);
    LInfinityAlgebra L = samples::random_dgla(rng, 4);
    ASSERT_LE(L.space.total_dim(), 6);
    LInfinityAlgebra T = transfer_algebra(L, build_retract(underlying_complex(L)), 4, false);
    EXPECT_TRUE(check_algebra(T, 4).empty()) << seed;
  }
}

TEST(TransferPair, ZeroDifferentialsKeepTheStructure) {
  LInfinityPair P = sl2_standard_pair(4);
  ASSERT_TRUE(check_module(P, 3).empty());
  LInfinityPair T = transfer_pair(P, 4);
  EXPECT_EQ(T.m(2).values(), P.m(2).values());
  for (int n = 3; n <= 4; ++n) EXPECT_TRUE(T.m(n).is_zero());
}

TEST(TransferPair, AbelianBaseHasNoHigherModuleMaps) {
  for (unsigned seed = 1; seed <= 3; ++seed) {
    std::mt19937 rng(seed);
    LInfinityPair P = samples::random_dgl_pair(rng, 4);
    for (int n = 2; n <= 4; ++n) P.algebra.l(n) = make_operation(P.algebra.space, n, 2 - n);
    if (!check_module(P, 4).empty()) continue;
    LInfinityPair T = transfer_pair(P, 4);
    for (int n = 3; n <= 4; ++n) EXPECT_TRUE(T.m(n).is_zero()) << seed;
  }
}

TEST(TransferPair, RandomPairsPass) {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    std::mt19937 rng(seed);
    LInfinityPair T = transfer_pair(samples::random_dgl_pair(rng, 4), 4, false);
    EXPECT_TRUE(check_module(T, 4).empty()) << seed;
  }
}

TEST(Transport, IdentityFamilyChangesNothing) {
  std::mt19937 rng(4);
  LInfinityAlgebra L = samples::random_dgla(rng, 4);
  LInfinityAlgebra T = transport_structure(L, TaylorFamily::identity(L.space, 4), 4);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(T.l(n), L.l(n));
}

TEST(Transport, InverseFamilyUndoesTransport) {
  for (unsigned seed = 1; seed <= 4; ++seed) {
    std::mt19937 rng(seed);
    LInfinityAlgebra L = samples::random_dgla(rng, 4);
    TaylorFamily f = samples::random_taylor(rng, L.space, 4, seed % 2 == 0);
    LInfinityAlgebra M = transport_structure(L, f, 4);
    EXPECT_TRUE(check_algebra(M, 4).empty());
    LInfinityAlgebra back = transport_structure(M, inverse_family(f), 4);
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(back.l(n), L.l(n)) << seed << " " << n;
  }
}

TEST(Transport, ComposeWithInverseIsIdentity) {
  std::mt19937 rng(9);
  LInfinityAlgebra L = samples::random_dgla(rng, 4);
  TaylorFamily f = samples::random_taylor(rng, L.space, 4, false);
  TaylorFamily id = compose(f, inverse_family(f));
  EXPECT_EQ(id.linear_part(), Matrix::identity(L.space.total_dim()));
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE(id.f(n).is_zero()) << n;
}

TEST(PartialFormality, AlreadyFormalPairIsUnchanged) {
  std::mt19937 rng(1);
  LInfinityPair P = samples::random_admissible_pair(rng, 5);
  for (int n = 3; n <= 5; ++n)
    P.m(n) = make_module_operation(P.algebra.space, P.module_space, n, 2 - n);
  FormalityResult f = partial_formality(P, 5);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(f.pair.m(n), P.m(n));
  EXPECT_EQ(f.iso.linear_part(), Matrix::identity(P.algebra.space.total_dim()));
}

TEST(PartialFormality, SingleM3IsKilledInOneStage) {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    std::mt19937 rng(seed);
    LInfinityPair P = samples::random_admissible_pair(rng, 3);
    if (P.m(3).is_zero()) continue;
    FormalityResult f = partial_formality(P, 3);
    EXPECT_TRUE(f.pair.m(3).is_zero());
    EXPECT_EQ(f.pair.m(2), P.m(2));
    EXPECT_EQ(transport_pair(P, f.iso, 3).m(3), f.pair.m(3));
    return;
  }
  FAIL() << "no sample with nonzero m_3";
}

TEST(PartialFormality, RandomAdmissiblePairs) {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    std::mt19937 rng(seed);
    LInfinityPair P = samples::random_admissible_pair(rng, 5);
    FormalityResult f = partial_formality(P, 5);
    for (int n = 3; n <= 5; ++n) EXPECT_TRUE(f.pair.m(n).is_zero()) << seed << " " << n;
    EXPECT_EQ(f.pair.m(2), P.m(2));
    EXPECT_TRUE(check_module(f.pair, 4).empty());
  }
}

TEST(PetriMatrix, ZeroProductGivesZeroMatrix) {
  LInfinityPair P = LInfinityPair::zero(GradedVectorSpace(1, std::vector<int>{2}),
                                        GradedVectorSpace(0, {1, 1}), 3);
  PolyMatrix m = petri_matrix(P);
  EXPECT_EQ(m.rows(), 1);
  EXPECT_EQ(m.cols(), 1);
  EXPECT_TRUE(m.is_zero());
}

TEST(PetriMatrix, OneByOneIsTheLinearForm) {
  LInfinityPair P = LInfinityPair::zero(GradedVectorSpace(1, std::vector<int>{2}),
                                        GradedVectorSpace(0, {1, 1}), 3);
  P.m(2).set({0, 0}, {0, 3});
  P.m(2).set({1, 0}, {0, Rational(-1, 2)});
  PolyMatrix m = petri_matrix(P);
  std::vector<std::string> v{"x1", "x2"};
  EXPECT_EQ(m(0, 0), Rational(3) * MultiPoly::variable(v, 0) - Rational(1, 2) * MultiPoly::variable(v, 1));
}

TEST(LinfJson, AlgebraAndPairRoundTrip) {
  std::mt19937 rng(6);
  LInfinityAlgebra L = samples::random_dgla(rng, 4);
  L.verified = false;  // parsing never trusts a verified flag
  Json j = algebra_json(L);
  LInfinityAlgebra L2 = algebra_from_json(j);
  EXPECT_EQ(algebra_json(L2).dump(), j.dump());
  LInfinityPair P = samples::random_dgl_pair(rng, 4);
  P.verified = false;
  Json pj = pair_json(P);
  EXPECT_EQ(pair_json(pair_from_json(pj)).dump(), pj.dump());
  TaylorFamily f = samples::random_taylor(rng, L.space, 3, false);
  Json fj = taylor_json(f);
  EXPECT_EQ(taylor_json(taylor_from_json(fj)).dump(), fj.dump());
}

TEST(LinfJson, SchemaTagIsPresent) {
  std::mt19937 rng(6);
  Json j = algebra_json(samples::random_dgla(rng, 3));
  EXPECT_EQ(j.at("schema"), "jumploci/1");
  EXPECT_EQ(j.at("kind"), "linf_algebra");
}
