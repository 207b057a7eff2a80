#include <jumploci/detvar/hankel.hpp>
#include <jumploci/detvar/kgeneric.hpp>
#include <jumploci/detvar/oracles.hpp>
#include <jumploci/detvar/report.hpp>
#include <jumploci/exact/errors.hpp>

#include <gtest/gtest.h>

using namespace jl;

namespace {

std::vector<Rational> qs(std::initializer_list<Rational> l) { return l; }

HilbertResult oracle_for(const PolyMatrix& m, int minor_size) {
  return hilbert_multiplicity_oracle(minors(m, minor_size), static_cast<int>(m.vars().size()));
}

}  // namespace

TEST(Generic, CodimAndDim) {
  EXPECT_EQ(generic_codim_dim({2, 2, 1}).codim, 1);
  EXPECT_EQ(generic_codim_dim({2, 2, 1}).dim, 3);
  EXPECT_EQ(generic_codim_dim({3, 3, 2}).codim, 4);
  EXPECT_EQ(generic_codim_dim({3, 3, 2}).dim, 5);
  for (int a = 1; a <= 4; ++a) EXPECT_EQ(generic_codim_dim({a, a + 1, a}).dim, 0);
}

TEST(Generic, InvalidModelsAreRefused) {
  EXPECT_THROW(validate_model(3, 2, 1), HypothesisError);
  EXPECT_THROW(validate_model(2, 2, 0), HypothesisError);
  EXPECT_THROW(validate_model(2, 2, 3), HypothesisError);
}

TEST(Generic, Multiplicity) {
  EXPECT_EQ(generic_multiplicity({2, 2, 1}), 2);
  EXPECT_EQ(generic_multiplicity({2, 3, 1}), 3);
  EXPECT_EQ(generic_multiplicity({3, 3, 1}), 3);
  EXPECT_EQ(generic_multiplicity({3, 3, 2}), 6);
  EXPECT_EQ(generic_multiplicity({4, 4, 2}), 20);
  EXPECT_EQ(generic_multiplicity({2, 2, 2}), 1);
}

TEST(Generic, Lct) {
  for (int a = 1; a <= 5; ++a) {
    LctResult l = generic_lct({a, a, 1});
    EXPECT_EQ(l.value, 1);
    EXPECT_EQ(l.argmin, (std::vector<int>{a - 1}));
  }
  EXPECT_EQ(generic_lct({2, 3, 1}).value, 2);
  EXPECT_EQ(generic_lct({2, 3, 1}).argmin, (std::vector<int>{1}));
  EXPECT_EQ(generic_lct({3, 3, 2}).value, 4);
  EXPECT_EQ(generic_lct({3, 3, 2}).argmin, (std::vector<int>{1}));
}

TEST(Generic, MultiplierProfile) {
  MultiplierProfile below = multiplier_profile_generic({2, 3, 1}, 1);
  EXPECT_TRUE(below.trivial);
  MultiplierProfile at = multiplier_profile_generic({2, 3, 1}, 2);
  EXPECT_FALSE(at.trivial);
  int nontrivial = 0;
  for (const auto& f : at.factors)
    if (!f.trivial) {
      ++nontrivial;
      EXPECT_EQ(f.ideal_index, 1);
      EXPECT_EQ(f.exponent, 1);
    }
  EXPECT_EQ(nontrivial, 1);
  EXPECT_TRUE(multiplier_profile_generic({3, 3, 1}, Rational(1, 2)).trivial);
}

TEST(Generic, JetComponents) {
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(jet_component_count({3, 4, 1}, n), 1);
    EXPECT_EQ(jet_component_count({3, 3, 3}, n), 1);
  }
  EXPECT_EQ(jet_component_count({3, 3, 2}, 0), 1);
  EXPECT_EQ(jet_component_count({3, 3, 2}, 1), 2);
}

TEST(Generic, BFunctionOfMaximalMinors) {
  EXPECT_EQ(bs_poly_maximal_minors(2, 2).roots, (std::vector<Integer>{-1, -2}));
  EXPECT_EQ(bs_poly_maximal_minors(2, 3).roots, (std::vector<Integer>{-2, -3}));
  EXPECT_EQ(bs_poly_maximal_minors(2, 2).poly.to_string(), "s^2 + 3*s + 2");
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      EXPECT_EQ(Rational(-bs_poly_maximal_minors(a, b).roots.front()), generic_lct({a, b, 1}).value);
}

TEST(Generic, ZetaSquare) {
  EXPECT_EQ(zeta_square(2, 1).poles, qs({-1, -2}));
  EXPECT_EQ(zeta_square(3, 2).poles, qs({-4, Rational(-9, 2)}));
  for (int a = 1; a <= 4; ++a) EXPECT_EQ(zeta_square(a, a).poles, qs({Rational(-a * a)}));
  EXPECT_TRUE(zeta_square(2, 1).closed_form);
}

TEST(Generic, ResolutionData) {
  ResolutionData r = resolution_data_generic({2, 2, 1});
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[0].N, 2);
  EXPECT_EQ(r.steps[0].nu, 4);
  EXPECT_EQ(r.steps[1].N, 1);
  EXPECT_EQ(r.steps[1].nu, 1);
  ResolutionData s = resolution_data_generic({2, 3, 1});
  EXPECT_EQ(s.steps[0].nu, 6);
  EXPECT_EQ(s.steps[1].nu, 2);
  EXPECT_EQ(s.min_ratio().value, 2);
  ResolutionData o = resolution_data_generic({3, 4, 3});
  ASSERT_EQ(o.steps.size(), 1u);
  EXPECT_EQ(o.steps[0].N, 1);
  EXPECT_EQ(o.steps[0].nu, 12);
}

TEST(Generic, EulerObstructionAndMld) {
  EXPECT_EQ(euler_obstruction(2, 1), 2);
  EXPECT_EQ(euler_obstruction(4, 2), 6);
  EXPECT_EQ(euler_obstruction(5, 5), 1);
  MldPair m = mld_generic(2, 1, 2);
  EXPECT_EQ(m.along_next_stratum, 2);
  EXPECT_EQ(m.at_point, 2);
  m = mld_generic(3, 1, 1);
  EXPECT_EQ(m.along_next_stratum, 2);
  EXPECT_EQ(m.at_point, 8);
  m = mld_generic(3, 2, 3);
  EXPECT_EQ(m.along_next_stratum, 3);
  EXPECT_EQ(m.at_point, 3);
}

TEST(Generic, MonodromyCheck) {
  for (int a = 2; a <= 4; ++a) {
    MonodromyCheck c = monodromy_check(a, a);
    EXPECT_TRUE(c.holds) << a;
    EXPECT_TRUE(c.unmatched.empty());
    for (const auto& [pole, root] : c.matched) EXPECT_EQ(pole, Rational(root));
  }
  MonodromyCheck two = monodromy_check(2, 2);
  ASSERT_EQ(two.matched.size(), 2u);
}

TEST(Generic, HodgeProfile) {
  for (int a = 1; a <= 4; ++a)
    for (const auto& f : hodge_profile_square(a, 0)) EXPECT_TRUE(f.trivial);
  int nontrivial = 0;
  for (const auto& f : hodge_profile_square(2, 2))
    if (!f.trivial) {
      ++nontrivial;
      EXPECT_EQ(f.ideal_index, 2);
      EXPECT_EQ(f.exponent, 1);
    }
  EXPECT_EQ(nontrivial, 1);
  for (const auto& f : hodge_profile_square(3, 1)) EXPECT_TRUE(f.trivial);
}

TEST(Hankel, Reembedding) {
  HankelModel r = hankel_reembed({3, 3, 2});
  EXPECT_EQ(r.a, 2);
  EXPECT_EQ(r.b, 4);
  EXPECT_EQ(r.k, 1);
  HankelModel same = hankel_reembed({2, 5, 1});
  EXPECT_EQ(same.a, 2);
  EXPECT_EQ(same.b, 5);
  EXPECT_EQ(same.k, 1);
}

TEST(Hankel, Invariants) {
  EXPECT_EQ(hankel_codim({2, 2, 1}), 1);
  EXPECT_EQ(hankel_multiplicity({2, 2, 1}, 2), 2);
  EXPECT_EQ(hankel_lct({2, 2, 1}), 1);
  EXPECT_EQ(hankel_lct({2, 4, 1}), Rational(5, 2));
  Json r = hankel_invariants({2, 2, 1}).to_json();
  EXPECT_EQ(r["fields"]["minimal_exponent"]["value"], "3/2");
}

TEST(Hankel, CoherenceAndReembeddingInvariance) {
  for (int a = 1; a <= 6; ++a)
    for (int b = a; b <= 6; ++b)
      for (int k = 1; k <= a; ++k) {
        HankelModel h{a, b, k};
        EXPECT_EQ(resolution_data_hankel(h).min_ratio().value, hankel_lct(h));
        HankelModel r = hankel_reembed(h);
        EXPECT_EQ(hankel_codim(r), hankel_codim(h));
        EXPECT_EQ(hankel_lct(r), hankel_lct(h));
        EXPECT_EQ(hankel_multiplicity(r, r.a), hankel_multiplicity(h, h.a));
        GenericModel g{a, b, k};
        EXPECT_EQ(resolution_data_generic(g).min_ratio().value, generic_lct(g).value);
      }
}

TEST(KGeneric, FullSpaceIsAGeneric) {
  for (int a = 1; a <= 3; ++a) {
    KGenericResult r = is_k_generic(generic_matrix(a, a + 1), a);
    EXPECT_EQ(r.verdict, Verdict::True);
    EXPECT_EQ(r.perp_dim, 0);
  }
}

TEST(KGeneric, HankelIsOneGeneric) {
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 5; ++b) {
      ASSERT_TRUE(is_hankel_space(hankel_matrix(a, b)));
      EXPECT_EQ(is_k_generic(hankel_matrix(a, b), 1).verdict, Verdict::True);
    }
  EXPECT_FALSE(is_hankel_space(generic_matrix(2, 2)));
}

TEST(KGeneric, RankOnePerpElementGivesAWitness) {
  // Drop x11 from the generic 2 x 3 space: E_11 is a rank-one perp element.
  PolyMatrix g = generic_matrix(2, 3);
  g.set(0, 0, MultiPoly(g.vars()));
  KGenericResult r = is_k_generic(g, 1);
  ASSERT_EQ(r.verdict, Verdict::False);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(rank(*r.witness), 1);
  // The witness is trace-orthogonal to every matrix in the space.
  auto perp = trace_perp(g);
  EXPECT_EQ(perp.size(), 1u);
}

TEST(KGeneric, PencilPerpIsDecided) {
  // A two-dimensional perp: the verdict comes from the pencil determinant.
  std::vector<std::string> v{"y1", "y2"};
  PolyMatrix m(2, 2, v);
  MultiPoly y1 = MultiPoly::variable(v, 0), y2 = MultiPoly::variable(v, 1);
  m.set(0, 0, Rational(2) * y1);
  m.set(1, 1, y1);
  m.set(0, 1, y2);
  m.set(1, 0, Rational(-1) * y2);
  KGenericResult r = is_k_generic(m, 1);
  EXPECT_EQ(r.perp_dim, 2);
  EXPECT_NE(r.verdict, Verdict::Unknown);
}

TEST(Oracle, TwoByTwoDeterminant) {
  HilbertResult h = oracle_for(generic_matrix(2, 2), 2);
  ASSERT_EQ(h.status, HilbertResult::Status::Ok);
  EXPECT_EQ(h.dimension, 3);
  EXPECT_EQ(h.multiplicity, 2);
}

TEST(Oracle, TwoByTwoMinorsOfThreeByThree) {
  HilbertResult h = oracle_for(generic_matrix(3, 3), 2);
  ASSERT_EQ(h.status, HilbertResult::Status::Ok);
  EXPECT_EQ(h.dimension, 5);
  EXPECT_EQ(h.multiplicity, 6);
}

TEST(Oracle, UnitIdealIsEmpty) {
  std::vector<std::string> v{"x"};
  EXPECT_EQ(hilbert_multiplicity_oracle({MultiPoly::constant(v, 1)}, 1).status,
            HilbertResult::Status::Empty);
}

TEST(Oracle, ArtinianQuotient) {
  std::vector<std::string> v{"x", "y"};
  MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1);
  HilbertResult h = hilbert_multiplicity_oracle({x * x, y * y}, 2);
  ASSERT_EQ(h.status, HilbertResult::Status::Ok);
  EXPECT_EQ(h.dimension, 0);
  EXPECT_EQ(h.multiplicity, 4);
}

TEST(Oracle, MatchesClosedForms) {
  for (auto [a, b, k] : {std::tuple{2, 2, 1}, {2, 3, 1}, {3, 3, 1}, {3, 3, 2}}) {
    HilbertResult h = oracle_for(generic_matrix(a, b), a - k + 1);
    CodimDim cd = generic_codim_dim({a, b, k});
    EXPECT_EQ(Integer(h.dimension), cd.dim);
    EXPECT_EQ(h.multiplicity, generic_multiplicity({a, b, k}));
  }
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}}) {
    HankelModel hm{a, b, 1};
    HilbertResult h = oracle_for(hankel_matrix(a, b), a);
    EXPECT_EQ(Integer(h.dimension), Integer(hm.ambient()) - hankel_codim(hm));
    EXPECT_EQ(h.multiplicity, hankel_multiplicity(hm, a));
  }
}

TEST(Jets, Equations) {
  std::vector<std::string> v{"x", "y"};
  MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1);
  auto lin = jet_equations({x}, 1);
  ASSERT_EQ(lin.size(), 2u);
  EXPECT_EQ(lin[0].to_string(), "x");
  EXPECT_EQ(lin[1].to_string(), "x'");
  auto prod = jet_equations({x * y}, 1);
  ASSERT_EQ(prod.size(), 2u);
  EXPECT_EQ(prod[0].to_string(), "x*y");
  auto jv = jet_variables(v, 1);
  EXPECT_EQ(jv, (std::vector<std::string>{"x", "y", "x'", "y'"}));
  auto xv = [&](int i) { return MultiPoly::variable(jv, i); };
  EXPECT_EQ(prod[1], xv(0) * xv(3) + xv(2) * xv(1));
  PolyMatrix g = generic_matrix(2, 2);
  auto det = jet_equations(minors(g, 2), 1);
  ASSERT_EQ(det.size(), 2u);
  EXPECT_EQ(det[0].degree(), 2);
}

TEST(Bounds, MinimalExponent) {
  MinexpBounds h = minexp_bounds(3, 2, resolution_data_hankel({2, 2, 1}));
  ASSERT_TRUE(h.upper.has_value());
  EXPECT_EQ(*h.upper, Rational(3, 2));
  MinexpBounds four = minexp_bounds(4, 2, resolution_data_generic({2, 2, 1}));
  ASSERT_TRUE(four.upper.has_value());
  EXPECT_EQ(*four.upper, 2);
  EXPECT_FALSE(minexp_bounds(4, 1, resolution_data_generic({2, 2, 1})).upper.has_value());
}

TEST(Bounds, OneGenericSquare) {
  OneGenericSquare two = one_generic_square_minexp_bounds(2, 3);
  EXPECT_EQ(two.lct, 1);
  EXPECT_EQ(two.lower_open, 1);
  ASSERT_TRUE(two.upper.has_value());
  EXPECT_EQ(*two.upper, Rational(3, 2));
  OneGenericSquare three = one_generic_square_minexp_bounds(3, 5);
  ASSERT_TRUE(three.upper.has_value());
  EXPECT_EQ(*three.upper, Rational(5, 3));
  EXPECT_FALSE(one_generic_square_minexp_bounds(2, 4).upper.has_value());
}

TEST(Bounds, Resiliency) {
  ResiliencyReport r = resiliency_bounds(3, 4, 1, 0, 1);
  ASSERT_TRUE(r.h_codim_bound.has_value());
  EXPECT_EQ(*r.h_codim_bound, 1 * (4 - 3 + 2 * 1 - 1));
  ResiliencyReport cm = resiliency_bounds(3, 4, 1, 2, 0);
  EXPECT_FALSE(cm.h_codim_bound.has_value());
  EXPECT_FALSE(cm.triggers.empty());
  ResiliencyReport var = resiliency_bounds(3, 4, 1, 1, 0);
  EXPECT_GT(var.triggers.size(), cm.triggers.size());
}

TEST(Report, GenericFieldsAndProvenance) {
  Json r = generic_invariants({2, 3, 1}).to_json();
  EXPECT_EQ(r["schema"], "jumploci/1");
  EXPECT_EQ(r["fields"]["multiplicity"]["value"], 3);
  EXPECT_EQ(r["fields"]["lct"]["value"]["value"], "2");
  EXPECT_EQ(r["fields"]["lct"]["provenance"], kClosedForm);
  EXPECT_EQ(r["fields"]["lct_from_resolution"]["provenance"], kComputed);
  EXPECT_FALSE(r["fields"].contains("mld"));
  Json sq = generic_invariants({3, 3, 1}, {Rational(1), 2, 1, 2}).to_json();
  for (const char* f : {"mld", "multiplier_profile", "jet_components", "hodge_profile", "zeta_poles"})
    EXPECT_TRUE(sq["fields"].contains(f)) << f;
}

TEST(Report, HankelResolutionIsMarkedDerived) {
  Json r = hankel_invariants({2, 3, 1}).to_json();
  EXPECT_EQ(r["fields"]["resolution"]["provenance"], kDerived);
  Json sq = hankel_invariants({2, 2, 1}).to_json();
  EXPECT_EQ(sq["fields"]["resolution"]["provenance"], kClosedForm);
}
