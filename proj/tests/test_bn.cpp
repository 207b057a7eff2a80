#include <jumploci/bn/brillnoether.hpp>
#include <jumploci/detvar/kgeneric.hpp>
#include <jumploci/exact/errors.hpp>

#include <gtest/gtest.h>

using namespace jl;

namespace {

BNInput line_bundle(int g, int d, int k, std::optional<int> l = {}) { return {g, 1, d, k, 1, 0, l}; }

const Json& field(const Json& report, const char* name) { return report.at("fields").at(name).at("value"); }

}  // namespace

TEST(EulerChar, Examples) {
  for (int g = 0; g <= 6; ++g)
    for (int d = 0; d <= 2 * g; ++d) EXPECT_EQ(euler_char(g, 1, d, 1, 0), d - g + 1);
  EXPECT_EQ(euler_char(4, 1, 3, 1, 0), 0);
  EXPECT_EQ(euler_char(2, 2, 2, 1, 0), 0);
  EXPECT_EQ(euler_char(3, 2, 1, 2, 1), 2 * 1 - 2 * (2 * 2 - 1));
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(4, 1, 3, 2, 1, 0).rho, 0);
  for (int g = 2; g <= 8; ++g) EXPECT_EQ(rho(g, 1, g - 1, 1, 1, 0).rho, g - 1);
  Rho zero = rho(5, 2, 3, 0, 1, 0);
  EXPECT_EQ(zero.rho, zero.dim_moduli);
  EXPECT_EQ(zero.dim_moduli, 4 * 4 + 1);
}

TEST(Rho, PlusCodimIsDimModuli) {
  for (int g = 2; g <= 6; ++g)
    for (int n = 1; n <= 3; ++n)
      for (int d = -2; d <= 2 * n * (g - 1); ++d)
        for (int k = 0; k <= 3; ++k) {
          Rho r = rho(g, n, d, k, 1, 0);
          EXPECT_EQ(r.rho + r.codim, r.dim_moduli);
          EXPECT_EQ(r.codim, Integer(k) * (k - euler_char(g, n, d, 1, 0)));
        }
}

TEST(Normalize, NonPositiveChiIsUnchanged) {
  Normalization n = normalize(line_bundle(4, 3, 2, 2));
  EXPECT_FALSE(n.swapped);
  EXPECT_EQ(n.output.d, 3);
  EXPECT_EQ(n.output.k, 2);
  EXPECT_FALSE(n.transcript.empty());
}

TEST(Normalize, SwapToNegativeDegreeIsOutOfRange) {
  Normalization n = normalize(line_bundle(2, 3, 2));
  EXPECT_TRUE(n.swapped);
  EXPECT_EQ(n.output.d, -1);
  EXPECT_TRUE(n.out_of_range);
}

TEST(Normalize, SwapToNonPositiveKIsEverything) {
  Normalization n = normalize(line_bundle(3, 3, 1));
  EXPECT_TRUE(n.swapped);
  EXPECT_EQ(n.output.d, 1);
  EXPECT_EQ(n.output.k, 0);
  EXPECT_TRUE(n.everything);
}

TEST(Normalize, IsIdempotentAndLandsInNonPositiveChi) {
  for (int g = 2; g <= 6; ++g)
    for (int d = 0; d <= 2 * (g - 1); ++d)
      for (int k = 1; k <= 4; ++k) {
        Normalization once = normalize(line_bundle(g, d, k, k + 1));
        if (once.everything || once.out_of_range) continue;
        const BNInput& o = once.output;
        EXPECT_LE(euler_char(o.g, o.n, o.d, o.rank_f, o.deg_f), 0);
        Normalization twice = normalize(o);
        EXPECT_FALSE(twice.swapped);
        EXPECT_EQ(twice.output.d, o.d);
        EXPECT_EQ(twice.output.k, o.k);
        EXPECT_EQ(twice.output.l, o.l);
      }
}

TEST(Report, GenusFourTwoPencils) {
  Json r = bn_report(line_bundle(4, 3, 2, 2)).to_json();
  EXPECT_EQ(field(r, "dim"), 0);
  EXPECT_EQ(field(r, "multiplicity"), 1);
  EXPECT_EQ(field(r, "l_prime"), 2);
  EXPECT_EQ(field(r, "rho"), 0);
}

TEST(Report, ThetaDivisor) {
  for (int l = 2; l <= 4; ++l) {
    Json r = bn_report(line_bundle(16, 15, 1, l)).to_json();
    EXPECT_EQ(field(r, "multiplicity"), l);
    EXPECT_EQ(field(r, "lct").at("value"), "1");
    const Json& roots = field(r, "b_function").at("roots");
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) EXPECT_EQ(roots[i], -(i + 1));
    EXPECT_EQ(field(r, "rational_singularities_everywhere"), true);
  }
}

TEST(Report, GenusSixDegreeFour) {
  Json r = bn_report(line_bundle(6, 4, 1, 2)).to_json();
  EXPECT_EQ(field(r, "codim"), 2);
  EXPECT_EQ(field(r, "multiplicity"), 3);
  EXPECT_EQ(field(r, "lct").at("value"), "2");
}

TEST(Report, HypothesesAreStated) {
  Json r = bn_report(line_bundle(6, 4, 1, 2)).to_json();
  ASSERT_FALSE(r.at("hypotheses").empty());
  EXPECT_NE(r.at("hypotheses")[0].get<std::string>().find("Petri map injective"), std::string::npos);
}

TEST(Report, Refusals) {
  EXPECT_THROW(bn_report(line_bundle(4, 3, 3, 2)), HypothesisError);      // k > l
  EXPECT_THROW(bn_report(line_bundle(4, 5, 1, 2)), HypothesisError);      // chi > 0
  EXPECT_THROW(bn_report(line_bundle(4, 3, 1)), HypothesisError);         // l missing
  EXPECT_THROW(bn_report(line_bundle(2, 1, 1, 3)), HypothesisError);      // l l' > dim M
}

TEST(LctChain, Models) {
  BNInput in = line_bundle(6, 4, 1, 2);
  LctChain inj = lct_chain(in, PetriModel::Injective);
  ASSERT_TRUE(inj.value.has_value());
  EXPECT_EQ(*inj.value, generic_lct({2, 3, 1}).value);
  for (bool e : inj.equalities) EXPECT_TRUE(e);
  LctChain hyp = lct_chain(in, PetriModel::Hyperelliptic);
  ASSERT_TRUE(hyp.value.has_value());
  EXPECT_EQ(*hyp.value, hankel_lct({2, 3, 1}));
  LctChain unk = lct_chain(in, PetriModel::Unknown);
  EXPECT_FALSE(unk.value.has_value());
  for (bool e : unk.equalities) EXPECT_FALSE(e);
  EXPECT_THROW(parse_petri_model("bogus"), HypothesisError);
}

TEST(HyperellipticPetri, GenusFiveDegreeFour) {
  PetriHankel p = hyperelliptic_petri(5, 4, 1);
  EXPECT_EQ(petri_hankel_json(p)["matrix"], Json::parse(R"([["x1","x2"],["x2","x3"]])"));
}

TEST(HyperellipticPetri, ShapesAndHankelProperty) {
  PetriHankel six = hyperelliptic_petri(6, 4, 1);
  EXPECT_EQ(six.matrix.rows(), 3);
  EXPECT_EQ(six.matrix.cols(), 2);
  EXPECT_EQ(six.matrix.vars().size(), 4u);
  PetriHankel col = hyperelliptic_petri(6, 3, 0);
  EXPECT_EQ(col.matrix.cols(), 1);
  EXPECT_EQ(col.matrix.rows(), 3);
  for (int g = 2; g <= 8; ++g)
    for (int d = 0; d < g; ++d)
      for (int r = 0; 2 * r <= d; ++r) {
        PetriHankel p = hyperelliptic_petri(g, d, r);
        EXPECT_EQ(Integer(p.l - p.l_prime), euler_char(g, 1, d, 1, 0));
        for (int i = 0; i < p.matrix.rows(); ++i)
          for (int j = 0; j < p.matrix.cols(); ++j)
            if (i > 0 && j + 1 < p.matrix.cols()) EXPECT_EQ(p.matrix(i, j), p.matrix(i - 1, j + 1));
        EXPECT_TRUE(is_hankel_space(p.matrix));
        EXPECT_EQ(is_k_generic(p.matrix, 1).verdict, Verdict::True);
      }
  EXPECT_THROW(hyperelliptic_petri(3, 6, 1), HypothesisError);
}

TEST(Hyperelliptic, LctFour) {
  Json r = hyperelliptic_report(6, 4, 2, 2).to_json();
  EXPECT_EQ(field(r, "lct"), "4");
  EXPECT_EQ(r["fields"]["lct"]["provenance"], kConditional);
}

TEST(Hyperelliptic, ThetaDivisorMinimalExponentAndPullbacks) {
  for (int l = 2; l <= 4; ++l) {
    int g = 2 * l + 1;
    Json r = hyperelliptic_report(g, g - 1, 1, l).to_json();
    EXPECT_EQ(field(r, "lct"), "1");
    EXPECT_EQ(field(r, "minimal_exponent"), "3/2");
    EXPECT_EQ(r["fields"]["minimal_exponent"]["provenance"], kUnconditional);
    Json expect = Json::array();
    for (int m = l; m >= 1; --m) expect.push_back(m);
    EXPECT_EQ(field(r, "pullback_multiplicities"), expect);
    EXPECT_EQ(r["fields"]["pullback_multiplicities"]["provenance"], kUnconditional);
  }
}

TEST(Hyperelliptic, Dimension) {
  Json r = hyperelliptic_report(7, 5, 2).to_json();
  EXPECT_EQ(field(r, "dim"), 3);
  Json top = hyperelliptic_report(7, 7, 2, 2).to_json();
  EXPECT_EQ(field(top, "dim"), 5);
  EXPECT_FALSE(top["fields"].contains("lct"));
}

TEST(Hyperelliptic, LctAgreesWithHankelExhaustively) {
  for (int g = 2; g <= 10; ++g)
    for (int d = 0; d < g; ++d)
      for (int l = 1; 2 * (l - 1) <= d; ++l)
        for (int k = 1; k <= l; ++k) {
          Json r = hyperelliptic_report(g, d, k, l).to_json();
          HankelModel h{l, g - d - 1 + l, k};
          EXPECT_EQ(rational_from_json(field(r, "lct")), hankel_lct(h)) << g << " " << d << " " << k << " " << l;
        }
}
