#include <jumploci/bn/brillnoether.hpp>

#include <jumploci/detvar/kgeneric.hpp>
#include <jumploci/exact/errors.hpp>

namespace jl {

namespace {

std::string str(const Integer& n) { return n.get_str(); }

void validate_basic(const BNInput& in) {
  if (in.g < 0) throw HypothesisError("genus must be >= 0");
  if (in.n < 1) throw HypothesisError("rank n must be >= 1");
  if (in.rank_f < 1) throw HypothesisError("rank of F must be >= 1");
}

int require_l(const BNInput& in) {
  if (!in.l) throw HypothesisError("l = h^0(E (x) F) must be supplied");
  if (*in.l < 1) throw HypothesisError("l must be >= 1");
  if (in.k > *in.l) throw HypothesisError("k > l: the locus is empty near E");
  return *in.l;
}

Json bn_params(const BNInput& in) {
  Json p;
  p["g"] = in.g;
  p["n"] = in.n;
  p["d"] = in.d;
  p["k"] = in.k;
  p["rankF"] = in.rank_f;
  p["degF"] = in.deg_f;
  if (in.l) p["l"] = *in.l;
  return p;
}

}  // namespace

Integer euler_char(int g, int n, int d, int rank_f, int deg_f) {
  return Integer(n) * deg_f - Integer(rank_f) * (Integer(n) * (g - 1) - d);
}

Rho rho(int g, int n, int d, int k, int rank_f, int deg_f) {
  Integer chi = euler_char(g, n, d, rank_f, deg_f);
  Rho r;
  r.dim_moduli = Integer(n) * n * (g - 1) + 1;
  r.codim = Integer(k) * (k - chi);
  r.rho = r.dim_moduli - r.codim;
  return r;
}

Normalization normalize(const BNInput& in) {
  validate_basic(in);
  Normalization N;
  N.output = in;
  Integer chi = euler_char(in.g, in.n, in.d, in.rank_f, in.deg_f);
  if (chi <= 0) {
    N.transcript.push_back("chi = " + str(chi) + " <= 0: unchanged");
    return N;
  }
  N.swapped = true;
  BNInput& out = N.output;
  out.d = 2 * (in.g - 1) * in.n - in.d;
  out.k = static_cast<int>(Integer(in.k - chi).get_si());
  out.deg_f = -in.deg_f;
  if (in.l) out.l = static_cast<int>(Integer(*in.l - chi).get_si());
  N.transcript.push_back("chi = " + str(chi) + " > 0: replace (E, F, k, d) by (E^v (x) omega_C, F^v, k - chi, 2(g-1)n - d)");
  N.transcript.push_back("d: " + std::to_string(in.d) + " -> " + std::to_string(out.d));
  N.transcript.push_back("k: " + std::to_string(in.k) + " -> " + std::to_string(out.k));
  N.transcript.push_back("deg F: " + std::to_string(in.deg_f) + " -> " + std::to_string(out.deg_f));
  if (in.l) N.transcript.push_back("l: " + std::to_string(*in.l) + " -> " + std::to_string(*out.l));
  if (out.k <= 0) {
    N.everything = true;
    N.transcript.push_back("swapped k <= 0: the jump locus is the whole moduli space");
  }
  if (out.d < 0) {
    N.out_of_range = true;
    N.transcript.push_back("swapped degree " + std::to_string(out.d) + " < 0: outside the supported range");
  }
  return N;
}

PetriModel parse_petri_model(const std::string& s) {
  if (s == "injective") return PetriModel::Injective;
  if (s == "hyperelliptic") return PetriModel::Hyperelliptic;
  if (s == "unknown") return PetriModel::Unknown;
  throw HypothesisError("unknown Petri model '" + s + "' (injective|hyperelliptic|unknown)");
}

std::string to_string(PetriModel m) {
  switch (m) {
    case PetriModel::Injective: return "injective";
    case PetriModel::Hyperelliptic: return "hyperelliptic";
    default: return "unknown";
  }
}

InvariantReport bn_report(const BNInput& in, const GenericReportOptions& opt) {
  validate_basic(in);
  if (in.k < 1) throw HypothesisError("k must be >= 1");
  int l = require_l(in);
  Integer chi = euler_char(in.g, in.n, in.d, in.rank_f, in.deg_f);
  if (chi > 0) throw HypothesisError("chi = " + str(chi) + " > 0: normalize the input first (l <= l' required)");
  Integer lp_big = Integer(l) - chi;
  if (!lp_big.fits_sint_p()) throw HypothesisError("l' out of range");
  int lp = static_cast<int>(lp_big.get_si());
  Rho r = rho(in.g, in.n, in.d, in.k, in.rank_f, in.deg_f);
  if (Integer(l) * lp > r.dim_moduli)
    throw HypothesisError("Petri map cannot be injective: l l' = " + str(Integer(l) * lp) + " > dim M = " + str(r.dim_moduli));

  InvariantReport R("brill_noether", bn_params(in));
  R.add_hypothesis("Petri map injective (assumed, not verified; holds for generic curves)");
  R.add_hypothesis("normalized: l <= l'");
  R.absorb(generic_invariants({l, lp, in.k}, opt));
  R.set("chi", integer_json(chi), kClosedForm);
  R.set("l", l, "input");
  R.set("l_prime", lp, kClosedForm);
  R.set("dim_moduli", integer_json(r.dim_moduli), kClosedForm);
  R.set("rho", integer_json(r.rho), kClosedForm);
  if (Integer(R.value("codim").get<long>()) != r.codim)
    throw InvariantError("local model codimension differs from k(k - chi)");
  R.set("dim", integer_json(r.rho), kClosedForm);
  R.set("singular_locus", "V_" + std::to_string(in.k + 1), kClosedForm);
  R.set("tangent_cone_model",
        "generic determinantal: " + std::to_string(lp) + " x " + std::to_string(l) + " matrices of rank <= " +
            std::to_string(l - in.k) + ", times an affine space of dimension " + str(r.dim_moduli - Integer(l) * lp),
        kClosedForm);
  bool trivial_f = in.rank_f == 1 && in.deg_f == 0;
  if (in.k == 1 && trivial_f && Integer(in.n) * (in.g - 1) - in.d >= 0)
    R.set("rational_singularities_everywhere", true, kUnconditional);
  R.set("lct_chain", lct_chain_json(lct_chain(in, PetriModel::Injective)), kClosedForm);
  return R;
}

LctChain lct_chain(const BNInput& in, PetriModel model) {
  validate_basic(in);
  LctChain c;
  c.model = to_string(model);
  c.terms = {"lct_E(M_{n,d}, V_k(F))", "lct_0(H^1(C, E (x) E^v), TC_E V_k(F))", "lct_0(N, N_k)"};
  c.equalities = {false, false};
  c.link_notes = {"inequality", "inequality"};
  if (model == PetriModel::Unknown) return c;
  int l = require_l(in);
  Integer chi = euler_char(in.g, in.n, in.d, in.rank_f, in.deg_f);
  if (chi > 0) throw HypothesisError("normalize the input first (chi > 0)");
  int lp = static_cast<int>(Integer(l - chi).get_si());
  if (model == PetriModel::Injective) {
    c.equalities = {true, true};
    c.link_notes = {"equality: the germ is isomorphic to its tangent cone", "equality: tangent cone is the generic model times an affine space"};
    c.value = generic_lct({l, lp, in.k}).value;
  } else {
    if (in.n != 1 || in.rank_f != 1 || in.deg_f != 0)
      throw HypothesisError("hyperelliptic model needs n = 1 and F = O");
    c.link_notes = {std::string("equality ") + kConditional, std::string("equality ") + kConditional};
    c.value = hankel_lct({l, lp, in.k});
  }
  return c;
}

Json lct_chain_json(const LctChain& c) {
  Json j;
  j["model"] = c.model;
  j["terms"] = c.terms;
  j["equalities"] = c.equalities;
  j["links"] = c.link_notes;
  j["value"] = c.value ? Json(rational_json(*c.value)) : Json();
  return j;
}

PetriHankel hyperelliptic_petri(int g, int d, int r) {
  if (g < 1) throw HypothesisError("genus must be >= 1");
  if (d >= 2 * g) throw HypothesisError("need d < 2g");
  if (r < 0) throw HypothesisError("need h^0 = r + 1 >= 1");
  int q = g - 1 - d + r;  // S^q V carries h^1 = q + 1 sections
  if (q < 0) throw HypothesisError("need h^1 = g - d + r >= 1");
  PetriHankel P{g, d, r, r + 1, q + 1, {}};
  if (Integer(P.l - P.l_prime) != euler_char(g, 1, d, 1, 0))
    throw InvariantError("l - l' differs from the Euler characteristic");
  int top = q + r;  // S^{g-1-d+2r} V
  auto vars = indexed_names("x", top + 1);
  PolyMatrix M(P.l_prime, P.l, vars);
  // Monomials s0^{deg-e} s1^e; multiplication adds the s1-exponents, and the
  // product monomial is paired with the dual coordinate x_{e+1}.
  for (int i = 0; i <= q; ++i)
    for (int j = 0; j <= r; ++j) {
      Exponent left{q - i, i}, right{r - j, j};
      Exponent prod{left[0] + right[0], left[1] + right[1]};
      M.set(i, j, MultiPoly::variable(vars, prod[1]));
    }
  P.matrix = M;
  return P;
}

Json petri_hankel_json(const PetriHankel& p) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "petri_hankel";
  j["g"] = p.g;
  j["d"] = p.d;
  j["r"] = p.r;
  j["l"] = p.l;
  j["l_prime"] = p.l_prime;
  Json rows = Json::array();
  for (int i = 0; i < p.matrix.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < p.matrix.cols(); ++c) row.push_back(p.matrix(i, c).to_string());
    rows.push_back(row);
  }
  j["matrix"] = rows;
  j["polymatrix"] = polymatrix_json(p.matrix);
  return j;
}

InvariantReport hyperelliptic_report(int g, int d, int k, std::optional<int> l_opt) {
  if (g < 2) throw HypothesisError("need g >= 2");
  if (k < 1) throw HypothesisError("need k >= 1");
  if (d > g || (d == g && k < 2) || d < 0) throw HypothesisError("need 0 <= d < g (or d = g with k >= 2)");
  int l = l_opt.value_or(k);
  if (k > l) throw HypothesisError("k > l: the locus is empty near L");
  if (2 * (l - 1) > d) throw HypothesisError("h^0(L) = l needs 2(l - 1) <= d");
  int lp = g - d - 1 + l;
  Json p;
  p["g"] = g;
  p["d"] = d;
  p["k"] = k;
  p["l"] = l;
  p["l_prime"] = lp;
  InvariantReport R("hyperelliptic", p);
  R.add_hypothesis("hyperelliptic curve; local model of W^0_d given by the Hankel Petri matrix (open question)");
  int r = k - 1;
  R.set("dim", d - 2 * r, kUnconditional);
  R.set("irreducible", true, kUnconditional);
  R.set("singular_locus", "(W^" + std::to_string(r + 1) + "_" + std::to_string(d) + ")_red", kUnconditional);
  R.set("reduced_model", "(W^" + std::to_string(r) + "_" + std::to_string(d) + ")_red = W^0_" + std::to_string(d - 2 * r),
        kUnconditional);
  if (d == g) return R;  // the local-model statements need d < g

  R.set("reduced", true, kUnconditional);
  auto petri = hyperelliptic_petri(g, d, l - 1);
  R.set("petri_matrix", petri_hankel_json(petri)["matrix"], kUnconditional);
  auto kg = is_k_generic(petri.matrix, 1);
  R.set("petri_1_generic", to_string(kg.verdict), kComputed);

  HankelModel h{l, lp, k};
  R.set("multiplicity", integer_json(hankel_multiplicity(h, l)), kConditional);
  Json strata = Json::array();
  for (int m = k; m <= l; ++m) {
    Json s;
    s["m"] = m;
    s["multiplicity"] = integer_json(binomial(g - d - 2 + m + k, m - k));
    strata.push_back(s);
  }
  R.set("multiplicity_by_stratum", strata, kConditional);
  auto res = resolution_data_hankel(h);
  for (auto& s : res.steps) s.center = "W^" + std::to_string(l - s.i - 1) + "_" + std::to_string(d);
  R.set("resolution", resolution_json(res), kConditional);
  if (d == g - 1 && k == 1) {
    Json mult = Json::array();
    for (const auto& s : res.steps) mult.push_back(integer_json(s.N));
    R.set("pullback_multiplicities", mult, kUnconditional);
  }
  Rational lct;
  if (d == g - 1 && k == 1)
    lct = 1;
  else if (d != g - 1)
    lct = 1 + Rational(lp + k - 2, l - k + 1);
  else
    lct = hankel_lct(h);
  lct.canonicalize();
  if (lct != hankel_lct(h)) throw InvariantError("hyperelliptic lct differs from the Hankel model");
  if (lct != res.min_ratio().value) throw InvariantError("hyperelliptic lct differs from the resolution minimum");
  R.set("lct", rational_json(lct), kConditional);
  if (d == g - 1 && l > 1 && k == 1) R.set("minimal_exponent", rational_json(Rational(3, 2)), kUnconditional);
  Zeta z;
  z.poles = res.candidate_poles();
  z.subset_caveat = true;
  Json zj;
  zj["poles"] = rationals_json(z.poles);
  zj["candidates_only"] = true;
  zj["subset_caveat"] = true;
  R.set("zeta_poles", zj, std::string(kConditional) + "; " + kDerived);
  BNInput in{g, 1, d, k, 1, 0, l};
  R.set("lct_chain", lct_chain_json(lct_chain(in, PetriModel::Hyperelliptic)), kConditional);
  return R;
}

}  // namespace jl
