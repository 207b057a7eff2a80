#include <jumploci/detvar/report.hpp>

#include <jumploci/exact/errors.hpp>

namespace jl {

InvariantReport::InvariantReport(std::string model, Json parameters)
    : model_(std::move(model)), parameters_(std::move(parameters)) {}

void InvariantReport::set(const std::string& name, Json value, const std::string& provenance) {
  Json f;
  f["value"] = std::move(value);
  f["provenance"] = provenance;
  fields_[name] = std::move(f);
}

void InvariantReport::add_hypothesis(const std::string& h) { hypotheses_.push_back(h); }

bool InvariantReport::has(const std::string& name) const { return fields_.contains(name); }

const Json& InvariantReport::value(const std::string& name) const {
  if (!has(name)) throw std::out_of_range("report has no field " + name);
  return fields_.at(name).at("value");
}

void InvariantReport::absorb(const InvariantReport& other) {
  for (const auto& [name, f] : other.fields_.items()) fields_[name] = f;
}

Json InvariantReport::to_json() const {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "invariant_report";
  j["model"] = model_;
  j["parameters"] = parameters_;
  j["hypotheses"] = hypotheses_;
  j["fields"] = fields_;
  return j;
}

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json rationals_json(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(rational_json(q));
  return out;
}

Json resolution_json(const ResolutionData& r) {
  Json out = Json::array();
  for (const auto& s : r.steps) {
    Json j;
    j["i"] = s.i;
    j["center"] = s.center;
    j["N"] = integer_json(s.N);
    j["nu"] = integer_json(s.nu);
    out.push_back(j);
  }
  return out;
}

Json lct_json(const LctResult& l) {
  Json j;
  j["value"] = rational_json(l.value);
  j["argmin"] = l.argmin;
  return j;
}

Json profile_json(const std::vector<ProfileFactor>& f) {
  Json out = Json::array();
  for (const auto& p : f) {
    Json j;
    j["ideal"] = "J_" + std::to_string(p.ideal_index);
    j["exponent"] = integer_json(p.exponent);
    j["trivial"] = p.trivial;
    out.push_back(j);
  }
  return out;
}

namespace {

Json params(int a, int b, int k) {
  Json p;
  p["a"] = a;
  p["b"] = b;
  p["k"] = k;
  return p;
}

Json zeta_json(const Zeta& z) {
  Json j;
  j["poles"] = rationals_json(z.poles);
  j["closed_form"] = z.closed_form;
  j["candidates_only"] = !z.closed_form;
  j["subset_caveat"] = z.subset_caveat;
  return j;
}

}  // namespace

InvariantReport generic_invariants(const GenericModel& m, const GenericReportOptions& opt) {
  validate_model(m.a, m.b, m.k);
  InvariantReport R("generic", params(m.a, m.b, m.k));
  auto cd = generic_codim_dim(m);
  R.set("codim", integer_json(cd.codim), kClosedForm);
  R.set("dim", integer_json(cd.dim), kClosedForm);
  R.set("singular_locus", m.k < m.a ? "M_" + std::to_string(m.k + 1) : "empty", kClosedForm);
  R.set("multiplicity", integer_json(generic_multiplicity(m)), kClosedForm);
  R.set("rational_singularities", true, kClosedForm);
  auto lct = generic_lct(m);
  R.set("lct", lct_json(lct), kClosedForm);
  auto res = resolution_data_generic(m);
  R.set("resolution", resolution_json(res), kClosedForm);
  auto from_res = res.min_ratio();
  if (from_res.value != lct.value) throw InvariantError("lct differs from the resolution minimum");
  R.set("lct_from_resolution", lct_json(from_res), kComputed);
  R.set("euler_obstruction", integer_json(euler_obstruction(m.a, m.k)), kClosedForm);
  if (m.k == 1) {
    auto bf = bs_poly_maximal_minors(m.a, m.b);
    Json j;
    j["polynomial"] = bf.poly.to_string();
    Json roots = Json::array();
    for (const auto& r : bf.roots) roots.push_back(integer_json(r));
    j["roots"] = roots;
    R.set("b_function", j, kClosedForm);
    auto mc = monodromy_check(m.a, m.b);
    Json mj;
    mj["holds"] = mc.holds;
    mj["candidates_only"] = mc.candidates_only;
    Json pairs = Json::array();
    for (const auto& [p, r] : mc.matched) pairs.push_back({rational_json(p), integer_json(r)});
    mj["matched"] = pairs;
    R.set("monodromy", mj, kComputed);
  }
  if (m.a == m.b) {
    R.set("zeta_poles", zeta_json(zeta_square(m.a, m.k)), kClosedForm);
    int kp = opt.k_prime.value_or(m.a);
    auto mld = mld_generic(m.a, m.k, kp);
    Json j;
    j["along_next_stratum"] = integer_json(mld.along_next_stratum);
    j["at_point"] = integer_json(mld.at_point);
    j["k_prime"] = kp;
    R.set("mld", j, kClosedForm);
  } else {
    Zeta z;
    z.poles = res.candidate_poles();
    z.subset_caveat = true;
    R.set("zeta_poles", zeta_json(z), kDerived);
  }
  if (opt.c) {
    auto p = multiplier_profile_generic(m, *opt.c);
    Json j;
    j["c"] = rational_json(p.c);
    j["factors"] = profile_json(p.factors);
    j["trivial"] = p.trivial;
    if (p.power_of_j1) j["power_of_J_1"] = integer_json(*p.power_of_j1 > 0 ? *p.power_of_j1 : Integer(0));
    R.set("multiplier_profile", j, kClosedForm);
  }
  if (opt.jets) {
    Json j;
    j["n"] = *opt.jets;
    j["components"] = integer_json(jet_component_count(m, *opt.jets));
    R.set("jet_components", j, kClosedForm);
  }
  if (opt.hodge_p && m.a == m.b && m.k == 1) {
    Json j;
    j["p"] = *opt.hodge_p;
    j["factors"] = profile_json(hodge_profile_square(m.a, *opt.hodge_p));
    R.set("hodge_profile", j, kClosedForm);
  }
  return R;
}

InvariantReport hankel_invariants(const HankelModel& h) {
  validate_model(h.a, h.b, h.k);
  Json p = params(h.a, h.b, h.k);
  p["ambient_dim"] = h.ambient();
  InvariantReport R("hankel", p);
  Integer codim = hankel_codim(h);
  R.set("codim", integer_json(codim), kClosedForm);
  R.set("dim", integer_json(Integer(h.ambient()) - codim), kClosedForm);
  R.set("singular_locus", h.k < h.a ? "N_" + std::to_string(h.k + 1) : "empty", kClosedForm);
  R.set("rational_singularities", true, kClosedForm);
  R.set("multiplicity", integer_json(hankel_multiplicity(h, h.a)), kClosedForm);
  Json strata = Json::array();
  for (int m = h.k; m <= h.a; ++m) {
    Json s;
    s["m"] = m;
    s["multiplicity"] = integer_json(hankel_multiplicity(h, m));
    strata.push_back(s);
  }
  R.set("multiplicity_by_stratum", strata, kClosedForm);
  auto re = hankel_reembed(h);
  R.set("reembedding", params(re.a, re.b, re.k), kClosedForm);
  auto res = resolution_data_hankel(h);
  bool quoted = h.a == h.b && h.k == 1;
  R.set("resolution", resolution_json(res), quoted ? kClosedForm : kDerived);
  Rational lct = hankel_lct(h);
  R.set("lct", rational_json(lct), h.a == h.b && h.k > 1 ? "closed_form via reembedding" : kClosedForm);
  auto from_res = res.min_ratio();
  if (from_res.value != lct) throw InvariantError("Hankel lct differs from the resolution minimum");
  R.set("lct_from_resolution", lct_json(from_res), kComputed);
  Zeta z;
  z.poles = res.candidate_poles();
  z.subset_caveat = true;
  R.set("zeta_poles", zeta_json(z), kDerived);
  if (h.a == h.b && h.k == 1 && h.a > 1) {
    R.set("minimal_exponent", rational_json(Rational(3, 2)), kClosedForm);
    auto b = minexp_bounds(3, 2, res);
    Json j;
    j["upper"] = b.upper ? Json(rational_json(*b.upper)) : Json();
    j["lower"] = b.lower ? Json(rational_json(*b.lower)) : Json();
    R.set("minimal_exponent_bounds", j, kComputed);
    auto g = one_generic_square_minexp_bounds(h.a, h.ambient());
    Json o;
    o["lct"] = rational_json(g.lct);
    o["lower_open"] = rational_json(g.lower_open);
    if (g.upper) o["upper"] = rational_json(*g.upper);
    R.set("one_generic_interval", o, kClosedForm);
  }
  return R;
}

}  // namespace jl
