#include "cli_internal.hpp"

#include <jumploci/detvar/hankel.hpp>
#include <jumploci/detvar/kgeneric.hpp>
#include <jumploci/detvar/oracles.hpp>
#include <jumploci/detvar/report.hpp>
#include <jumploci/exact/errors.hpp>

#include <memory>
#include <optional>

namespace jl::cli {

namespace {

struct ModelOptions {
  int a = 2, b = 2, k = 1;
  std::vector<std::string> invariants;
  bool all = false;
  std::optional<std::string> c;
  std::optional<int> jets, hodge, k_prime;
};

void add_model_flags(CLI::App* c, ModelOptions& o) {
  c->add_option("--a", o.a, "Columns (a <= b)")->required();
  c->add_option("--b", o.b, "Rows")->required();
  c->add_option("--k", o.k, "Rank drop: the locus rank <= a - k")->required();
  c->add_option("--invariant", o.invariants, "Report only these fields (repeatable)");
  c->add_flag("--all", o.all, "Report every field (the default)");
}

// Keeps the requested fields in request order; an unknown name is a usage error.
Json select_fields(Json report, const std::vector<std::string>& names) {
  if (names.empty()) return report;
  Json kept = Json::object();
  for (const auto& n : names) {
    if (!report.at("fields").contains(n)) {
      std::string avail;
      for (auto it = report.at("fields").begin(); it != report.at("fields").end(); ++it)
        avail += (avail.empty() ? "" : ", ") + it.key();
      throw ParseError("unknown invariant '" + n + "'; available: " + avail);
    }
    kept[n] = report.at("fields").at(n);
  }
  report["fields"] = kept;
  return report;
}

PolyMatrix model_matrix(const std::string& family, int a, int b) {
  return family == "hankel" ? hankel_matrix(a, b) : generic_matrix(a, b);
}

struct OracleOptions {
  std::string family = "generic", input;
  int a = 2, b = 2, k = 1;
  std::optional<int> max_degree;
  int window = 3;
  int m = 1;
};

void add_oracle_source(CLI::App* c, OracleOptions& o) {
  c->add_option("--family", o.family, "Determinantal family")
      ->check(CLI::IsMember({"generic", "hankel"}))
      ->capture_default_str();
  c->add_option("--a", o.a)->capture_default_str();
  c->add_option("--b", o.b)->capture_default_str();
  c->add_option("--k", o.k)->capture_default_str();
  c->add_option("--input", o.input, "Generators document {vars, generators} instead of a family")
      ->check(CLI::ExistingFile);
}

struct Generators {
  std::vector<std::string> vars;
  std::vector<MultiPoly> polys;
  Json source;
};

// Family models use the minors of size a - k + 1; files give {vars,
// generators: [terms...]} with terms as in poly documents.
Generators load_generators(const OracleOptions& o) {
  Generators g;
  if (!o.input.empty()) {
    Json j = read_json_file(o.input);
    g.vars = j.at("vars").get<std::vector<std::string>>();
    for (const auto& t : j.at("generators")) {
      Json pj;
      pj["vars"] = g.vars;
      pj["terms"] = t.is_object() ? t.at("terms") : t;
      g.polys.push_back(poly_from_json(pj));
    }
    g.source = {{"input", o.input}};
    return g;
  }
  validate_model(o.a, o.b, o.k);
  PolyMatrix m = model_matrix(o.family, o.a, o.b);
  g.vars = m.vars();
  g.polys = minors(m, o.a - o.k + 1);
  g.source = {{"family", o.family}, {"a", o.a}, {"b", o.b}, {"k", o.k}};
  return g;
}

Outcome hilbert_command(const OracleOptions& o) {
  Generators g = load_generators(o);
  HilbertResult h =
      hilbert_multiplicity_oracle(g.polys, static_cast<int>(g.vars.size()), o.max_degree, o.window);
  Outcome out{document("hilbert_oracle")};
  out.doc["source"] = g.source;
  out.doc["ambient_dim"] = g.vars.size();
  out.doc["status"] = to_string(h.status);
  out.doc["dimension"] = h.dimension;
  out.doc["multiplicity"] = integer_json(h.multiplicity);
  Json hf = Json::array();
  for (const auto& v : h.hilbert_function) hf.push_back(integer_json(v));
  out.doc["hilbert_function"] = hf;
  if (o.input.empty()) {
    Integer dim, mult;
    if (o.family == "hankel") {
      HankelModel hm{o.a, o.b, o.k};
      dim = Integer(hm.ambient()) - hankel_codim(hm);
      mult = hankel_multiplicity(hm, hm.a);
    } else {
      GenericModel gm{o.a, o.b, o.k};
      dim = generic_codim_dim(gm).dim;
      mult = generic_multiplicity(gm);
    }
    out.doc["closed_form"] = {{"dimension", integer_json(dim)}, {"multiplicity", integer_json(mult)}};
    out.doc["agrees"] = h.status == HilbertResult::Status::Ok && Integer(h.dimension) == dim &&
                        h.multiplicity == mult;
  }
  return out;
}

Outcome jets_command(const OracleOptions& o) {
  Generators g = load_generators(o);
  std::vector<MultiPoly> eqs = jet_equations(g.polys, o.m);
  Outcome out{document("jet_equations")};
  out.doc["source"] = g.source;
  out.doc["order"] = o.m;
  out.doc["vars"] = jet_variables(g.vars, o.m);
  Json list = Json::array();
  for (const auto& p : eqs) list.push_back(p.to_string());
  out.doc["equations"] = list;
  return out;
}

void add_hilbert(CLI::App* parent, const std::string& name, Dispatch& d) {
  auto o = std::make_shared<OracleOptions>();
  auto* c = parent->add_subcommand(name, "Dimension and multiplicity from the Hilbert function");
  add_oracle_source(c, *o);
  c->add_option("--max-degree", o->max_degree, "Highest degree scanned");
  c->add_option("--window", o->window, "Stabilization window")->capture_default_str();
  c->callback([o, &d] { d.action = [o] { return hilbert_command(*o); }; });
}

}  // namespace

void add_detvar(CLI::App& app, Dispatch& d) {
  auto* g = app.add_subcommand("detvar", "Singularity invariants of determinantal models");
  add_group_check(g, "detvar", d);

  {
    auto o = std::make_shared<ModelOptions>();
    auto* c = g->add_subcommand("generic", "Generic determinantal model M_k in b x a matrices");
    add_model_flags(c, *o);
    c->add_option("--c", o->c, "Multiplier ideal coefficient (rational)");
    c->add_option("--jets", o->jets, "Jet order for the component count");
    c->add_option("--hodge", o->hodge, "Hodge filtration index (square case)");
    c->add_option("--kprime", o->k_prime, "Stratum for the mld (square case)");
    c->callback([o, &d] {
      d.action = [o] {
        GenericReportOptions opt;
        if (o->c) opt.c = parse_rational(*o->c);
        opt.jets = o->jets;
        opt.hodge_p = o->hodge;
        opt.k_prime = o->k_prime;
        Json r = generic_invariants({o->a, o->b, o->k}, opt).to_json();
        return Outcome{select_fields(r, o->all ? std::vector<std::string>{} : o->invariants)};
      };
    });
  }
  {
    auto o = std::make_shared<ModelOptions>();
    auto* c = g->add_subcommand("hankel", "Hankel determinantal model N_k");
    add_model_flags(c, *o);
    c->callback([o, &d] {
      d.action = [o] {
        Json r = hankel_invariants({o->a, o->b, o->k}).to_json();
        return Outcome{select_fields(r, o->all ? std::vector<std::string>{} : o->invariants)};
      };
    });
  }
  {
    struct KOptions {
      std::string matrix;
      int k = 1;
      int trials = 200;
      std::uint32_t seed = 1;
    };
    auto o = std::make_shared<KOptions>();
    auto* c = g->add_subcommand("kgeneric", "Decide k-genericity of a space of linear matrices");
    c->add_option("--matrix", o->matrix, "polymatrix document (or {matrix: ...})")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("--k", o->k)->capture_default_str();
    c->add_option("--trials", o->trials, "Random falsifier trials")->capture_default_str();
    c->add_option("--seed", o->seed)->capture_default_str();
    c->callback([o, &d] {
      d.action = [o] {
        Json j = read_json_file(o->matrix);
        PolyMatrix m = polymatrix_from_json(j.contains("matrix") ? j.at("matrix") : j);
        KGenericResult r = is_k_generic(m, o->k, {o->trials, o->seed});
        Outcome out{document("kgeneric")};
        out.doc["k"] = o->k;
        out.doc["verdict"] = to_string(r.verdict);
        out.doc["perp_dim"] = r.perp_dim;
        out.doc["method"] = r.method;
        if (!r.certificate.empty()) out.doc["certificate"] = r.certificate;
        if (r.witness) out.doc["witness"] = matrix_json(*r.witness);
        if (r.pencil_gcd) out.doc["pencil_gcd"] = r.pencil_gcd->to_string();
        return out;
      };
    });
  }
  add_hilbert(g, "oracle", d);
}

void add_oracle(CLI::App& app, Dispatch& d) {
  auto* g = app.add_subcommand("oracle", "Brute-force oracles");
  add_group_check(g, "oracle", d);
  add_hilbert(g, "hilbert", d);
  auto o = std::make_shared<OracleOptions>();
  auto* c = g->add_subcommand("jets", "Equations of the m-th jet scheme");
  add_oracle_source(c, *o);
  c->add_option("--m", o->m, "Jet order")->capture_default_str();
  c->callback([o, &d] { d.action = [o] { return jets_command(*o); }; });
}

}  // namespace jl::cli
