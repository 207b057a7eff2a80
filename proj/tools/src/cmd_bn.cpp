#include "cli_internal.hpp"

#include <jumploci/bn/brillnoether.hpp>
#include <jumploci/exact/errors.hpp>

#include <memory>
#include <optional>

namespace jl::cli {

namespace {

struct BnOptions {
  BNInput in;
  std::string assume = "injective";
  std::optional<std::string> c;
  std::optional<int> jets;
};

void add_input_flags(CLI::App* c, BnOptions& o, bool need_l) {
  c->add_option("--g", o.in.g, "Genus")->required();
  c->add_option("--n", o.in.n, "Rank of E")->capture_default_str();
  c->add_option("--d", o.in.d, "Degree of E")->required();
  c->add_option("--k", o.in.k, "Jump level")->capture_default_str();
  c->add_option("--rankF", o.in.rank_f, "Rank of F")->capture_default_str();
  c->add_option("--degF", o.in.deg_f, "Degree of F")->capture_default_str();
  auto* l = c->add_option("--l", o.in.l, "h^0(E (x) F)");
  if (need_l) l->required();
}

Json input_json(const BNInput& in) {
  Json j = {{"g", in.g}, {"n", in.n}, {"d", in.d}, {"k", in.k}, {"rankF", in.rank_f},
            {"degF", in.deg_f}};
  if (in.l) j["l"] = *in.l;
  return j;
}

Json normalization_json(const Normalization& N) {
  return {{"swapped", N.swapped},        {"everything", N.everything},
          {"out_of_range", N.out_of_range}, {"output", input_json(N.output)},
          {"transcript", N.transcript}};
}

Json rho_json(const BNInput& in) {
  Rho r = rho(in.g, in.n, in.d, in.k, in.rank_f, in.deg_f);
  return {{"chi", integer_json(euler_char(in.g, in.n, in.d, in.rank_f, in.deg_f))},
          {"rho", integer_json(r.rho)},
          {"dim_moduli", integer_json(r.dim_moduli)},
          {"codim", integer_json(r.codim)}};
}

Outcome report_command(const BnOptions& o) {
  PetriModel model = parse_petri_model(o.assume);
  Normalization N = normalize(o.in);
  if (N.out_of_range) throw HypothesisError(N.transcript.back());
  if (N.everything) {
    Outcome out{document("bn_normalization")};
    out.doc["verdict"] = "the jump locus is the whole moduli space";
    out.doc["normalization"] = normalization_json(N);
    return out;
  }
  const BNInput& in = N.output;
  InvariantReport R("brill_noether", input_json(in));
  if (model == PetriModel::Injective) {
    GenericReportOptions opt;
    if (o.c) opt.c = parse_rational(*o.c);
    opt.jets = o.jets;
    R = bn_report(in, opt);
  } else if (model == PetriModel::Hyperelliptic) {
    if (in.n != 1 || in.rank_f != 1 || in.deg_f != 0)
      throw HypothesisError("hyperelliptic model needs n = 1 and F = O");
    R = hyperelliptic_report(in.g, in.d, in.k, in.l);
  } else {
    R.add_hypothesis("Petri map: no model assumed; only numerics and the lct inequality chain");
    Json r = rho_json(in);
    for (auto it = r.begin(); it != r.end(); ++it) R.set(it.key(), it.value(), kClosedForm);
    R.set("lct_chain", lct_chain_json(lct_chain(in, model)), kDerived);
  }
  R.set("normalization", normalization_json(N), "input");
  return Outcome{R.to_json()};
}

}  // namespace

void add_bn(CLI::App& app, Dispatch& d) {
  auto* g = app.add_subcommand("bn", "Brill-Noether loci of stable bundles on curves");
  add_group_check(g, "bn", d);

  {
    auto o = std::make_shared<BnOptions>();
    auto* c = g->add_subcommand("report", "Singularity report of V_k(F) at E");
    add_input_flags(c, *o, true);
    c->add_option("--assume", o->assume, "Petri map model")
        ->check(CLI::IsMember({"injective", "hyperelliptic", "unknown"}))
        ->capture_default_str();
    c->add_option("--c", o->c, "Multiplier ideal coefficient (rational)");
    c->add_option("--jets", o->jets, "Jet order for the component count");
    c->callback([o, &d] { d.action = [o] { return report_command(*o); }; });
  }
  {
    auto o = std::make_shared<BnOptions>();
    auto* c = g->add_subcommand("lct-chain", "Chain of lct inequalities at E");
    add_input_flags(c, *o, false);
    c->add_option("--assume", o->assume, "Petri map model")
        ->check(CLI::IsMember({"injective", "hyperelliptic", "unknown"}))
        ->capture_default_str();
    c->callback([o, &d] {
      d.action = [o] {
        Outcome out{document("lct_chain")};
        out.doc["input"] = input_json(o->in);
        out.doc["chain"] = lct_chain_json(lct_chain(o->in, parse_petri_model(o->assume)));
        return out;
      };
    });
  }
  {
    auto o = std::make_shared<BnOptions>();
    auto* c = g->add_subcommand("normalize", "Serre-duality normalization to chi <= 0");
    add_input_flags(c, *o, false);
    c->callback([o, &d] {
      d.action = [o] {
        Outcome out{document("bn_normalization")};
        out.doc["input"] = input_json(o->in);
        out.doc["normalization"] = normalization_json(normalize(o->in));
        return out;
      };
    });
  }
  {
    auto o = std::make_shared<BnOptions>();
    auto* c = g->add_subcommand("rho", "Euler characteristic and Brill-Noether number");
    add_input_flags(c, *o, false);
    c->callback([o, &d] {
      d.action = [o] {
        Outcome out{document("bn_numbers")};
        out.doc["input"] = input_json(o->in);
        Json r = rho_json(o->in);
        for (auto it = r.begin(); it != r.end(); ++it) out.doc[it.key()] = it.value();
        return out;
      };
    });
  }
  {
    struct HOptions {
      int g = 2, d = 1, r = 0;
    };
    auto o = std::make_shared<HOptions>();
    auto* c = g->add_subcommand("hyperelliptic", "Hankel Petri matrix of a hyperelliptic curve");
    c->add_option("--g", o->g, "Genus")->required();
    c->add_option("--d", o->d, "Degree")->required();
    c->add_option("--r", o->r, "h^0(L) - 1")->required();
    c->callback([o, &d] {
      d.action = [o] { return Outcome{petri_hankel_json(hyperelliptic_petri(o->g, o->d, o->r))}; };
    });
  }
  {
    struct HROptions {
      int g = 2, d = 1, k = 1;
      std::optional<int> l;
    };
    auto o = std::make_shared<HROptions>();
    auto* c = g->add_subcommand("hyperelliptic-report", "Report for W^{k-1}_d on a hyperelliptic curve");
    c->add_option("--g", o->g, "Genus")->required();
    c->add_option("--d", o->d, "Degree")->required();
    c->add_option("--k", o->k, "Jump level")->required();
    c->add_option("--l", o->l, "h^0(L) (default k)");
    c->callback([o, &d] {
      d.action = [o] { return Outcome{hyperelliptic_report(o->g, o->d, o->k, o->l).to_json()}; };
    });
  }
}

}  // namespace jl::cli
