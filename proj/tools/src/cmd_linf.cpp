#include "cli_internal.hpp"

#include <samples.hpp>

#include <jumploci/exact/errors.hpp>
#include <jumploci/detvar/report.hpp>
#include <jumploci/linf/checker.hpp>
#include <jumploci/linf/formality.hpp>
#include <jumploci/linf/json_io.hpp>
#include <jumploci/linf/retract.hpp>
#include <jumploci/linf/transfer.hpp>
#include <jumploci/linf/transport.hpp>
#include <jumploci/linf/trees.hpp>

#include <memory>
#include <random>

namespace jl::cli {

namespace {

struct Loaded {
  Json raw;
  bool is_pair = false;
};

Loaded load_structure(const std::string& path) {
  Loaded s{read_json_file(path), false};
  std::string kind = s.raw.at("kind").get<std::string>();
  if (kind == "linf_pair")
    s.is_pair = true;
  else if (kind != "linf_algebra")
    throw ParseError("expected kind linf_algebra or linf_pair, got " + kind);
  return s;
}

LInfinityPair load_pair(const std::string& path) {
  Loaded s = load_structure(path);
  if (!s.is_pair) throw ParseError(path + ": expected kind linf_pair");
  return pair_from_json(s.raw);
}

struct LinfOptions {
  std::string input, taylor, kind = "dgla";
  int arity = 0;
  int n = 6;
  unsigned seed = 1;
  bool no_verify = false;
  bool module = false;
};

}  // namespace

void add_linf(CLI::App& app, Dispatch& d) {
  auto* g = app.add_subcommand("linf", "L-infinity structures, transfer and partial formality");
  add_group_check(g, "linf", d);

  {
    auto o = std::make_shared<LinfOptions>();
    auto* check = g->add_subcommand("check", "Axiom residuals of an algebra or pair");
    check->add_option("--input", o->input)->required()->check(CLI::ExistingFile);
    check->add_option("--arity", o->arity, "Highest arity checked (default: the structure's cap)");
    check->callback([o, &d] {
      d.action = [o] {
        Loaded s = load_structure(o->input);
        Outcome out{document("residuals")};
        std::vector<Residual> res;
        int cap;
        if (s.is_pair) {
          LInfinityPair P = pair_from_json(s.raw);
          cap = o->arity > 0 ? o->arity : P.arity_cap;
          res = check_module(P, cap);
        } else {
          LInfinityAlgebra L = algebra_from_json(s.raw);
          cap = o->arity > 0 ? o->arity : L.arity_cap;
          res = check_algebra(L, cap);
        }
        out.doc["input_kind"] = s.is_pair ? "linf_pair" : "linf_algebra";
        out.doc["arity"] = cap;
        out.doc["passed"] = res.empty();
        out.doc["residuals"] = residuals_json(res);
        out.code = res.empty() ? 0 : 1;
        return out;
      };
    });

  }
  {
    auto o = std::make_shared<LinfOptions>();
    auto* transfer = g->add_subcommand("transfer", "Homotopy transfer to cohomology");
    transfer->add_option("--input", o->input)->required()->check(CLI::ExistingFile);
    transfer->add_option("--arity", o->arity, "Arity cap of the transferred structure")
        ->default_val(4);
    transfer->add_flag("--no-verify", o->no_verify, "Skip the axiom check of the result");
    transfer->callback([o, &d] {
      d.action = [o] {
        Loaded s = load_structure(o->input);
        if (s.is_pair)
          return Outcome{pair_json(transfer_pair(pair_from_json(s.raw), o->arity, !o->no_verify))};
        LInfinityAlgebra L = algebra_from_json(s.raw);
        HomotopyRetract r = build_retract(underlying_complex(L));
        return Outcome{algebra_json(transfer_algebra(L, r, o->arity, !o->no_verify))};
      };
    });

  }
  {
    auto o = std::make_shared<LinfOptions>();
    auto* retract = g->add_subcommand("retract", "Homotopy retract onto cohomology");
    retract->add_option("--input", o->input)->required()->check(CLI::ExistingFile);
    retract->add_flag("--module", o->module, "Use the module complex of a pair");
    retract->callback([o, &d] {
      d.action = [o] {
        Loaded s = load_structure(o->input);
        Complex C;
        if (o->module) {
          if (!s.is_pair) throw ParseError("--module needs a linf_pair input");
          C = module_complex(pair_from_json(s.raw));
        } else {
          C = s.is_pair ? underlying_complex(pair_from_json(s.raw).algebra)
                        : underlying_complex(algebra_from_json(s.raw));
        }
        HomotopyRetract r = build_retract(C);
        if (!r.violations().empty()) throw InvariantError("retract identities fail");
        Json doc = retract_json(r);
        return Outcome{doc};
      };
    });

  }
  {
    auto o = std::make_shared<LinfOptions>();
    auto* formality = g->add_subcommand("formality", "Kill m_n on (M^1)^(n-1) (x) V^0 for n >= 3");
    formality->add_option("--input", o->input)->required()->check(CLI::ExistingFile);
    formality->add_option("--arity", o->arity, "Arity cap")->default_val(5);
    formality->callback([o, &d] {
      d.action = [o] {
        FormalityResult f = partial_formality(load_pair(o->input), o->arity);
        Outcome out{document("partial_formality")};
        out.doc["pair"] = pair_json(f.pair);
        out.doc["iso"] = taylor_json(f.iso);
        out.doc["petri_matrix"] = polymatrix_json(petri_matrix(f.pair));
        return out;
      };
    });

  }
  {
    auto o = std::make_shared<LinfOptions>();
    auto* petri = g->add_subcommand("petri", "Matrix of linear forms induced by m_2");
    petri->add_option("--input", o->input)->required()->check(CLI::ExistingFile);
    petri->callback([o, &d] {
      d.action = [o] {
        PolyMatrix m = petri_matrix(load_pair(o->input));
        Outcome out{document("petri_matrix")};
        out.doc["matrix"] = polymatrix_json(m);
        out.doc["text"] = m.to_string();
        return out;
      };
    });

  }
  {
    auto o = std::make_shared<LinfOptions>();
    auto* transport = g->add_subcommand("transport", "Transport a structure along a Taylor family");
    transport->add_option("--input", o->input)->required()->check(CLI::ExistingFile);
    transport->add_option("--taylor", o->taylor)->required()->check(CLI::ExistingFile);
    transport->add_option("--arity", o->arity, "Arity cap")->default_val(4);
    transport->callback([o, &d] {
      d.action = [o] {
        Loaded s = load_structure(o->input);
        TaylorFamily f = taylor_from_json(read_json_file(o->taylor));
        if (s.is_pair) return Outcome{pair_json(transport_pair(pair_from_json(s.raw), f, o->arity))};
        return Outcome{algebra_json(transport_structure(algebra_from_json(s.raw), f, o->arity))};
      };
    });

  }
  {
    auto o = std::make_shared<LinfOptions>();
    auto* trees = g->add_subcommand("trees", "Rooted binary trees with their automorphism counts");
    trees->add_option("--n", o->n, "Number of leaves")->default_val(6)->check(CLI::Range(1, 12));
    trees->callback([o, &d] {
      d.action = [o] {
        Outcome out{document("trees")};
        out.doc["n"] = o->n;
        Json list = Json::array();
        for (const auto& t : enumerate_trees(o->n))
          list.push_back({{"shape", t.shape}, {"automorphisms", integer_json(t.automorphisms)}});
        out.doc["count"] = list.size();
        out.doc["trees"] = list;
        return out;
      };
    });

  }
  {
    auto o = std::make_shared<LinfOptions>();
    auto* sample = g->add_subcommand("sample", "Emit a seeded sample structure");
    sample->add_option("--kind", o->kind)
        ->check(CLI::IsMember({"dgla", "sl2-dual", "heisenberg-sl2", "dgl-pair", "admissible"}))
        ->capture_default_str();
    sample->add_option("--seed", o->seed)->default_val(1);
    sample->add_option("--arity", o->arity, "Arity cap")->default_val(5);
    sample->callback([o, &d] {
      d.action = [o] {
        std::mt19937 rng(o->seed);
        if (o->kind == "dgla") return Outcome{algebra_json(samples::random_dgla(rng, o->arity))};
        if (o->kind == "sl2-dual")
          return Outcome{algebra_json(samples::sl2_dual_numbers(rng, o->arity))};
        if (o->kind == "heisenberg-sl2")
          return Outcome{algebra_json(
              samples::tensor_dgla(samples::sl2(), samples::heisenberg_cdga(), o->arity))};
        if (o->kind == "dgl-pair") return Outcome{pair_json(samples::random_dgl_pair(rng, o->arity))};
        return Outcome{pair_json(samples::random_admissible_pair(rng, o->arity))};
      };
    });
  }
}

}  // namespace jl::cli
