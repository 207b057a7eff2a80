#include "cli_internal.hpp"

#include <jumploci/defjump/defjump.hpp>
#include <jumploci/exact/errors.hpp>
#include <jumploci/linf/json_io.hpp>

#include <algorithm>
#include <memory>
#include <optional>

namespace jl::cli {

namespace {

struct DefjumpOptions {
  std::string input, complex, pair, omega;
  std::vector<int> k;
  int i = 0;
  int order = 2;
  bool symmetric = false;
  std::optional<int> k_opt;
};

Json polys_json(const std::vector<MultiPoly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back({{"text", p.to_string()}, {"poly", poly_json(p)}});
  return a;
}

}  // namespace

void add_defjump(CLI::App& app, Dispatch& d) {
  auto* g = app.add_subcommand("defjump", "Maurer-Cartan evaluation and cohomology jump ideals");
  add_group_check(g, "defjump", d);

  {
    auto o = std::make_shared<DefjumpOptions>();
    auto* c = g->add_subcommand("duniv", "Universal matrix d_univ over K[x]/m^order");
    c->add_option("--input", o->input, "linf_pair document")->required()->check(CLI::ExistingFile);
    c->add_option("--order", o->order, "Truncation order")->default_val(3)->check(CLI::PositiveNumber);
    c->add_flag("--symmetric", o->symmetric, "Build from the symmetric maps phi_n");
    c->callback([o, &d] {
      d.action = [o] {
        LInfinityPair P = pair_from_json(read_json_file(o->input));
        PolyMatrix m = o->symmetric ? universal_matrix_symmetric(P, o->order)
                                    : universal_matrix(P, o->order);
        Outcome out{document("universal_matrix")};
        out.doc["order"] = o->order;
        out.doc["symmetric"] = o->symmetric;
        out.doc["matrix"] = polymatrix_json(m);
        out.doc["text"] = m.to_string();
        return out;
      };
    });
  }
  {
    auto o = std::make_shared<DefjumpOptions>();
    auto* c = g->add_subcommand("jump-ideals", "Jump ideals of a free complex or of d_univ");
    auto* src = c->add_option_group("source");
    src->add_option("--complex", o->complex, "free_complex document")->check(CLI::ExistingFile);
    src->add_option("--pair", o->pair, "linf_pair document (universal jump ideals)")
        ->check(CLI::ExistingFile);
    src->require_option(1);
    c->add_option("--i", o->i, "Cohomological degree (complex input)")->default_val(0);
    c->add_option("--k", o->k, "Jump levels")->required();
    c->add_option("--order", o->order, "Truncation order (pair input)")->default_val(3);
    c->callback([o, &d] {
      d.action = [o] {
        Outcome out{document("jump_ideals")};
        Json list = Json::array();
        if (!o->complex.empty()) {
          FreeComplex F = free_complex_from_json(read_json_file(o->complex));
          for (int k : o->k) list.push_back(jump_ideal_json(jump_ideals(F, o->i, k)));
        } else {
          LInfinityPair P = pair_from_json(read_json_file(o->pair));
          for (int k : o->k) list.push_back(jump_ideal_json(universal_jump_ideals(P, k, o->order)));
        }
        out.doc["ideals"] = list;
        return out;
      };
    });
  }
  {
    auto o = std::make_shared<DefjumpOptions>();
    auto* c = g->add_subcommand("mc", "Maurer-Cartan residual of omega");
    c->add_option("--input", o->input, "linf_algebra or linf_pair document")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("--omega", o->omega, "mc_element document")->required()->check(CLI::ExistingFile);
    c->callback([o, &d] {
      d.action = [o] {
        Json s = read_json_file(o->input);
        MCElement w = mc_from_json(read_json_file(o->omega));
        std::string kind = s.at("kind").get<std::string>();
        std::vector<MultiPoly> res;
        if (kind == "linf_pair")
          res = mc_residual(pair_from_json(s), w);
        else if (kind == "linf_algebra")
          res = mc_residual(algebra_from_json(s), w);
        else
          throw ParseError("expected kind linf_algebra or linf_pair, got " + kind);
        bool mc = std::all_of(res.begin(), res.end(), [](const MultiPoly& p) { return p.is_zero(); });
        Outcome out{document("mc_residual")};
        out.doc["is_maurer_cartan"] = mc;
        out.doc["residual"] = polys_json(res);
        return out;
      };
    });
  }
  {
    auto o = std::make_shared<DefjumpOptions>();
    auto* c = g->add_subcommand("aomoto", "Aomoto complex (V (x) A, d_omega)");
    c->add_option("--input", o->input, "linf_pair document")->required()->check(CLI::ExistingFile);
    c->add_option("--omega", o->omega, "mc_element document")->required()->check(CLI::ExistingFile);
    c->callback([o, &d] {
      d.action = [o] {
        LInfinityPair P = pair_from_json(read_json_file(o->input));
        MCElement w = mc_from_json(read_json_file(o->omega));
        mc_residual(P, w);
        Json doc = free_complex_json(aomoto_complex(P, w));
        return Outcome{doc};
      };
    });
  }
  {
    auto o = std::make_shared<DefjumpOptions>();
    auto* c = g->add_subcommand("tangent", "Tangent space of the jump functor");
    c->add_option("--input", o->input, "linf_pair document")->required()->check(CLI::ExistingFile);
    c->add_option("--i", o->i, "Cohomological degree")->default_val(0);
    c->add_option("--k", o->k_opt, "Jump level (default dim H^i)");
    c->callback([o, &d] {
      d.action = [o] {
        LInfinityPair P = pair_from_json(read_json_file(o->input));
        Json doc = tangent_json(tangent_jump_space(P, o->i, o->k_opt));
        return Outcome{doc};
      };
    });
  }
  {
    auto o = std::make_shared<DefjumpOptions>();
    auto* c = g->add_subcommand("quadratic-model", "Formal quadratic model of a jump locus");
    c->add_option("--input", o->input, "quadratic_data document")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("--i", o->i, "Cohomological degree")->default_val(0);
    c->add_option("--k", o->k, "Jump level")->required()->expected(1);
    c->callback([o, &d] {
      d.action = [o] {
        QuadraticData q = quadratic_data_from_json(read_json_file(o->input));
        Json doc = quadratic_model_json(quadratic_model(q, o->i, o->k.front()));
        return Outcome{doc};
      };
    });
  }
}

}  // namespace jl::cli
