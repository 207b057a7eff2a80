#include "cli_internal.hpp"

#include <samples.hpp>

#include <jumploci/bn/brillnoether.hpp>
#include <jumploci/defjump/defjump.hpp>
#include <jumploci/detvar/hankel.hpp>
#include <jumploci/detvar/kgeneric.hpp>
#include <jumploci/detvar/oracles.hpp>
#include <jumploci/detvar/report.hpp>
#include <jumploci/exact/errors.hpp>
#include <jumploci/linf/checker.hpp>
#include <jumploci/linf/formality.hpp>
#include <jumploci/linf/retract.hpp>
#include <jumploci/linf/transfer.hpp>
#include <jumploci/linf/transport.hpp>
#include <jumploci/linf/trees.hpp>

#include <random>
#include <sstream>

namespace jl::cli {

namespace {

// A check returns an empty string on success and a diagnostic otherwise.
using Check = std::function<std::string()>;

struct Suite {
  std::vector<std::pair<std::string, Check>> checks;
  void add(std::string name, Check c) { checks.emplace_back(std::move(name), std::move(c)); }
};

std::string fail_unless(bool ok, const std::string& what) { return ok ? "" : what; }

Suite linf_suite() {
  Suite s;
  s.add("tree counts 1,1,1,2,3,6 and |Aut| in {2,8} at n = 4", []() -> std::string {
    const int expected[] = {1, 1, 1, 2, 3, 6};
    for (int n = 1; n <= 6; ++n)
      if (static_cast<int>(enumerate_trees(n).size()) != expected[n - 1])
        return "wrong count at n = " + std::to_string(n);
    std::vector<Integer> aut;
    for (const auto& t : enumerate_trees(4)) aut.push_back(t.automorphisms);
    return fail_unless(aut.size() == 2 && ((aut[0] == 2 && aut[1] == 8) || (aut[0] == 8 && aut[1] == 2)),
                       "automorphism groups at n = 4");
  });
  s.add("transferred dglas satisfy the axioms up to arity 4", []() -> std::string {
    for (unsigned seed = 1; seed <= 3; ++seed) {
      std::mt19937 rng(seed);
      LInfinityAlgebra L = samples::random_dgla(rng, 4);
      LInfinityAlgebra T = transfer_algebra(L, build_retract(underlying_complex(L)), 4, false);
      if (!check_algebra(T, 4).empty()) return "nonzero residual for seed " + std::to_string(seed);
    }
    return std::string();
  });
  s.add("transferred dgl pairs satisfy the module axioms up to arity 4", []() -> std::string {
    for (unsigned seed = 1; seed <= 2; ++seed) {
      std::mt19937 rng(seed);
      LInfinityPair P = transfer_pair(samples::random_dgl_pair(rng, 4), 4, false);
      if (!check_module(P, 4).empty()) return "nonzero residual for seed " + std::to_string(seed);
    }
    return std::string();
  });
  s.add("transport along f then its inverse is the identity", []() -> std::string {
    std::mt19937 rng(7);
    LInfinityAlgebra L = samples::random_dgla(rng, 4);
    TaylorFamily f = samples::random_taylor(rng, L.space, 4, false);
    LInfinityAlgebra back = transport_structure(transport_structure(L, f, 4), inverse_family(f), 4);
    for (int n = 1; n <= 4; ++n)
      if (!(back.l(n) == L.l(n))) return "l_" + std::to_string(n) + " differs";
    return std::string();
  });
  s.add("partial formality kills higher m_n and linearizes d_univ", []() -> std::string {
    for (unsigned seed = 1; seed <= 2; ++seed) {
      std::mt19937 rng(seed);
      LInfinityPair P = samples::random_admissible_pair(rng, 5);
      FormalityResult f = partial_formality(P, 5);
      if (!check_module(f.pair, 4).empty()) return "axiom residual after formality";
      if (!(universal_matrix(f.pair, 5) == petri_matrix(f.pair)))
        return "universal matrix is not the Petri matrix";
    }
    return std::string();
  });
  return s;
}

FreeComplex times_t_complex() {
  TruncatedLocalRing ring({"t"}, 3);
  FreeComplex F;
  F.ring = ring;
  F.ranks = {1, 1};
  PolyMatrix d(1, 1, {"t"}, ring);
  d.set(0, 0, MultiPoly::variable({"t"}, 0));
  F.d = {d};
  return F;
}

Suite defjump_suite() {
  Suite s;
  s.add("J^0_1 of (t) over Q[t]/(t^3) is (t) and J^0_0 is the unit ideal", []() -> std::string {
    FreeComplex F = times_t_complex();
    JumpIdeal j1 = jump_ideals(F, 0, 1);
    bool ok = j1.generators.size() == 1 && j1.generators[0] == MultiPoly::variable({"t"}, 0);
    return fail_unless(ok && jump_ideals(F, 0, 0).is_unit(), "micro-oracle ideals differ");
  });
  s.add("zero differentials give the rank-threshold pattern", []() -> std::string {
    TruncatedLocalRing ring({"t"}, 2);
    FreeComplex F;
    F.ring = ring;
    F.ranks = {2, 3, 1};
    for (int i = 0; i < 3; ++i)
      for (int k = 1; k <= 4; ++k) {
        JumpIdeal J = jump_ideals(F, i, k);
        bool want_zero = k <= F.ranks[i];
        if (want_zero ? !J.is_zero() : !J.is_unit())
          return "i = " + std::to_string(i) + ", k = " + std::to_string(k);
      }
    return std::string();
  });
  s.add("universal jump ideals after formality equal the Petri minor ideals", []() -> std::string {
    for (unsigned seed = 1; seed <= 2; ++seed) {
      std::mt19937 rng(seed);
      FormalityResult f = partial_formality(samples::random_admissible_pair(rng, 5), 5);
      PolyMatrix pm = petri_matrix(f.pair);
      int v0 = pm.cols();
      for (int k = 1; k <= v0; ++k) {
        JumpIdeal J = universal_jump_ideals(f.pair, k, 5);
        auto expect = ideal_normal_form(minors(pm, v0 - k + 1), true);
        if (J.generators.size() != expect.size())
          return "generator count differs at k = " + std::to_string(k);
        for (std::size_t i = 0; i < expect.size(); ++i)
          if (!(J.generators[i].truncated(5) == expect[i].truncated(5)))
            return "generator differs at k = " + std::to_string(k);
      }
    }
    return std::string();
  });
  return s;
}

std::vector<std::pair<std::string, HankelModel>> small_models() {
  std::vector<std::pair<std::string, HankelModel>> m;
  for (int a = 1; a <= 6; ++a)
    for (int b = a; b <= 6; ++b)
      for (int k = 1; k <= a; ++k) m.emplace_back("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + ")", HankelModel{a, b, k});
  return m;
}

Suite detvar_suite() {
  Suite s;
  s.add("codim k(b-a+k) and resolution minimum equals lct (generic, a <= b <= 6)", []() -> std::string {
    for (const auto& [name, h] : small_models()) {
      GenericModel g{h.a, h.b, h.k};
      if (generic_codim_dim(g).codim != Integer(h.k * (h.b - h.a + h.k))) return "codim " + name;
      if (resolution_data_generic(g).min_ratio().value != generic_lct(g).value) return "lct " + name;
    }
    return std::string();
  });
  s.add("resolution minimum equals lct and reembedding is invariant (Hankel, a <= b <= 6)", []() -> std::string {
    for (const auto& [name, h] : small_models()) {
      if (resolution_data_hankel(h).min_ratio().value != hankel_lct(h)) return "lct " + name;
      HankelModel r = hankel_reembed(h);
      if (hankel_codim(r) != hankel_codim(h) || hankel_lct(r) != hankel_lct(h) ||
          hankel_multiplicity(r, r.a) != hankel_multiplicity(h, h.a))
        return "reembedding " + name;
    }
    return std::string();
  });
  s.add("monodromy: b(s) Z(s) pole-free for a = b in {2,3,4}, k = 1", []() -> std::string {
    for (int a = 2; a <= 4; ++a)
      if (!monodromy_check(a, a).holds) return "a = " + std::to_string(a);
    return std::string();
  });
  s.add("Hankel matrices are 1-generic", []() -> std::string {
    for (int a = 2; a <= 3; ++a)
      for (int b = a; b <= 4; ++b)
        if (is_k_generic(hankel_matrix(a, b), 1).verdict != Verdict::True)
          return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return std::string();
  });
  return s;
}

std::string oracle_agrees(bool hankel, int a, int b, int k) {
  PolyMatrix m = hankel ? hankel_matrix(a, b) : generic_matrix(a, b);
  HilbertResult h = hilbert_multiplicity_oracle(minors(m, a - k + 1), static_cast<int>(m.vars().size()));
  Integer dim, mult;
  if (hankel) {
    HankelModel hm{a, b, k};
    dim = Integer(hm.ambient()) - hankel_codim(hm);
    mult = hankel_multiplicity(hm, a);
  } else {
    dim = generic_codim_dim({a, b, k}).dim;
    mult = generic_multiplicity({a, b, k});
  }
  bool ok = h.status == HilbertResult::Status::Ok && Integer(h.dimension) == dim && h.multiplicity == mult;
  std::ostringstream os;
  if (!ok) os << (hankel ? "hankel" : "generic") << " (" << a << "," << b << "," << k << ")";
  return os.str();
}

Suite oracle_suite() {
  Suite s;
  s.add("Hilbert oracle matches closed forms on generic models", []() -> std::string {
    for (auto [a, b, k] : {std::tuple{2, 2, 1}, {2, 3, 1}, {3, 3, 1}, {3, 3, 2}}) {
      std::string r = oracle_agrees(false, a, b, k);
      if (!r.empty()) return r;
    }
    return std::string();
  });
  s.add("Hilbert oracle matches closed forms on Hankel models", []() -> std::string {
    for (auto [a, b, k] : {std::tuple{2, 2, 1}, {2, 3, 1}}) {
      std::string r = oracle_agrees(true, a, b, k);
      if (!r.empty()) return r;
    }
    return std::string();
  });
  s.add("first jet of xy is {xy, xy' + yx'}", []() -> std::string {
    std::vector<std::string> v{"x", "y"};
    MultiPoly xy = MultiPoly::variable(v, 0) * MultiPoly::variable(v, 1);
    auto eqs = jet_equations({xy}, 1);
    return fail_unless(eqs.size() == 2 && eqs[0].to_string() == "x*y" &&
                           eqs[1].terms().size() == 2,
                       "unexpected jet equations");
  });
  return s;
}

Suite bn_suite() {
  Suite s;
  s.add("rho + codim = dim M", []() -> std::string {
    for (int g = 2; g <= 8; ++g)
      for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 2 * n * (g - 1); ++d)
          for (int k = 1; k <= 3; ++k) {
            Rho r = rho(g, n, d, k, 1, 0);
            if (r.rho + r.codim != r.dim_moduli || r.dim_moduli != Integer(n * n * (g - 1) + 1))
              return "g = " + std::to_string(g) + ", d = " + std::to_string(d);
          }
    return std::string();
  });
  s.add("normalize outputs chi <= 0 and is idempotent", []() -> std::string {
    for (int g = 2; g <= 6; ++g)
      for (int d = 0; d <= 2 * (g - 1); ++d)
        for (int k = 1; k <= 3; ++k) {
          Normalization N = normalize({g, 1, d, k, 1, 0, std::nullopt});
          if (N.everything || N.out_of_range) continue;
          const BNInput& o = N.output;
          if (euler_char(o.g, o.n, o.d, o.rank_f, o.deg_f) > 0) return std::string("chi > 0 after normalize");
          Normalization again = normalize(o);
          if (again.swapped || again.output.d != o.d || again.output.k != o.k) return std::string("not idempotent");
        }
    return std::string();
  });
  s.add("hyperelliptic lct agrees with the Hankel lct (g <= 10, d < g)", []() -> std::string {
    for (int g = 2; g <= 10; ++g)
      for (int d = 1; d < g; ++d)
        for (int k = 1; 2 * (k - 1) <= d; ++k) {
          int lp = k - (d - g + 1);
          LctChain c = lct_chain({g, 1, d, k, 1, 0, k}, PetriModel::Hyperelliptic);
          if (!c.value || *c.value != hankel_lct({k, lp, k}))
            return "g = " + std::to_string(g) + ", d = " + std::to_string(d);
        }
    return std::string();
  });
  s.add("hyperelliptic Petri matrices are Hankel, 1-generic, with l - l' = d - g + 1", []() -> std::string {
    for (int g = 3; g <= 7; ++g)
      for (int d = 1; d < g; ++d)
        for (int r = 0; 2 * r <= d; ++r) {
          PetriHankel p = hyperelliptic_petri(g, d, r);
          if (p.l - p.l_prime != d - g + 1) return std::string("shape");
          if (p.l >= 1 && p.l_prime >= 1 && !is_hankel_space(p.matrix)) return std::string("not Hankel");
          if (is_k_generic(p.matrix, 1).verdict != Verdict::True) return std::string("not 1-generic");
        }
    return std::string();
  });
  s.add("theta divisor: multiplicity l and lct 1", []() -> std::string {
    for (int l = 2; l <= 4; ++l) {
      Json r = bn_report({16, 1, 15, 1, 1, 0, l}).to_json();
      if (r["fields"]["multiplicity"]["value"] != l) return "multiplicity at l = " + std::to_string(l);
      if (r["fields"]["lct"]["value"]["value"] != "1") return "lct at l = " + std::to_string(l);
    }
    return std::string();
  });
  return s;
}

}  // namespace

Outcome run_checks(const std::string& group) {
  Suite s = group == "linf"      ? linf_suite()
            : group == "defjump" ? defjump_suite()
            : group == "detvar"  ? detvar_suite()
            : group == "bn"      ? bn_suite()
                                 : oracle_suite();
  Outcome out{document("check_suite")};
  out.doc["group"] = group;
  Json list = Json::array();
  bool all = true;
  for (const auto& [name, check] : s.checks) {
    std::string detail;
    try {
      detail = check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    Json c = {{"name", name}, {"passed", detail.empty()}};
    if (!detail.empty()) c["detail"] = detail;
    all = all && detail.empty();
    list.push_back(c);
  }
  out.doc["passed"] = all;
  out.doc["checks"] = list;
  out.code = all ? 0 : 4;
  return out;
}

}  // namespace jl::cli
