#include <jumploci/defjump/defjump.hpp>

#include <jumploci/exact/errors.hpp>
#include <jumploci/linf/transport.hpp>

#include <functional>

namespace jl {

namespace {

// Weakly increasing tuples of length n over `basis` together with
// prod coords / prod mult! (the coefficient of e^alpha in omega^n / n!).
struct PowerTerm {
  std::vector<int> tuple;
  MultiPoly coefficient;
};

std::vector<PowerTerm> divided_powers(const std::vector<int>& basis, const std::vector<MultiPoly>& coords,
                                      const TruncatedLocalRing& ring, int n) {
  std::vector<PowerTerm> out;
  std::vector<int> pos;
  std::function<void(int, MultiPoly, int, Integer)> rec = [&](int start, MultiPoly c, int run,
                                                              Integer denom) {
    if (static_cast<int>(pos.size()) == n) {
      if (c.is_zero()) return;
      std::vector<int> t;
      for (int p : pos) t.push_back(basis[p]);
      out.push_back({t, c * (Rational(1) / Rational(denom))});
      return;
    }
    for (int p = start; p < static_cast<int>(basis.size()); ++p) {
      if (coords[p].is_zero()) continue;
      int r = (!pos.empty() && pos.back() == p) ? run + 1 : 1;
      pos.push_back(p);
      rec(p, ring.mul(c, coords[p]), r, denom * r);
      pos.pop_back();
    }
  };
  rec(0, ring.one(), 0, 1);
  return out;
}

void check_omega(const GradedVectorSpace& L, const MCElement& w) {
  if (static_cast<int>(w.coords.size()) != L.dim(1))
    throw HypothesisError("MC element needs one coordinate per degree-1 basis vector");
  for (const auto& c : w.coords) {
    if (c.vars() != w.ring.vars()) throw HypothesisError("MC coordinate not over the ring");
    if (!w.ring.in_maximal_ideal(c)) throw HypothesisError("MC coordinates must lie in the maximal ideal");
  }
}

int max_power(const TruncatedLocalRing& ring, int cap, bool exact, int shift) {
  int nmax = ring.order() - 1;
  if (nmax + shift > cap) {
    if (!exact)
      throw HypothesisError("incomplete truncation: ring order " + std::to_string(ring.order()) +
                            " needs operations beyond arity cap " + std::to_string(cap));
    nmax = cap - shift;
  }
  return nmax;
}

void require_degrees_01(const GradedVectorSpace& S, const char* what) {
  for (int i = 0; i < S.total_dim(); ++i)
    if (S.degree_of(i) != 0 && S.degree_of(i) != 1)
      throw HypothesisError(std::string(what) + " must be concentrated in degrees 0 and 1");
}

void require_inert_degree0(const LInfinityPair& P) {
  const auto& L = P.algebra.space;
  auto touches0 = [&](const std::vector<int>& t, int block) {
    for (int p = 0; p < block; ++p)
      if (L.degree_of(t[p]) == 0) return true;
    return false;
  };
  for (const auto& op : P.algebra.ops)
    for (const auto& [t, v] : op.values())
      if (touches0(t, op.block_arity()))
        throw HypothesisError("M^0 does not act trivially; homotopy quotient not handled");
  for (const auto& op : P.module_ops)
    for (const auto& [t, v] : op.values())
      if (touches0(t, op.block_arity()))
        throw HypothesisError("M^0 does not act trivially; homotopy quotient not handled");
}

PolyMatrix series_matrix(const LInfinityPair& P, int order,
                         const std::function<Vec(int, const std::vector<int>&)>& op) {
  const auto& L = P.algebra.space;
  const auto& V = P.module_space;
  require_degrees_01(L, "M");
  require_degrees_01(V, "V");
  require_inert_degree0(P);
  int s = L.dim(1);
  auto vars = indexed_names("x", s);
  TruncatedLocalRing ring(vars, order);
  std::vector<MultiPoly> coords;
  for (int i = 0; i < s; ++i) coords.push_back(ring.reduce(ring.var(i)));
  auto m1 = L.basis_of_degree(1), v0 = V.basis_of_degree(0), v1 = V.basis_of_degree(1);
  PolyMatrix D(int(v1.size()), int(v0.size()), vars, ring);
  int nmax = max_power(ring, P.arity_cap, P.exact && P.algebra.exact, 1);
  std::vector<std::vector<MultiPoly>> acc(v1.size(), std::vector<MultiPoly>(v0.size(), ring.zero()));
  for (int n = 0; n <= nmax; ++n)
    for (const auto& term : divided_powers(m1, coords, ring, n))
      for (size_t c = 0; c < v0.size(); ++c) {
        auto t = term.tuple;
        t.push_back(v0[c]);
        Vec val = op(n + 1, t);
        for (size_t r = 0; r < v1.size(); ++r)
          if (val[v1[r]] != 0) acc[r][c] += term.coefficient * val[v1[r]];
      }
  for (size_t r = 0; r < v1.size(); ++r)
    for (size_t c = 0; c < v0.size(); ++c) D.set(int(r), int(c), acc[r][c]);
  return D;
}

}  // namespace

std::vector<MultiPoly> mc_residual(const LInfinityAlgebra& L, MCElement& w) {
  const auto& S = L.space;
  check_omega(S, w);
  auto one = S.basis_of_degree(1), two = S.basis_of_degree(2);
  std::vector<MultiPoly> res(two.size(), w.ring.zero());
  int nmax = max_power(w.ring, L.arity_cap, L.exact, 0);
  for (int n = 1; n <= nmax; ++n) {
    if (L.l(n).is_zero()) continue;
    for (const auto& term : divided_powers(one, w.coords, w.ring, n)) {
      Vec val = L.l(n).at(term.tuple);
      for (size_t q = 0; q < two.size(); ++q)
        if (val[two[q]] != 0) res[q] += term.coefficient * val[two[q]];
    }
  }
  w.valid = true;
  for (const auto& r : res) w.valid = w.valid && r.is_zero();
  return res;
}

std::vector<MultiPoly> mc_residual(const LInfinityPair& P, MCElement& w) {
  LInfinityAlgebra L = P.algebra;
  L.exact = P.exact && P.algebra.exact;
  return mc_residual(L, w);
}

int FreeComplex::rank(int degree) const {
  int j = degree - dmin;
  if (j < 0 || j >= static_cast<int>(ranks.size())) return 0;
  return ranks[j];
}

PolyMatrix FreeComplex::differential(int degree) const {
  int j = degree - dmin;
  if (j >= 0 && j < static_cast<int>(d.size())) return d[j];
  return PolyMatrix(rank(degree + 1), rank(degree), ring.vars(), ring);
}

std::vector<int> FreeComplex::defects() const {
  std::vector<int> out;
  for (int i = dmin - 1; i < dmin + static_cast<int>(ranks.size()); ++i)
    if (!(differential(i + 1) * differential(i)).is_zero()) out.push_back(i);
  return out;
}

FreeComplex aomoto_complex(const LInfinityPair& P, const MCElement& w) {
  const auto& L = P.algebra.space;
  const auto& V = P.module_space;
  check_omega(L, w);
  const auto& ring = w.ring;
  FreeComplex F;
  F.ring = ring;
  F.dmin = V.dmin();
  for (int deg = V.dmin(); deg <= V.dmax(); ++deg) F.ranks.push_back(V.dim(deg));
  int nmax = max_power(ring, P.arity_cap, P.exact && P.algebra.exact, 1);
  auto one = L.basis_of_degree(1);
  std::vector<std::vector<PowerTerm>> powers;
  for (int n = 0; n <= nmax; ++n) powers.push_back(divided_powers(one, w.coords, ring, n));
  for (int deg = V.dmin(); deg <= V.dmax(); ++deg) {
    auto src = V.basis_of_degree(deg), dst = V.basis_of_degree(deg + 1);
    PolyMatrix D(int(dst.size()), int(src.size()), ring.vars(), ring);
    for (size_t c = 0; c < src.size(); ++c) {
      std::vector<MultiPoly> col(dst.size(), ring.zero());
      for (int n = 0; n <= nmax; ++n) {
        if (P.m(n + 1).is_zero()) continue;
        for (const auto& term : powers[n]) {
          auto t = term.tuple;
          t.push_back(src[c]);
          Vec val = P.m(n + 1).at(t);
          for (size_t r = 0; r < dst.size(); ++r)
            if (val[dst[r]] != 0) col[r] += term.coefficient * val[dst[r]];
        }
      }
      for (size_t r = 0; r < dst.size(); ++r) D.set(int(r), int(c), col[r]);
    }
    F.d.push_back(D);
  }
  auto bad = F.defects();
  if (!bad.empty())
    throw InvariantError("d_omega does not square to zero at degree " + std::to_string(bad.front()));
  return F;
}

JumpIdeal jump_ideals(const FreeComplex& F, int i, int k) {
  JumpIdeal J;
  J.vars = F.ring.vars();
  J.order = F.ring.order();
  J.i = i;
  J.k = k;
  if (k <= 0) {
    J.generators = {MultiPoly::constant(J.vars, 1)};
    return J;
  }
  PolyMatrix B = block_diagonal(F.differential(i - 1), F.differential(i));
  J.generators = ideal_normal_form(minors(B, F.rank(i) - k + 1), true);
  return J;
}

PolyMatrix universal_matrix(const LInfinityPair& P, int order) {
  return series_matrix(P, order, [&](int n, const std::vector<int>& t) { return P.m(n).at(t); });
}

PolyMatrix universal_matrix_symmetric(const LInfinityPair& P, int order) {
  std::vector<MultilinearMap> phi;
  for (const auto& m : P.module_ops) phi.push_back(decalage_inverse(m).scaled(-1));
  return series_matrix(P, order, [&](int n, const std::vector<int>& t) { return phi.at(n - 1).at(t); });
}

JumpIdeal universal_jump_ideals(const LInfinityPair& P, int k, int order) {
  PolyMatrix D = universal_matrix(P, order);
  PolyMatrix Dsym = universal_matrix_symmetric(P, order);
  for (int r = 0; r < D.rows(); ++r)
    for (int c = 0; c < D.cols(); ++c)
      if (!(Dsym(r, c) == -D(r, c)))
        throw InvariantError("symmetric and antisymmetric universal matrices disagree");
  FreeComplex F;
  F.ring = *D.ring();
  F.dmin = 0;
  F.ranks = {D.cols(), D.rows()};
  F.d = {D, PolyMatrix(0, D.rows(), D.vars(), D.ring())};
  return jump_ideals(F, 0, k);
}

TangentJumpSpace tangent_jump_space(const LInfinityPair& P, int i, std::optional<int> k) {
  const auto& L = P.algebra.space;
  const auto& V = P.module_space;
  if (!P.algebra.l(1).is_zero() || !P.m(1).is_zero())
    throw HypothesisError("tangent_jump_space needs a cohomology pair (l_1 = m_1 = 0)");
  TangentJumpSpace T;
  T.h = V.dim(i);
  T.ambient = L.dim(1);
  int kk = k.value_or(T.h);
  auto m1 = L.basis_of_degree(1);
  // Rows: entries of the two Hom blocks, columns: H^1 C basis.
  std::vector<Vec> rows;
  for (int j : {i - 1, i}) {
    auto src = V.basis_of_degree(j), dst = V.basis_of_degree(j + 1);
    for (int c : src)
      for (int r : dst) {
        Vec row(m1.size());
        for (size_t x = 0; x < m1.size(); ++x) row[x] = P.m(2).at({m1[x], c})[r];
        rows.push_back(row);
      }
  }
  if (kk < T.h || kk <= 0) {
    T.kind = TangentJumpSpace::Kind::Full;
    for (size_t x = 0; x < m1.size(); ++x) {
      Vec e(m1.size());
      e[x] = 1;
      T.basis.push_back(e);
    }
  } else if (kk > T.h) {
    T.kind = TangentJumpSpace::Kind::Empty;
  } else {
    T.kind = TangentJumpSpace::Kind::Kernel;
    if (rows.empty()) {
      for (size_t x = 0; x < m1.size(); ++x) {
        Vec e(m1.size());
        e[x] = 1;
        T.basis.push_back(e);
      }
    } else {
      T.basis = kernel(Matrix::from_rows(rows, int(m1.size())));
    }
  }
  return T;
}

}  // namespace jl

namespace jl {

namespace {

Json ring_json(const TruncatedLocalRing& R) {
  Json j;
  j["vars"] = R.vars();
  j["order"] = R.order();
  return j;
}

TruncatedLocalRing ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("order"))
    throw ParseError("ring must be {vars, order}");
  int order = j.at("order").get<int>();
  if (order < 1) throw ParseError("ring order must be >= 1");
  return TruncatedLocalRing(j.at("vars").get<std::vector<std::string>>(), order);
}

Json poly_list_json(const std::vector<MultiPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) {
    Json g = poly_json(p);
    g["text"] = p.to_string();
    out.push_back(g);
  }
  return out;
}

}  // namespace

Json mc_json(const MCElement& w) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "mc_element";
  j["ring"] = ring_json(w.ring);
  j["coords"] = poly_list_json(w.coords);
  j["valid"] = w.valid;
  return j;
}

MCElement mc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("coords"))
    throw ParseError("mc element must be {ring, coords}");
  MCElement w{ring_from_json(j.at("ring")), {}, false};
  for (const auto& c : j.at("coords")) {
    Json pj = c;
    if (c.is_array()) {
      pj = Json::object();
      pj["vars"] = w.ring.vars();
      pj["terms"] = c;
    } else if (!pj.contains("vars")) {
      pj["vars"] = w.ring.vars();
    }
    MultiPoly p = poly_from_json(pj);
    if (p.vars() != w.ring.vars()) throw ParseError("mc coordinate variables differ from the ring");
    w.coords.push_back(w.ring.reduce(p));
  }
  return w;
}

Json free_complex_json(const FreeComplex& F) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "free_complex";
  j["ring"] = ring_json(F.ring);
  j["dmin"] = F.dmin;
  j["ranks"] = F.ranks;
  Json ds = Json::array();
  for (const auto& d : F.d) ds.push_back(polymatrix_json(d));
  j["differentials"] = ds;
  return j;
}

FreeComplex free_complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("ranks") || !j.contains("differentials"))
    throw ParseError("free complex must be {ring, ranks, differentials}");
  FreeComplex F;
  F.ring = ring_from_json(j.at("ring"));
  F.dmin = j.value("dmin", 0);
  F.ranks = j.at("ranks").get<std::vector<int>>();
  for (int r : F.ranks)
    if (r < 0) throw ParseError("ranks must be nonnegative");
  const auto& ds = j.at("differentials");
  if (!ds.is_array() || ds.size() > F.ranks.size())
    throw ParseError("differentials: at most one per rank");
  for (size_t n = 0; n < ds.size(); ++n) {
    Json dj = ds[n];
    if (!dj.contains("vars")) dj["vars"] = F.ring.vars();
    dj["order"] = F.ring.order();
    PolyMatrix d = polymatrix_from_json(dj);
    int rows = n + 1 < F.ranks.size() ? F.ranks[n + 1] : 0;
    if (d.rows() != rows || d.cols() != F.ranks[n])
      throw ParseError("differential " + std::to_string(n) + " has the wrong shape");
    if (d.vars() != F.ring.vars()) throw ParseError("differential variables differ from the ring");
    F.d.push_back(d.truncated(F.ring.order()));
  }
  return F;
}

Json jump_ideal_json(const JumpIdeal& J) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "jump_ideal";
  j["i"] = J.i;
  j["k"] = J.k;
  j["vars"] = J.vars;
  if (J.order) j["order"] = *J.order;
  j["unit"] = J.is_unit();
  j["zero"] = J.is_zero();
  j["generators"] = poly_list_json(J.generators);
  return j;
}

Json tangent_json(const TangentJumpSpace& T) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "tangent_jump_space";
  j["case"] = T.kind == TangentJumpSpace::Kind::Full    ? "full"
              : T.kind == TangentJumpSpace::Kind::Empty ? "empty"
                                                        : "kernel";
  j["h"] = T.h;
  j["ambient_dim"] = T.ambient;
  j["dim"] = static_cast<int>(T.basis.size());
  Json b = Json::array();
  for (const auto& v : T.basis) b.push_back(vec_json(v));
  j["basis"] = b;
  return j;
}

}  // namespace jl
