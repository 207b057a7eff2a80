#include <jumploci/linf/formality.hpp>

#include <jumploci/linf/checker.hpp>

#include <stdexcept>

namespace jl {

namespace {

void require_degrees_01(const GradedVectorSpace& S, const char* what) {
  for (int i = 0; i < S.total_dim(); ++i)
    if (S.degree_of(i) != 0 && S.degree_of(i) != 1)
      throw std::invalid_argument(std::string(what) + " must be concentrated in degrees 0 and 1");
}

// Rows indexed by (r, c) -> r * dim V^0 + c, columns by the M^1 basis.
Matrix pairing_matrix(const LInfinityPair& P) {
  const auto& L = P.algebra.space;
  const auto& V = P.module_space;
  auto m1 = L.basis_of_degree(1);
  auto v0 = V.basis_of_degree(0);
  auto v1 = V.basis_of_degree(1);
  Matrix A(int(v1.size() * v0.size()), int(m1.size()));
  for (size_t i = 0; i < m1.size(); ++i)
    for (size_t c = 0; c < v0.size(); ++c) {
      Vec val = P.m(2).at({m1[i], v0[c]});
      for (size_t r = 0; r < v1.size(); ++r) A(int(r * v0.size() + c), int(i)) = val[v1[r]];
    }
  return A;
}

Vec higher_component(const LInfinityPair& P, int n, const std::vector<int>& t) {
  const auto& V = P.module_space;
  auto v0 = V.basis_of_degree(0);
  auto v1 = V.basis_of_degree(1);
  Vec y(v1.size() * v0.size());
  for (size_t c = 0; c < v0.size(); ++c) {
    auto tuple = t;
    tuple.push_back(v0[c]);
    Vec val = P.m(n).at(tuple);
    for (size_t r = 0; r < v1.size(); ++r) y[r * v0.size() + c] = val[v1[r]];
  }
  return y;
}

}  // namespace

LinearMatrixSpace petri_matrix(const LInfinityPair& P, std::vector<std::string> vars) {
  const auto& L = P.algebra.space;
  const auto& V = P.module_space;
  int s = L.dim(1);
  if (vars.empty()) vars = indexed_names("x", s);
  if (static_cast<int>(vars.size()) != s)
    throw std::invalid_argument("petri_matrix: need one variable per M^1 basis vector");
  int a = V.dim(0), b = V.dim(1);
  Matrix A = pairing_matrix(P);
  LinearMatrixSpace out(b, a, vars);
  for (int r = 0; r < b; ++r)
    for (int c = 0; c < a; ++c) {
      MultiPoly e(vars);
      for (int i = 0; i < s; ++i) {
        Exponent ex(s, 0);
        ex[i] = 1;
        e.add_term(ex, A(r * a + c, i));
      }
      out.set(r, c, e);
    }
  return out;
}

FormalityResult partial_formality(const LInfinityPair& P, int arity_cap) {
  if (arity_cap > P.arity_cap) throw std::invalid_argument("partial_formality: arity_cap too large");
  const auto& L = P.algebra.space;
  const auto& V = P.module_space;
  require_degrees_01(L, "M");
  require_degrees_01(V, "V");
  if (!P.algebra.l(1).is_zero() || !P.m(1).is_zero())
    throw std::invalid_argument("partial_formality: l_1 and m_1 must vanish");
  Matrix A = pairing_matrix(P);
  auto rr = rref(A);
  if (rr.rank < A.rows()) throw PairingNotInjective(kernel(A.transpose()));
  // Section of A: invert the pivot columns.
  std::vector<int> rows(A.rows());
  for (int i = 0; i < A.rows(); ++i) rows[i] = i;
  Matrix section = inverse(A.submatrix(rows, rr.pivots));
  auto m1 = L.basis_of_degree(1);

  FormalityResult out;
  out.pair = P;
  out.pair.algebra.ops.resize(arity_cap);
  out.pair.module_ops.resize(arity_cap);
  out.pair.arity_cap = out.pair.algebra.arity_cap = arity_cap;
  out.iso = TaylorFamily::identity(L, arity_cap);
  for (int k = 2; k < arity_cap; ++k) {
    TaylorFamily f = TaylorFamily::identity(L, arity_cap);
    bool nonzero = false;
    for (const auto& t : canonical_tuples(L, k)) {
      bool in_m1 = true;
      for (int x : t) in_m1 = in_m1 && L.degree_of(x) == 1;
      if (!in_m1) continue;
      Vec y = higher_component(out.pair, k + 1, t);
      if (is_zero(y)) continue;
      Vec coords = section.apply(y);
      Vec fk = L.zero();
      for (size_t p = 0; p < rr.pivots.size(); ++p) fk[m1[rr.pivots[p]]] = coords[p];
      f.f(k).set(t, fk);
      nonzero = true;
    }
    out.stages.push_back(f);
    if (!nonzero) continue;
    out.pair = transport_pair(out.pair, f, arity_cap);
    out.iso = compose(f, out.iso);
    for (const auto& t : canonical_tuples(L, k)) {
      bool in_m1 = true;
      for (int x : t) in_m1 = in_m1 && L.degree_of(x) == 1;
      if (in_m1 && !is_zero(higher_component(out.pair, k + 1, t)))
        throw std::logic_error("partial_formality: stage " + std::to_string(k) +
                               " left m_" + std::to_string(k + 1) + " nonzero");
    }
  }
  bool ok = check_module(out.pair, arity_cap).empty() && check_algebra(out.pair.algebra, arity_cap).empty();
  if (P.verified && !ok) throw std::logic_error("partial_formality: output fails the axioms");
  out.pair.verified = out.pair.algebra.verified = ok;
  return out;
}

}  // namespace jl
