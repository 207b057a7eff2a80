#include <jumploci/linf/transport.hpp>

#include <functional>
#include <stdexcept>

namespace jl {

namespace {

std::vector<int> block_degrees(const MultilinearMap& m, const std::vector<int>& t) {
  std::vector<int> d;
  for (int p = 0; p < m.block_arity(); ++p) d.push_back(m.source().degree_of(t[p]));
  return d;
}

MultilinearMap resign(const MultilinearMap& m, Symmetry to) {
  MultilinearMap out = MultilinearMap(m.source(), m.target(), m.arity(), m.degree(), to, m.module());
  for (const auto& [t, v] : m.values()) {
    int s = decalage_sign(block_degrees(m, t));
    out.set(t, s > 0 ? v : scale(v, -1));
  }
  return out;
}

void add_to(SymElem& acc, const std::vector<int>& key, const Rational& c) {
  if (c == 0) return;
  auto [it, ins] = acc.try_emplace(key, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

// Sorts a tuple of L[1] basis vectors with the symmetric Koszul sign on
// shifted degrees; 0 when an odd shifted-degree vector repeats.
int sort_sym(const GradedVectorSpace& L, std::vector<int>& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
      int dx = L.degree_of(t[j - 1]) - 1, dy = L.degree_of(t[j]) - 1;
      if ((dx & 1) && (dy & 1)) sign = -sign;
      std::swap(t[j - 1], t[j]);
    }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1] && ((L.degree_of(t[i]) - 1) & 1)) return 0;
  return sign;
}

std::vector<int> shifted_degrees(const GradedVectorSpace& L, const std::vector<int>& t) {
  std::vector<int> d;
  for (int x : t) d.push_back(L.degree_of(x) - 1);
  return d;
}

SymElem single(const Vec& v) {
  SymElem e;
  for (size_t b = 0; b < v.size(); ++b)
    if (v[b] != 0) e[{int(b)}] = v[b];
  return e;
}

Vec apply_sym(const MultilinearMap& g, const SymElem& x) {
  Vec out = g.target().zero();
  for (const auto& [t, c] : x) axpy(out, c, g.at(t));
  return out;
}

SymElem monomial(const std::vector<int>& t) {
  SymElem e;
  e[t] = 1;
  return e;
}

}  // namespace

MultilinearMap decalage(const MultilinearMap& f) {
  if (f.symmetry() != Symmetry::Symmetric) throw std::invalid_argument("decalage expects a symmetric map");
  return resign(f, Symmetry::Antisymmetric);
}

MultilinearMap decalage_inverse(const MultilinearMap& f) {
  if (f.symmetry() != Symmetry::Antisymmetric)
    throw std::invalid_argument("decalage_inverse expects an antisymmetric map");
  return resign(f, Symmetry::Symmetric);
}

TaylorFamily TaylorFamily::identity(const GradedVectorSpace& space, int arity_cap) {
  TaylorFamily f;
  f.space = space;
  f.arity_cap = arity_cap;
  for (int n = 1; n <= arity_cap; ++n) f.maps.push_back(make_operation(space, n, 1 - n));
  for (int i = 0; i < space.total_dim(); ++i) f.f(1).set({i}, space.basis(i));
  return f;
}

Matrix TaylorFamily::linear_part() const {
  int N = space.total_dim();
  Matrix m(N, N);
  for (int j = 0; j < N; ++j) {
    Vec v = f(1).at({j});
    for (int i = 0; i < N; ++i) m(i, j) = v[i];
  }
  return m;
}

SymElem sym_product(const GradedVectorSpace& L, const SymElem& a, const SymElem& b) {
  SymElem out;
  for (const auto& [s, cs] : a)
    for (const auto& [t, ct] : b) {
      std::vector<int> u = s;
      u.insert(u.end(), t.begin(), t.end());
      int sign = sort_sym(L, u);
      if (sign == 0) continue;
      add_to(out, u, sign * cs * ct);
    }
  return out;
}

CoalgebraMorphism::CoalgebraMorphism(const TaylorFamily& f) : space_(f.space) {
  for (const auto& m : f.maps) sym_.push_back(decalage_inverse(m));
}

const SymElem& CoalgebraMorphism::component(int i, const std::vector<int>& a) {
  auto key = std::make_pair(i, a);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  int n = static_cast<int>(a.size());
  SymElem out;
  if (i == 1) {
    if (n > arity_cap()) throw std::out_of_range("component beyond arity cap");
    out = single(sym_[n - 1].at(a));
  } else if (i <= n) {
    auto degs = shifted_degrees(space_, a);
    for (int k = 1; k <= n - i + 1; ++k)
      for (const auto& perm : unshuffles(n, k)) {
        std::vector<int> first, rest;
        for (int p = 0; p < k; ++p) first.push_back(a[perm[p]]);
        for (int p = k; p < n; ++p) rest.push_back(a[perm[p]]);
        SymElem head = single(sym_[k - 1].at(first));
        if (head.empty()) continue;
        SymElem tail = component(i - 1, rest);
        if (tail.empty()) continue;
        int eps = koszul_sign(perm, degs, SignVariant::Symmetric);
        for (const auto& [t, c] : sym_product(space_, head, tail))
          add_to(out, t, Rational(eps) * c / i);
      }
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

SymElem CoalgebraMorphism::component_oneshot(int i, const std::vector<int>& a) const {
  int n = static_cast<int>(a.size());
  SymElem out;
  auto degs = shifted_degrees(space_, a);
  Rational inv_fact = Rational(1) / Rational(factorial(i));
  // Assign each position to one of i ordered nonempty blocks.
  std::vector<int> block(n, 0);
  std::function<void(int)> rec = [&](int p) {
    if (p == n) {
      std::vector<std::vector<int>> blocks(i);
      for (int q = 0; q < n; ++q) blocks[block[q]].push_back(q);
      std::vector<int> perm;
      for (const auto& bl : blocks) {
        if (bl.empty()) return;
        perm.insert(perm.end(), bl.begin(), bl.end());
      }
      int eps = koszul_sign(perm, degs, SignVariant::Symmetric);
      SymElem prod;
      prod[{}] = Rational(eps) * inv_fact;
      for (const auto& bl : blocks) {
        if (static_cast<int>(bl.size()) > arity_cap()) return;
        std::vector<int> t;
        for (int q : bl) t.push_back(a[q]);
        prod = sym_product(space_, prod, single(sym_[bl.size() - 1].at(t)));
        if (prod.empty()) return;
      }
      for (const auto& [t, c] : prod) add_to(out, t, c);
      return;
    }
    for (int b = 0; b < i; ++b) {
      block[p] = b;
      rec(p + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

// (g^{vee n})(b) for a degree-0 linear map g given as a matrix.
SymElem power_apply(const GradedVectorSpace& L, const Matrix& g, const std::vector<int>& b) {
  SymElem acc;
  acc[{}] = 1;
  for (int x : b) acc = sym_product(L, acc, single(g.column(x)));
  return acc;
}

Matrix checked_inverse(const TaylorFamily& f) {
  Matrix m = f.linear_part();
  const auto& L = f.space;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && L.degree_of(i) != L.degree_of(j))
        throw std::invalid_argument("f_1 is not of degree 0");
  try {
    return inverse(m);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("f_1 is not invertible");
  }
}

}  // namespace

LInfinityAlgebra transport_structure(const LInfinityAlgebra& Lalg, const TaylorFamily& f,
                                     int arity_cap) {
  if (arity_cap > Lalg.arity_cap || arity_cap > f.arity_cap)
    throw std::invalid_argument("transport: arity_cap exceeds input caps");
  const auto& L = Lalg.space;
  Matrix ginv = checked_inverse(f);
  CoalgebraMorphism F(f);
  std::vector<MultilinearMap> q;  // symmetric codifferential components of l
  for (int n = 1; n <= arity_cap; ++n) q.push_back(decalage_inverse(Lalg.l(n)).scaled(-1));
  std::vector<MultilinearMap> qp;  // transported
  for (int n = 1; n <= arity_cap; ++n) {
    MultilinearMap qn = make_operation(L, n, 2 - n, Symmetry::Symmetric);
    // X_n(a) = RHS_n(a) - sum_{i<n} q'_i F^i_n(a), then q'_n = X_n o (F^n_n)^{-1}.
    auto X = [&](const std::vector<int>& a) {
      Vec out = L.zero();
      auto degs = shifted_degrees(L, a);
      for (int i = 1; i <= n; ++i) {
        int j = n - i + 1;
        for (const auto& perm : unshuffles(n, i)) {
          std::vector<int> first, rest;
          for (int p = 0; p < i; ++p) first.push_back(a[perm[p]]);
          for (int p = i; p < n; ++p) rest.push_back(a[perm[p]]);
          Vec x = q[i - 1].at(first);
          if (is_zero(x)) continue;
          int eps = koszul_sign(perm, degs, SignVariant::Symmetric);
          SymElem arg = sym_product(L, single(x), monomial(rest));
          axpy(out, eps, apply_sym(F.taylor(j), arg));
        }
      }
      for (int i = 1; i < n; ++i) {
        const SymElem& Fi = F.component(i, a);
        if (!Fi.empty()) axpy(out, -1, apply_sym(qp[i - 1], Fi));
      }
      return out;
    };
    for (const auto& b : canonical_tuples(L, n)) {
      SymElem pre = power_apply(L, ginv, b);
      Vec val = L.zero();
      for (const auto& [s, c] : pre) axpy(val, c, X(s));
      qn.set(b, val);
    }
    qp.push_back(std::move(qn));
  }
  LInfinityAlgebra out = LInfinityAlgebra::zero(L, arity_cap, false);
  for (int n = 1; n <= arity_cap; ++n) out.l(n) = decalage(qp[n - 1]).scaled(-1);
  out.exact = false;
  return out;
}

LInfinityPair transport_pair(const LInfinityPair& P, const TaylorFamily& f, int arity_cap) {
  auto red = reduce_pair(P);
  const auto& S = red.layout.space;
  TaylorFamily k;
  k.space = S;
  k.arity_cap = f.arity_cap;
  for (int n = 1; n <= f.arity_cap; ++n) {
    MultilinearMap kn = make_operation(S, n, 1 - n);
    for (const auto& [t, v] : f.f(n).values()) {
      std::vector<int> st;
      for (int x : t) st.push_back(red.layout.from_first[x]);
      Vec sv = S.zero();
      for (int i = 0; i < P.algebra.space.total_dim(); ++i) sv[red.layout.from_first[i]] = v[i];
      kn.set(st, sv);
    }
    if (n == 1)
      for (int v = 0; v < P.module_space.total_dim(); ++v)
        kn.set({red.layout.from_second[v]}, S.basis(red.layout.from_second[v]));
    k.maps.push_back(std::move(kn));
  }
  auto J = transport_structure(red.algebra, k, arity_cap);
  auto out = split_pair(J, red.layout, P.algebra.space, P.module_space);
  out.exact = out.algebra.exact = false;
  out.verified = out.algebra.verified = false;
  return out;
}

TaylorFamily inverse_family(const TaylorFamily& f) {
  const auto& L = f.space;
  Matrix ginv = checked_inverse(f);
  CoalgebraMorphism F(f);
  std::vector<MultilinearMap> g;  // symmetric
  for (int n = 1; n <= f.arity_cap; ++n) {
    MultilinearMap gn = make_operation(L, n, 1 - n, Symmetry::Symmetric);
    for (const auto& b : canonical_tuples(L, n)) {
      Vec val = L.zero();
      if (n == 1) {
        val = ginv.column(b[0]);
      } else {
        for (const auto& [s, c] : power_apply(L, ginv, b))
          for (int i = 1; i < n; ++i) {
            const SymElem& Fi = F.component(i, s);
            if (!Fi.empty()) axpy(val, -c, apply_sym(g[i - 1], Fi));
          }
      }
      gn.set(b, val);
    }
    g.push_back(std::move(gn));
  }
  TaylorFamily out;
  out.space = L;
  out.arity_cap = f.arity_cap;
  for (auto& m : g) out.maps.push_back(decalage(m));
  return out;
}

TaylorFamily compose(const TaylorFamily& f, const TaylorFamily& g) {
  if (!(f.space == g.space)) throw std::invalid_argument("compose: space mismatch");
  const auto& L = f.space;
  int cap = std::min(f.arity_cap, g.arity_cap);
  CoalgebraMorphism G(g);
  CoalgebraMorphism Fm(f);
  TaylorFamily out;
  out.space = L;
  out.arity_cap = cap;
  for (int n = 1; n <= cap; ++n) {
    MultilinearMap hn = make_operation(L, n, 1 - n, Symmetry::Symmetric);
    for (const auto& a : canonical_tuples(L, n)) {
      Vec val = L.zero();
      for (int i = 1; i <= n; ++i) {
        const SymElem& Gi = G.component(i, a);
        if (!Gi.empty()) axpy(val, 1, apply_sym(Fm.taylor(i), Gi));
      }
      hn.set(a, val);
    }
    out.maps.push_back(decalage(hn));
  }
  return out;
}

}  // namespace jl
