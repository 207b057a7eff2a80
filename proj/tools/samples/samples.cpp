#include "samples.hpp"

#include <jumploci/linf/checker.hpp>

#include <stdexcept>

namespace jl::samples {

Rational small_rational(std::mt19937& rng, int range, bool nonzero) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 2);
  for (;;) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

Matrix random_invertible(std::mt19937& rng, int n) {
  for (;;) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = small_rational(rng, 2);
    if (rank(m) == n) return m;
  }
}

LInfinityAlgebra conjugate(const LInfinityAlgebra& L, const std::vector<Matrix>& per_degree) {
  const auto& S = L.space;
  int N = S.total_dim();
  Matrix g(N, N);
  for (int d = S.dmin(); d <= S.dmax(); ++d) {
    const Matrix& b = per_degree.at(d - S.dmin());
    int off = S.offset(d);
    for (int i = 0; i < S.dim(d); ++i)
      for (int j = 0; j < S.dim(d); ++j) g(off + i, off + j) = b(i, j);
  }
  Matrix ginv = inverse(g);
  LInfinityAlgebra out = LInfinityAlgebra::zero(S, L.arity_cap, L.exact);
  for (int n = 1; n <= L.arity_cap; ++n) {
    if (L.l(n).is_zero()) continue;
    for (const auto& t : canonical_tuples(S, n)) {
      std::vector<Vec> args;
      for (int x : t) args.push_back(ginv.column(x));
      out.l(n).set(t, g.apply(L.l(n).apply(args)));
    }
  }
  return out;
}

namespace {

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct WeightedSpace {
  GradedVectorSpace space;
  std::vector<int> weight;  // per basis vector; the degree-0 vector h has weight 0
};

}  // namespace

LInfinityAlgebra random_dgla(std::mt19937& rng, int arity_cap, bool with_degree0) {
  int d0 = with_degree0 ? pick(rng, 0, 1) : 0;
  int d1 = pick(rng, 1, 3);
  int d2 = pick(rng, 1, std::min(2, 6 - d0 - d1));
  GradedVectorSpace S(0, {d0, d1, d2});
  std::vector<int> w(S.total_dim(), 0);
  if (d0)
    for (int i = 1; i < S.total_dim(); ++i) w[i] = pick(rng, -1, 1);
  LInfinityAlgebra L = LInfinityAlgebra::zero(S, arity_cap, true);
  auto one = S.basis_of_degree(1), two = S.basis_of_degree(2);
  if (d0) {
    int h = S.basis_of_degree(0)[0];
    for (int x = 1; x < S.total_dim(); ++x)
      if (w[x]) L.l(2).set({h, x}, scale(S.basis(x), w[x]));
  }
  for (size_t i = 0; i < one.size(); ++i)
    for (size_t j = i; j < one.size(); ++j) {
      Vec v = S.zero();
      for (int z : two)
        if (w[z] == w[one[i]] + w[one[j]] && pick(rng, 0, 2)) v[z] = small_rational(rng);
      L.l(2).set({one[i], one[j]}, v);
    }
  for (int x : one) {
    Vec v = S.zero();
    for (int z : two)
      if (w[z] == w[x] && pick(rng, 0, 1)) v[z] = small_rational(rng);
    L.l(1).set({x}, v);
  }
  // Basis change within weight-homogeneous pieces keeps h diagonal only if it
  // commutes with the weights; a general change is fine since the result is
  // an isomorphic dgla.
  std::vector<Matrix> g;
  for (int d : {0, 1, 2}) g.push_back(random_invertible(rng, S.dim(d)));
  L = conjugate(L, g);
  if (!check_algebra(L, 3).empty()) throw std::logic_error("random_dgla produced an invalid dgla");
  L.verified = true;
  return L;
}

LInfinityAlgebra sl2_dual_numbers(std::mt19937& rng, int arity_cap) {
  // Basis: e, f, h in degree 0 and e', f', h' = (.) (x) e in degree 1.
  GradedVectorSpace S(0, {3, 3});
  LInfinityAlgebra L = LInfinityAlgebra::zero(S, arity_cap, true);
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h on indices e=0, f=1, h=2.
  Rational c[3][3][3] = {};
  c[2][0][0] = 2;
  c[0][2][0] = -2;
  c[2][1][1] = -2;
  c[1][2][1] = 2;
  c[0][1][2] = 1;
  c[1][0][2] = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec v0 = S.zero(), v1 = S.zero();
      for (int k = 0; k < 3; ++k) {
        v0[k] = c[i][j][k];
        v1[3 + k] = c[i][j][k];
      }
      if (i < j) L.l(2).set({i, j}, v0);
      L.l(2).set({i, 3 + j}, v1);
    }
  Vec x(3);
  for (auto& q : x) q = small_rational(rng);
  // d(y) = [x (x) e, y] = -[y, x] (x) e for y in degree 0.
  for (int j = 0; j < 3; ++j) {
    Vec v = S.zero();
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) v[3 + k] -= c[j][i][k] * x[i];
    L.l(1).set({j}, v);
  }
  if (!check_algebra(L, 3).empty()) throw std::logic_error("sl2_dual_numbers is not a dgla");
  L.verified = true;
  return L;
}

LInfinityPair random_dgl_pair(std::mt19937& rng, int arity_cap) {
  for (;;) {
    LInfinityAlgebra L = random_dgla(rng, arity_cap, false);
    const auto& S = L.space;
    int v0 = pick(rng, 1, 2), v1 = pick(rng, 1, 2);
    GradedVectorSpace V(0, {v0, v1});
    LInfinityPair P = LInfinityPair::zero(S, V, arity_cap, true);
    P.algebra = L;
    for (int x : S.basis_of_degree(1))
      for (int a : V.basis_of_degree(0)) {
        Vec v = V.zero();
        for (int b : V.basis_of_degree(1))
          if (pick(rng, 0, 2)) v[b] = small_rational(rng);
        P.m(2).set({x, a}, v);
      }
    for (int a : V.basis_of_degree(0)) {
      Vec v = V.zero();
      for (int b : V.basis_of_degree(1))
        if (pick(rng, 0, 1)) v[b] = small_rational(rng);
      P.m(1).set({a}, v);
    }
    P.verified = true;
    if (check_module(P, 3).empty()) return P;
  }
}

LInfinityPair random_admissible_pair(std::mt19937& rng, int arity_cap) {
  for (;;) {
    int a = pick(rng, 1, 2), b = pick(rng, 1, 2);
    int s = std::min(4, a * b + pick(rng, 0, 1));
    GradedVectorSpace M(1, std::vector<int>{s});
    GradedVectorSpace V(0, {a, b});
    LInfinityPair P = LInfinityPair::zero(M, V, arity_cap, true);
    for (int n = 2; n <= arity_cap; ++n) {
      if (n > 2 && pick(rng, 0, 3) == 0) continue;
      for (const auto& t : canonical_tuples(M, n - 1))
        for (int c : V.basis_of_degree(0)) {
          Vec v = V.zero();
          for (int r : V.basis_of_degree(1))
            if (n == 2 || pick(rng, 0, 1)) v[r] = small_rational(rng);
          auto tuple = t;
          tuple.push_back(c);
          P.m(n).set(tuple, v);
        }
    }
    // Surjectivity of m_2 onto Hom(V^0, V^1).
    Matrix A(a * b, s);
    for (int i = 0; i < s; ++i)
      for (int c = 0; c < a; ++c) {
        Vec v = P.m(2).at({i, c});
        for (int r = 0; r < b; ++r) A(r * a + c, i) = v[a + r];
      }
    if (rank(A) < a * b) continue;
    P.verified = check_module(P, arity_cap).empty();
    if (!P.verified) throw std::logic_error("admissible pair violates the axioms");
    return P;
  }
}

Cdga heisenberg_cdga() {
  // Basis: 1 | x y z | xy xz yz | xyz.
  Cdga A;
  A.space = GradedVectorSpace(0, {1, 3, 3, 1});
  int N = 8;
  std::vector<std::vector<int>> mono = {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  A.product.assign(N, std::vector<Vec>(N, Vec(N)));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<int> m = mono[a];
      m.insert(m.end(), mono[b].begin(), mono[b].end());
      int sign = 1;
      bool repeat = false;
      for (size_t i = 1; i < m.size(); ++i)
        for (size_t j = i; j > 0 && m[j - 1] >= m[j]; --j) {
          if (m[j - 1] == m[j]) repeat = true;
          std::swap(m[j - 1], m[j]);
          sign = -sign;
        }
      if (repeat) continue;
      for (int r = 0; r < N; ++r)
        if (mono[r] == m) A.product[a][b][r] = sign;
    }
  // dz = xy; d(xz) = -x dz = 0 and d(yz) = -y dz = 0.
  A.d = Matrix(N, N);
  A.d(4, 3) = 1;
  return A;
}

LieAlgebra sl2() {
  LieAlgebra g;
  g.dim = 3;
  g.bracket.assign(3, std::vector<Vec>(3, Vec(3)));
  // e = 0, f = 1, h = 2
  g.bracket[2][0][0] = 2;
  g.bracket[0][2][0] = -2;
  g.bracket[2][1][1] = -2;
  g.bracket[1][2][1] = 2;
  g.bracket[0][1][2] = 1;
  g.bracket[1][0][2] = -1;
  return g;
}

LieAlgebra two_dim_nonabelian() {
  LieAlgebra g;
  g.dim = 2;
  g.bracket.assign(2, std::vector<Vec>(2, Vec(2)));
  g.bracket[0][1][1] = 1;
  g.bracket[1][0][1] = -1;
  return g;
}

LInfinityAlgebra tensor_dgla(const LieAlgebra& g, const Cdga& A, int arity_cap) {
  const auto& SA = A.space;
  std::vector<int> dims;
  for (int d = SA.dmin(); d <= SA.dmax(); ++d) dims.push_back(SA.dim(d) * g.dim);
  GradedVectorSpace S(SA.dmin(), dims);
  auto index = [&](int i, int a) {
    int d = SA.degree_of(a);
    return S.offset(d) + (a - SA.offset(d)) * g.dim + i;
  };
  LInfinityAlgebra L = LInfinityAlgebra::zero(S, arity_cap, true);
  int NA = SA.total_dim();
  for (int a = 0; a < NA; ++a)
    for (int i = 0; i < g.dim; ++i) {
      Vec dv = S.zero();
      for (int r = 0; r < NA; ++r)
        if (A.d(r, a) != 0) dv[index(i, r)] = A.d(r, a);
      L.l(1).set({index(i, a)}, dv);
      for (int b = 0; b < NA; ++b)
        for (int j = 0; j < g.dim; ++j) {
          int x = index(i, a), y = index(j, b);
          if (x > y || (x == y && !(SA.degree_of(a) & 1))) continue;
          Vec v = S.zero();
          for (int r = 0; r < NA; ++r) {
            if (A.product[a][b][r] == 0) continue;
            for (int k = 0; k < g.dim; ++k)
              if (g.bracket[i][j][k] != 0) v[index(k, r)] += A.product[a][b][r] * g.bracket[i][j][k];
          }
          L.l(2).set({x, y}, v);
        }
    }
  if (!check_algebra(L, 3).empty()) throw std::logic_error("tensor_dgla is not a dgla");
  L.verified = true;
  return L;
}

TaylorFamily random_taylor(std::mt19937& rng, const GradedVectorSpace& S, int arity_cap,
                           bool f1_identity) {
  TaylorFamily f = TaylorFamily::identity(S, arity_cap);
  if (!f1_identity)
    for (int d = S.dmin(); d <= S.dmax(); ++d) {
      Matrix g = random_invertible(rng, S.dim(d));
      for (int j = 0; j < S.dim(d); ++j) {
        Vec v = S.zero();
        for (int i = 0; i < S.dim(d); ++i) v[S.offset(d) + i] = g(i, j);
        f.f(1).set({S.offset(d) + j}, v);
      }
    }
  for (int n = 2; n <= arity_cap; ++n)
    for (const auto& t : canonical_tuples(S, n)) {
      int deg = 1 - n;
      for (int x : t) deg += S.degree_of(x);
      Vec v = S.zero();
      for (int b : S.basis_of_degree(deg))
        if (pick(rng, 0, 1)) v[b] = small_rational(rng);
      f.f(n).set(t, v);
    }
  return f;
}

}  // namespace jl::samples
