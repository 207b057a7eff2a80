#include <jumploci/linf/retract.hpp>

#include <stdexcept>

namespace jl {

Complex underlying_complex(const LInfinityAlgebra& L) {
  Complex C{L.space, Matrix(L.space.total_dim(), L.space.total_dim())};
  for (int j = 0; j < L.space.total_dim(); ++j) {
    Vec v = L.l(1).at({j});
    for (int i = 0; i < L.space.total_dim(); ++i) C.d(i, j) = v[i];
  }
  return C;
}

Complex module_complex(const LInfinityPair& P) {
  const auto& V = P.module_space;
  Complex C{V, Matrix(V.total_dim(), V.total_dim())};
  for (int j = 0; j < V.total_dim(); ++j) {
    Vec v = P.m(1).at({j});
    for (int i = 0; i < V.total_dim(); ++i) C.d(i, j) = v[i];
  }
  return C;
}

namespace {

// Extend `basis` (columns, local coordinates) greedily by candidates that
// raise the rank; returns the added candidates.
std::vector<Vec> greedy_extend(std::vector<Vec> basis, const std::vector<Vec>& candidates, int dim) {
  std::vector<Vec> added;
  int r = basis.empty() ? 0 : rank(Matrix::from_columns(basis, dim));
  for (const auto& c : candidates) {
    basis.push_back(c);
    int r2 = rank(Matrix::from_columns(basis, dim));
    if (r2 > r) {
      added.push_back(c);
      r = r2;
    } else {
      basis.pop_back();
    }
  }
  return added;
}

}  // namespace

HomotopyRetract build_retract(const Complex& C) {
  const auto& S = C.space;
  int N = S.total_dim();
  if (C.d.rows() != N || C.d.cols() != N) throw std::invalid_argument("differential has wrong size");
  if (!(C.d * C.d).is_zero()) throw std::domain_error("d^2 != 0");
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (C.d(i, j) != 0 && S.degree_of(i) != S.degree_of(j) + 1)
        throw std::domain_error("differential is not of degree +1");

  int lo = S.dmin(), hi = S.dmax();
  auto local_d = [&](int deg) {  // C^deg -> C^{deg+1}
    auto rows = S.basis_of_degree(deg + 1), cols = S.basis_of_degree(deg);
    return C.d.submatrix(rows, cols);
  };
  std::map<int, std::vector<Vec>> Lsp, Bsp, Hsp;  // local coordinates
  for (int deg = lo; deg <= hi; ++deg) {
    int n = S.dim(deg);
    Matrix dd = local_d(deg);
    auto Z = kernel(dd);
    std::vector<Vec> std_basis;
    for (int k = 0; k < n; ++k) {
      Vec e(n);
      e[k] = 1;
      std_basis.push_back(e);
    }
    Lsp[deg] = greedy_extend(Z, std_basis, n);
    for (const auto& l : Lsp[deg]) Bsp[deg + 1].push_back(dd.apply(l));
  }
  std::vector<std::vector<std::string>> hlabels;
  for (int deg = lo; deg <= hi; ++deg) {
    int n = S.dim(deg);
    auto Z = kernel(local_d(deg));
    Hsp[deg] = greedy_extend(Bsp[deg], Z, n);
    std::vector<std::string> l;
    for (size_t k = 0; k < Hsp[deg].size(); ++k)
      l.push_back("h" + std::to_string(deg) + "_" + std::to_string(k + 1));
    hlabels.push_back(std::move(l));
  }
  HomotopyRetract R;
  R.complex = C;
  R.cohomology = GradedVectorSpace(lo, hlabels);
  const auto& H = R.cohomology;
  R.iota = Matrix(N, H.total_dim());
  R.p = Matrix(H.total_dim(), N);
  R.h = Matrix(N, N);
  for (int deg = lo; deg <= hi; ++deg) {
    int n = S.dim(deg);
    if (n == 0) continue;
    auto cidx = S.basis_of_degree(deg);
    auto hidx = H.basis_of_degree(deg);
    const auto& B = Bsp[deg];
    const auto& Hs = Hsp[deg];
    const auto& Ls = Lsp[deg];
    std::vector<Vec> cols;
    cols.insert(cols.end(), B.begin(), B.end());
    cols.insert(cols.end(), Hs.begin(), Hs.end());
    cols.insert(cols.end(), Ls.begin(), Ls.end());
    if (static_cast<int>(cols.size()) != n) throw std::logic_error("splitting is not a basis");
    Matrix Tinv = inverse(Matrix::from_columns(cols, n));
    for (size_t k = 0; k < Hs.size(); ++k)
      for (int r = 0; r < n; ++r) R.iota(cidx[r], hidx[k]) = Hs[k][r];
    for (size_t k = 0; k < Hs.size(); ++k)
      for (int c = 0; c < n; ++c) R.p(hidx[k], cidx[c]) = Tinv(int(B.size() + k), c);
    // h(b_k) = l_k where b_k = d(l_k), l_k in L^{deg-1}.
    const auto& Lprev = Lsp[deg - 1];
    auto pidx = S.basis_of_degree(deg - 1);
    for (size_t k = 0; k < B.size(); ++k)
      for (int r = 0; r < static_cast<int>(pidx.size()); ++r) {
        if (Lprev[k][r] == 0) continue;
        for (int c = 0; c < n; ++c) R.h(pidx[r], cidx[c]) += Lprev[k][r] * Tinv(int(k), c);
      }
  }
  auto bad = R.violations();
  if (!bad.empty()) throw std::logic_error("retract construction failed: " + bad.front());
  return R;
}

std::vector<std::string> HomotopyRetract::violations() const {
  std::vector<std::string> bad;
  const auto& d = complex.d;
  int N = complex.space.total_dim();
  int nh = cohomology.total_dim();
  if (!(d * d).is_zero()) bad.push_back("d d = 0");
  if (!(p * iota == Matrix::identity(nh))) bad.push_back("p iota = id");
  if (!(Matrix::identity(N) - iota * p == d * h + h * d)) bad.push_back("id - iota p = d h + h d");
  if (!(d * iota).is_zero()) bad.push_back("iota is a chain map");
  if (!(p * d).is_zero()) bad.push_back("p is a chain map");
  if (!(h * h).is_zero()) bad.push_back("h h = 0");
  if (!(h * iota).is_zero()) bad.push_back("h iota = 0");
  if (!(p * h).is_zero()) bad.push_back("p h = 0");
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j)
      if (h(i, j) != 0 && complex.space.degree_of(i) + 1 != complex.space.degree_of(j))
        bad.push_back("h has degree -1");
    for (int k = 0; k < nh; ++k) {
      if (iota(i, k) != 0 && complex.space.degree_of(i) != cohomology.degree_of(k))
        bad.push_back("iota has degree 0");
      if (p(k, i) != 0 && complex.space.degree_of(i) != cohomology.degree_of(k))
        bad.push_back("p has degree 0");
    }
  }
  return bad;
}

HomotopyRetract sum_retract(const HomotopyRetract& a, const HomotopyRetract& b,
                            const DirectSum& cl, const DirectSum& hl) {
  HomotopyRetract R;
  int N = cl.space.total_dim(), nh = hl.space.total_dim();
  R.complex.space = cl.space;
  R.complex.d = Matrix(N, N);
  R.cohomology = hl.space;
  R.iota = Matrix(N, nh);
  R.p = Matrix(nh, N);
  R.h = Matrix(N, N);
  auto place = [&](const HomotopyRetract& r, const std::vector<int>& cmap,
                   const std::vector<int>& hmap) {
    int n = r.complex.space.total_dim(), m = r.cohomology.total_dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        R.complex.d(cmap[i], cmap[j]) = r.complex.d(i, j);
        R.h(cmap[i], cmap[j]) = r.h(i, j);
      }
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < m; ++k) {
        R.iota(cmap[i], hmap[k]) = r.iota(i, k);
        R.p(hmap[k], cmap[i]) = r.p(k, i);
      }
  };
  place(a, cl.from_first, hl.from_first);
  place(b, cl.from_second, hl.from_second);
  return R;
}

}  // namespace jl
