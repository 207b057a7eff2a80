#include <jumploci/linf/checker.hpp>

#include <map>
#include <stdexcept>

namespace jl {

std::vector<Residual> check_algebra(const LInfinityAlgebra& L, int n_max) {
  if (n_max > L.arity_cap) throw std::invalid_argument("n_max exceeds arity_cap");
  const auto& S = L.space;
  std::vector<Residual> out;
  std::map<std::vector<int>, Vec> inner;  // l_i on sorted sub-tuples
  auto inner_value = [&](const std::vector<int>& sub) -> const Vec& {
    auto it = inner.find(sub);
    if (it != inner.end()) return it->second;
    return inner.emplace(sub, L.l(static_cast<int>(sub.size())).at(sub)).first->second;
  };
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& a : canonical_tuples(S, n)) {
      std::vector<int> degs;
      for (int x : a) degs.push_back(S.degree_of(x));
      Vec R = S.zero();
      for (int i = 1; i <= n; ++i) {
        int j = n + 1 - i;
        const auto& lj = L.l(j);
        if (lj.is_zero() || L.l(i).is_zero()) continue;
        for (const auto& perm : unshuffles(n, i)) {
          std::vector<int> first(perm.begin(), perm.begin() + i);
          for (auto& p : first) p = a[p];
          const Vec& x = inner_value(first);
          if (is_zero(x)) continue;
          int sign = koszul_sign(perm, degs, SignVariant::Antisymmetric);
          if ((j - 1) % 2) sign = -sign;
          std::vector<int> t(j);
          for (int q = i; q < n; ++q) t[q - i + 1] = a[perm[q]];
          for (int b = 0; b < S.total_dim(); ++b) {
            if (x[b] == 0) continue;
            t[0] = b;
            Vec y = lj.at(t);
            axpy(R, sign * x[b], y);
          }
        }
      }
      if (!is_zero(R)) out.push_back({n, a, R});
    }
  }
  return out;
}

std::vector<Residual> check_module(const LInfinityPair& P, int n_max) {
  if (n_max > P.arity_cap) throw std::invalid_argument("n_max exceeds arity_cap");
  auto R = reduce_pair(P);
  return check_algebra(R.algebra, n_max);
}

}  // namespace jl
