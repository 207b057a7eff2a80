#include <jumploci/linf/signs.hpp>

#include <jumploci/exact/polymatrix.hpp>

#include <stdexcept>

namespace jl {

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees,
                SignVariant variant) {
  if (perm.size() != degrees.size()) throw std::invalid_argument("koszul_sign: length mismatch");
  int n = static_cast<int>(perm.size());
  int parity = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (perm[p] > perm[q]) {
        parity += (degrees[perm[p]] & 1) * (degrees[perm[q]] & 1);
        if (variant == SignVariant::Antisymmetric) parity += 1;
      }
  return parity % 2 ? -1 : 1;
}

int decalage_sign(const std::vector<int>& degrees) {
  int n = static_cast<int>(degrees.size());
  long parity = 0;
  for (int j = 1; j <= n; ++j) parity += long(n - j) * (degrees[j - 1] - 1);
  return (parity % 2 != 0) ? -1 : 1;
}

std::vector<std::vector<int>> unshuffles(int n, int i) {
  std::vector<std::vector<int>> out;
  for (const auto& first : subsets(n, i)) {
    std::vector<int> perm = first;
    std::vector<bool> in(n, false);
    for (int x : first) in[x] = true;
    for (int x = 0; x < n; ++x)
      if (!in[x]) perm.push_back(x);
    out.push_back(std::move(perm));
  }
  return out;
}

}  // namespace jl
