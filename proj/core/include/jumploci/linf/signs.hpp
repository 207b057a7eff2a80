#pragma once

#include <vector>

namespace jl {

enum class SignVariant { Symmetric, Antisymmetric };

// perm[p] = original position of the element placed at position p, so that
// v_1 ... v_n = sign * v_{perm[0]} ... v_{perm[n-1]}. Symmetric gives the
// Koszul sign epsilon; Antisymmetric gives chi = sign(perm) * epsilon.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees,
                SignVariant variant);

// Decalage sign (-1)^e with e = sum_j (n - j)(|v_j| - 1), j 1-based.
int decalage_sign(const std::vector<int>& degrees);

// All unshuffles of {0..n-1} with first block of size i: each entry lists the
// positions of the first block followed by those of the second, both
// increasing.
std::vector<std::vector<int>> unshuffles(int n, int i);

}  // namespace jl
