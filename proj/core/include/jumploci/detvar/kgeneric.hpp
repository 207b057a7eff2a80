#pragma once

#include <jumploci/exact/matrix.hpp>
#include <jumploci/exact/polymatrix.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jl {

// b x a matrix of linear forms.
using LinearMatrixSpace = PolyMatrix;

enum class Verdict { True, False, Unknown };
std::string to_string(Verdict v);

struct KGenericResult {
  Verdict verdict = Verdict::Unknown;
  int perp_dim = 0;
  std::string method;       // how the verdict was reached
  std::string certificate;  // for True
  std::optional<Matrix> witness;            // a x b perp element of rank <= k (False)
  std::optional<MultiPoly> pencil_gcd;      // False via an irrational pencil root
};

struct KGenericOptions {
  int trials = 200;
  std::uint32_t seed = 1;
};

// N^perp inside a x b matrices under tr(phi psi), as a list of a x b matrices.
std::vector<Matrix> trace_perp(const LinearMatrixSpace& A);
// Entries homogeneous linear with equal antidiagonals spanning independent forms.
bool is_hankel_space(const LinearMatrixSpace& A);
KGenericResult is_k_generic(const LinearMatrixSpace& A, int k, const KGenericOptions& opt = {});

}  // namespace jl
