#pragma once

#include <jumploci/exact/polymatrix.hpp>
#include <jumploci/linf/transport.hpp>

#include <string>
#include <vector>

namespace jl {

// Matrix of linear forms: b x a with degree-1 entries in s variables.
using LinearMatrixSpace = PolyMatrix;

struct FormalityResult {
  LInfinityPair pair;  // m_n = 0 on (M^1)^{n-1} (x) V^0 for 3 <= n <= cap
  TaylorFamily iso;    // transport_pair(input, iso, cap) == pair
  std::vector<TaylorFamily> stages;  // stage k has f_1 = id and f_k only
};

// Thrown when the pairing V^0 (x) (V^1)^v -> (M^1)^v induced by m_2 is not
// injective; carries a kernel basis in V^0 (x) (V^1)^v coordinates.
struct PairingNotInjective : std::invalid_argument {
  std::vector<Vec> kernel;
  explicit PairingNotInjective(std::vector<Vec> k)
      : std::invalid_argument("pairing induced by m_2 is not injective"), kernel(std::move(k)) {}
};

// (dim V^1) x (dim V^0) matrix whose (r, c) entry is sum_i x_i * coefficient of
// the r-th V^1 basis vector in m_2(e_i (x) c-th V^0 basis vector), e_i the
// M^1 basis. Default variable names x1..xs.
LinearMatrixSpace petri_matrix(const LInfinityPair& P, std::vector<std::string> vars = {});

// Kills the higher products m_n on (M^1)^{n-1} (x) V^0 one arity at a time:
// stage k lifts m_{k+1} through the surjection M^1 -> Hom(V^0, V^1) given by
// m_2 (section from rref pivots) and transports along f_1 = id, f_k.
FormalityResult partial_formality(const LInfinityPair& P, int arity_cap);

}  // namespace jl
