#pragma once

#include <jumploci/exact/json_io.hpp>
#include <jumploci/exact/polymatrix.hpp>
#include <jumploci/linf/structures.hpp>

#include <optional>
#include <string>
#include <vector>

namespace jl {

// omega in L^1 (x) m_A: one coordinate per degree-1 basis vector of L, in
// basis order, each in the maximal ideal of the ring.
struct MCElement {
  TruncatedLocalRing ring;
  std::vector<MultiPoly> coords;
  bool valid = false;
};

// sum_{n >= 1} (1/n!) l_n(omega^n) as coordinates on the L^2 basis. Terms with
// n >= ring order vanish. Throws HypothesisError when omega leaves the
// maximal ideal, or when the structure is a truncation (not exact) and the
// ring order needs arities beyond the cap. Sets omega.valid.
std::vector<MultiPoly> mc_residual(const LInfinityAlgebra& L, MCElement& omega);
std::vector<MultiPoly> mc_residual(const LInfinityPair& P, MCElement& omega);

// Bounded complex of free modules over a truncated ring. d[j] maps degree
// dmin + j to dmin + j + 1 (rows ranks[j+1], cols ranks[j]; the last one maps
// to 0).
struct FreeComplex {
  TruncatedLocalRing ring{0, 1};
  int dmin = 0;
  std::vector<int> ranks;
  std::vector<PolyMatrix> d;

  int rank(int degree) const;
  // d^i : F^i -> F^{i+1}; a zero-size-compatible zero matrix outside the range.
  PolyMatrix differential(int degree) const;
  // Degrees where d^{i+1} d^i != 0.
  std::vector<int> defects() const;
};

// (V (x) A, d_omega) with d_omega(v) = sum_{n >= 0} (1/n!) m_{n+1}(omega^n, v).
// Throws InvariantError if d_omega^2 != 0.
FreeComplex aomoto_complex(const LInfinityPair& P, const MCElement& omega);

struct JumpIdeal {
  std::vector<std::string> vars;
  std::optional<int> order;  // truncation order when over a local ring
  std::vector<MultiPoly> generators;  // normal form; {1} for the unit ideal
  int i = 0, k = 0;

  bool is_unit() const { return generators.size() == 1 && generators[0].is_constant(); }
  bool is_zero() const { return generators.empty(); }
};

// J^i_k = ideal of (rank F^i - k + 1)-minors of d^{i-1} (+) d^i, the block
// diagonal map F^{i-1} (+) F^i -> F^i (+) F^{i+1}. k <= 0 gives the unit
// ideal; the minor conventions give the unit ideal for k > rank F^i.
JumpIdeal jump_ideals(const FreeComplex& F, int i, int k);

// d_univ over K[x_1..x_s]/m^order, s = dim M^1, as a (dim V^1) x (dim V^0)
// matrix with entries sum_{|alpha| = n} x^alpha/alpha! m_{n+1}(e^alpha, v).
PolyMatrix universal_matrix(const LInfinityPair& P, int order);
// Same series built from the symmetric maps phi_n = -dec^{-1}(m_n); on this
// degree support it equals -universal_matrix.
PolyMatrix universal_matrix_symmetric(const LInfinityPair& P, int order);

JumpIdeal universal_jump_ideals(const LInfinityPair& P, int k, int order);

struct TangentJumpSpace {
  enum class Kind { Full, Kernel, Empty };
  Kind kind = Kind::Kernel;
  int h = 0;                 // dim H^i M
  std::vector<Vec> basis;    // in H^1 C coordinates (M^1 basis order)
  int ambient = 0;           // dim H^1 C
};
// Kernel of H^1 C -> Hom(H^{i-1}M, H^i M) (+) Hom(H^i M, H^{i+1} M) induced by
// m_2; kind Full if k < h_i, Empty if k > h_i, Kernel if k = h_i. k
// defaults to h_i.
TangentJumpSpace tangent_jump_space(const LInfinityPair& P, int i, std::optional<int> k = {});

// Bilinear data of a graded module H^. over H^1 for the formal quadratic
// models: cup[a][b] in H^2 of the algebra, action[j][a] the matrix of
// e_a . : H^j -> H^{j+1}.
struct QuadraticData {
  int h1 = 0;
  int h2 = 0;
  std::vector<std::vector<Vec>> cup;
  std::vector<int> dims;  // dims[j] = dim H^j of the module, j >= 0
  std::vector<std::vector<Matrix>> action;  // action[j][a], j = 0..dims.size()-2
};

struct QuadraticModel {
  std::vector<std::string> vars;
  std::vector<MultiPoly> q_equations;    // coordinates of eta ^ eta, zeros dropped
  std::vector<MultiPoly> r_generators;   // Q equations + jump minors, normal form
  int i = 0, k = 0;
};
QuadraticModel quadratic_model(const QuadraticData& data, int i, int k);

Json mc_json(const MCElement& w);
MCElement mc_from_json(const Json& j);
Json free_complex_json(const FreeComplex& F);
FreeComplex free_complex_from_json(const Json& j);
Json jump_ideal_json(const JumpIdeal& J);
Json tangent_json(const TangentJumpSpace& T);
QuadraticData quadratic_data_from_json(const Json& j);
Json quadratic_model_json(const QuadraticModel& q);

}  // namespace jl
