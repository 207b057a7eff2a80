#pragma once

#include <jumploci/linf/structures.hpp>
#include <jumploci/linf/transport.hpp>

#include <random>

namespace jl::samples {

Rational small_rational(std::mt19937& rng, int range = 3, bool nonzero = false);
Matrix random_invertible(std::mt19937& rng, int n);

// Degree-preserving change of basis x -> g x applied to every operation.
LInfinityAlgebra conjugate(const LInfinityAlgebra& L, const std::vector<Matrix>& per_degree);

// Random dgla in degrees 0..2, total dim <= 6: an optional degree-0 vector h
// acting by integer weights, a weight-compatible symmetric bracket
// L^1 x L^1 -> L^2 and a weight-preserving d : L^1 -> L^2, followed by a
// random change of basis. Jacobi and Leibniz hold because L^3 = 0.
LInfinityAlgebra random_dgla(std::mt19937& rng, int arity_cap = 5, bool with_degree0 = true);

// sl_2 (x) K[e]/(e^2) with differential ad(x (x) e) for random x.
LInfinityAlgebra sl2_dual_numbers(std::mt19937& rng, int arity_cap = 5);

// Dgl pair over a random_dgla-type algebra with V in degrees 0, 1: L^1 acts
// V^0 -> V^1, h by weights, random equivariant m_1. Checked by check_module.
LInfinityPair random_dgl_pair(std::mt19937& rng, int arity_cap = 5);

// Admissible input for partial formality: M = M^1 (dim s), V^0, V^1 with
// surjective m_2 : M^1 -> Hom(V^0, V^1) and random higher m_n on
// (M^1)^{n-1} (x) V^0 -> V^1, l = 0.
LInfinityPair random_admissible_pair(std::mt19937& rng, int arity_cap = 5);

// Graded commutative dg algebra given by its full product table on basis
// indices and its differential (global matrix).
struct Cdga {
  GradedVectorSpace space;
  std::vector<std::vector<Vec>> product;  // product[a][b]
  Matrix d;
};
// Heisenberg cdga: Lambda(x, y, z) with x, y, z in degree 1 and dz = xy.
Cdga heisenberg_cdga();

// Lie algebra in degree 0 by structure constants bracket[i][j].
struct LieAlgebra {
  int dim = 0;
  std::vector<std::vector<Vec>> bracket;
};
LieAlgebra sl2();
LieAlgebra two_dim_nonabelian();  // [p, q] = q

// g (x) A with [g (x) a, g' (x) b] = [g, g'] (x) ab and d(g (x) a) = g (x) da.
// Basis in degree k: (A-basis index within degree) * dim g + g-index.
LInfinityAlgebra tensor_dgla(const LieAlgebra& g, const Cdga& A, int arity_cap = 5);

// Random f_n of degree 1 - n on canonical tuples (density about 1/2); f_1 is
// the identity or a random degree-0 automorphism.
TaylorFamily random_taylor(std::mt19937& rng, const GradedVectorSpace& S, int arity_cap,
                           bool f1_identity);

}  // namespace jl::samples
