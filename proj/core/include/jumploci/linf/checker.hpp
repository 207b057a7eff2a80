#pragma once

#include <jumploci/linf/structures.hpp>

#include <vector>

namespace jl {

struct Residual {
  int arity;
  std::vector<int> tuple;
  Vec value;
};

// Generalized Jacobi residual
//   sum_{(i,j,sigma)} chi(sigma) (-1)^{j-1} l_j(l_i(a_s(1..i)), a_s(i+1..n))
// on every canonical basis tuple of length n <= n_max. Empty iff the axioms
// hold up to n_max.
std::vector<Residual> check_algebra(const LInfinityAlgebra& L, int n_max);

// Module axioms through the L (+) V reduction. Tuples in the result are
// indices of the direct sum.
std::vector<Residual> check_module(const LInfinityPair& P, int n_max);

}  // namespace jl
