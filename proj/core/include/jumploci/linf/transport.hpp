#pragma once

#include <jumploci/linf/structures.hpp>

#include <map>
#include <vector>

namespace jl {

// Decalage between graded symmetric maps on L[1] and graded antisymmetric
// maps on L: dec(f)(v_1..v_n) = (-1)^{sum_j (n-j)(|v_j|-1)} f(v_1..v_n). For
// module maps the sign runs over the L-block only. Degrees are unshifted on
// both sides, so the stored degree is unchanged.
MultilinearMap decalage(const MultilinearMap& symmetric_map);
MultilinearMap decalage_inverse(const MultilinearMap& antisymmetric_map);

// f_n : L^{(x)n} -> L antisymmetric of degree 1 - n, maps[n-1] = f_n.
struct TaylorFamily {
  GradedVectorSpace space;
  std::vector<MultilinearMap> maps;
  int arity_cap = 5;

  static TaylorFamily identity(const GradedVectorSpace& space, int arity_cap);
  MultilinearMap& f(int n) { return maps.at(n - 1); }
  const MultilinearMap& f(int n) const { return maps.at(n - 1); }
  Matrix linear_part() const;  // f_1 as a matrix
};

// Element of S^k(L[1]) on sorted basis tuples.
using SymElem = std::map<std::vector<int>, Rational>;

SymElem sym_product(const GradedVectorSpace& L, const SymElem& a, const SymElem& b);

// Components F^i_n of the coalgebra morphism with Taylor coefficients
// dec^{-1}(f_n), through the recursion
// F^i_n = (1/i) sum_k sum_{Sh(k,n-k)} eps f_k(..) v F^{i-1}_{n-k}(..).
class CoalgebraMorphism {
 public:
  explicit CoalgebraMorphism(const TaylorFamily& f);
  const SymElem& component(int i, const std::vector<int>& tuple);  // tuple sorted
  // Same component from the one-shot formula over ordered block partitions
  // weighted by 1/i!; used to cross-check the recursion.
  SymElem component_oneshot(int i, const std::vector<int>& tuple) const;
  const MultilinearMap& taylor(int n) const { return sym_.at(n - 1); }
  int arity_cap() const { return static_cast<int>(sym_.size()); }
  const GradedVectorSpace& space() const { return space_; }

 private:
  GradedVectorSpace space_;
  std::vector<MultilinearMap> sym_;
  std::map<std::pair<int, std::vector<int>>, SymElem> memo_;
};

// The unique structure l' making f an isomorphism (L, l) -> (L, l'), exact up
// to arity_cap.
LInfinityAlgebra transport_structure(const LInfinityAlgebra& L, const TaylorFamily& f,
                                     int arity_cap);
// Pair version through the L (+) V reduction with module morphism g = id.
LInfinityPair transport_pair(const LInfinityPair& P, const TaylorFamily& f, int arity_cap);

// Inverse morphism: G^1_1 = (F^1_1)^{-1}, G^1_n = -(sum_{i<n} G^1_i F^i_n)(F^n_n)^{-1}.
TaylorFamily inverse_family(const TaylorFamily& f);
// Taylor coefficients of f o g (g applied first).
TaylorFamily compose(const TaylorFamily& f, const TaylorFamily& g);

}  // namespace jl
