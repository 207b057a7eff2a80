#pragma once

#include <jumploci/linf/retract.hpp>
#include <jumploci/linf/trees.hpp>

namespace jl {

// Planar tree operation p T(iota v_1, ..., iota v_n) on an ordered tuple of
// cohomology basis vectors: leaves iota, vertices the bracket, internal
// edges h, root p. Applying h to a subtree output carries the Koszul sign of
// moving h (degree -1) past the inputs to the left of that subtree.
Vec tree_operation(const LInfinityAlgebra& dgla, const HomotopyRetract& r,
                   const RootedBinaryTree& tree, const std::vector<int>& inputs);

// l_n = sum_trees 1/|Aut| sum_{sigma in S_n} chi(sigma) p T(iota v_sigma), l_1 = 0.
// With verify set, check_algebra must pass up to arity_cap (throws otherwise)
// and the result is flagged verified.
LInfinityAlgebra transfer_algebra(const LInfinityAlgebra& dgla, const HomotopyRetract& r,
                                  int arity_cap, bool verify = true);

// Transfer of a dgl pair (C, M) through the semidirect dgla on C (+) M with
// the sum of the two retracts; m_n is read off from the part linear in M.
LInfinityPair transfer_pair(const LInfinityPair& pair, const HomotopyRetract& rc,
                            const HomotopyRetract& rm, int arity_cap, bool verify = true);
LInfinityPair transfer_pair(const LInfinityPair& pair, int arity_cap, bool verify = true);

}  // namespace jl
