#pragma once

#include <jumploci/linf/structures.hpp>

#include <string>
#include <vector>

namespace jl {

// Cochain complex on a graded space; d is a global (total x total) matrix of
// degree +1.
struct Complex {
  GradedVectorSpace space;
  Matrix d;
};

Complex underlying_complex(const LInfinityAlgebra& L);  // (L, l_1)
Complex module_complex(const LInfinityPair& P);         // (V, m_1)

// Global matrices: iota is (dim C x dim H), p is (dim H x dim C), h is
// (dim C x dim C) of degree -1. The identity verified is
// id - iota p = d h + h d, plus the side conditions h h = 0, h iota = 0,
// p h = 0.
struct HomotopyRetract {
  Complex complex;
  GradedVectorSpace cohomology;
  Matrix iota, p, h;

  // Names of violated identities; empty when the retract is valid.
  std::vector<std::string> violations() const;
};

HomotopyRetract build_retract(const Complex& C);

// Retract of C (+) M from retracts of C and M, in the layouts of the two
// direct sums (complex and cohomology).
HomotopyRetract sum_retract(const HomotopyRetract& a, const HomotopyRetract& b,
                            const DirectSum& complex_layout, const DirectSum& cohomology_layout);

}  // namespace jl
