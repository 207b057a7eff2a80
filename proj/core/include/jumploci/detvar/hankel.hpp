#pragma once

#include <jumploci/detvar/closed_forms.hpp>
#include <jumploci/exact/polymatrix.hpp>

namespace jl {

// Hankel b x a matrices in a + b - 1 variables; N_k = rank <= a - k.
struct HankelModel {
  int a = 1, b = 1, k = 1;
  int ambient() const { return a + b - 1; }
};

HankelModel hankel_reembed(const HankelModel& h);
Integer hankel_codim(const HankelModel& h);
// Multiplicity of N_k at a point of N_m \ N_{m+1}, k <= m <= a.
Integer hankel_multiplicity(const HankelModel& h, int m);
Rational hankel_lct(const HankelModel& h);
ResolutionData resolution_data_hankel(const HankelModel& h);

// b x a matrix with entry (i, j) = x_{i+j+1}.
PolyMatrix hankel_matrix(int a, int b, const std::string& prefix = "x");
// b x a matrix with entry (i, j) = x{i+1}{j+1} (or x_{i+1}_{j+1} past 9).
PolyMatrix generic_matrix(int a, int b, const std::string& prefix = "x");

}  // namespace jl
