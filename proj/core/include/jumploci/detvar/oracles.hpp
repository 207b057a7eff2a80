#pragma once

#include <jumploci/exact/poly.hpp>

#include <optional>
#include <string>
#include <vector>

namespace jl {

struct HilbertResult {
  enum class Status { Ok, Empty, Inconclusive };
  Status status = Status::Inconclusive;
  int dimension = 0;
  Integer multiplicity;
  std::vector<Integer> hilbert_function;  // H(0), H(1), ...
};
std::string to_string(HilbertResult::Status s);

// Krull dimension and multiplicity of K[x]/I at the origin for homogeneous
// generators, from the Hilbert function computed by exact linear algebra.
// max_degree defaults to ambient_dim + 3; the scan stops early once a
// difference sequence has been constant for `window` values.
HilbertResult hilbert_multiplicity_oracle(const std::vector<MultiPoly>& gens, int ambient_dim,
                                          std::optional<int> max_degree = {}, int window = 3);

// Coefficients of t^0..t^m of f(x + x' t + ... + x^(m) t^m) for each f, in
// variables [x..., x'..., ..., x^(m)...] (primes appended to the names).
std::vector<MultiPoly> jet_equations(const std::vector<MultiPoly>& gens, int m);
std::vector<std::string> jet_variables(const std::vector<std::string>& vars, int m);

}  // namespace jl
