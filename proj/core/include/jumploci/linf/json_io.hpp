#pragma once

#include <jumploci/exact/json_io.hpp>
#include <jumploci/linf/checker.hpp>
#include <jumploci/linf/retract.hpp>
#include <jumploci/linf/structures.hpp>
#include <jumploci/linf/transport.hpp>

namespace jl {

// {degrees: [...], dims: [...]} with optional labels: [[...], ...].
Json space_json(const GradedVectorSpace& S);
GradedVectorSpace space_from_json(const Json& j);

// {arity, degree, entries: [{tuple, value}]}; value is a dense list of rationals.
Json operation_json(const MultilinearMap& m);
// Reads entries into a preconstructed empty map of the right shape.
void operation_entries_from_json(const Json& j, MultilinearMap& m);

// {schema, kind: "linf_algebra", arity_cap, exact, verified, space, ops}
Json algebra_json(const LInfinityAlgebra& L);
LInfinityAlgebra algebra_from_json(const Json& j);
// {schema, kind: "linf_pair", arity_cap, exact, verified, space, ops,
//  module_space, module_ops}
Json pair_json(const LInfinityPair& P);
LInfinityPair pair_from_json(const Json& j);

// {schema, kind: "taylor_family", arity_cap, space, maps}
Json taylor_json(const TaylorFamily& f);
TaylorFamily taylor_from_json(const Json& j);

Json retract_json(const HomotopyRetract& r);
Json residuals_json(const std::vector<Residual>& res);

}  // namespace jl
