#pragma once

#include <jumploci/exact/matrix.hpp>
#include <jumploci/exact/polymatrix.hpp>

#include <jumploci/exact/errors.hpp>

#include <json.hpp>

namespace jl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "jumploci/1";

Json rational_json(const Rational& q);  // "p/q" string
Rational rational_from_json(const Json& j);
Json vec_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {vars, terms: [{exp, num, den}]} in grlex order.
Json poly_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);
// {rows, cols, vars, order?, entries: [[poly terms...]...]}
Json polymatrix_json(const PolyMatrix& m);
PolyMatrix polymatrix_from_json(const Json& j);

}  // namespace jl
