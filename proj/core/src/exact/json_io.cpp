#include <jumploci/exact/json_io.hpp>

#include <stdexcept>

namespace jl {

Json rational_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  return Matrix::from_rows(rows);
}

Json poly_json(const MultiPoly& p) {
  Json j;
  j["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw ParseError("polynomial must be {vars, terms}");
  MultiPoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) {
    Exponent e = t.at("exp").get<Exponent>();
    Rational c = parse_rational(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
    p.add_term(e, c);
  }
  return p;
}

Json polymatrix_json(const PolyMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["vars"] = m.vars();
  if (m.ring()) j["order"] = m.ring()->order();
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(poly_json(m(i, c))["terms"]);
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

PolyMatrix polymatrix_from_json(const Json& j) {
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  auto vars = j.at("vars").get<std::vector<std::string>>();
  std::optional<TruncatedLocalRing> ring;
  if (j.contains("order")) ring = TruncatedLocalRing(vars, j.at("order").get<int>());
  PolyMatrix m(rows, cols, vars, ring);
  const auto& e = j.at("entries");
  if (!e.is_array() || static_cast<int>(e.size()) != rows)
    throw ParseError("entries: wrong row count");
  for (int i = 0; i < rows; ++i) {
    if (!e[i].is_array() || static_cast<int>(e[i].size()) != cols)
      throw ParseError("entries: wrong column count");
    for (int c = 0; c < cols; ++c) {
      Json pj;
      pj["vars"] = vars;
      pj["terms"] = e[i][c];
      m.set(i, c, poly_from_json(pj));
    }
  }
  return m;
}

}  // namespace jl
