#include <jumploci/defjump/defjump.hpp>

#include <jumploci/exact/errors.hpp>

namespace jl {

namespace {

void validate(const QuadraticData& D) {
  if (D.h1 < 0 || D.h2 < 0) throw HypothesisError("negative dimension");
  if (static_cast<int>(D.cup.size()) != D.h1) throw HypothesisError("cup needs h1 rows");
  for (int a = 0; a < D.h1; ++a) {
    if (static_cast<int>(D.cup[a].size()) != D.h1) throw HypothesisError("cup needs h1 x h1 entries");
    for (int b = 0; b < D.h1; ++b)
      if (static_cast<int>(D.cup[a][b].size()) != D.h2)
        throw HypothesisError("cup values must lie in H^2 (length h2)");
  }
  for (int a = 0; a < D.h1; ++a)
    for (int b = 0; b < D.h1; ++b)
      if (D.cup[a][b] != D.cup[b][a]) throw HypothesisError("cup must be symmetric");
  if (D.dims.empty() && !D.action.empty()) throw HypothesisError("action given without module dims");
  if (!D.dims.empty() && static_cast<int>(D.action.size()) != static_cast<int>(D.dims.size()) - 1)
    throw HypothesisError("action needs one family per consecutive pair of degrees");
  for (size_t j = 0; j < D.action.size(); ++j) {
    if (static_cast<int>(D.action[j].size()) != D.h1) throw HypothesisError("action needs h1 matrices");
    for (const auto& A : D.action[j])
      if (A.rows() != D.dims[j + 1] || A.cols() != D.dims[j])
        throw HypothesisError("action matrix " + std::to_string(j) + " has the wrong shape");
  }
}

// Linear matrix eta . : H^j -> H^{j+1}, zero outside the given range.
PolyMatrix action_matrix(const QuadraticData& D, int j, const std::vector<std::string>& vars) {
  auto dim = [&](int d) { return d >= 0 && d < static_cast<int>(D.dims.size()) ? D.dims[d] : 0; };
  PolyMatrix M(dim(j + 1), dim(j), vars);
  if (j < 0 || j >= static_cast<int>(D.action.size())) return M;
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) {
      MultiPoly p(vars);
      for (int a = 0; a < D.h1; ++a) p += MultiPoly::variable(vars, a) * D.action[j][a](r, c);
      M.set(r, c, p);
    }
  return M;
}

}  // namespace

QuadraticModel quadratic_model(const QuadraticData& D, int i, int k) {
  validate(D);
  QuadraticModel Q;
  Q.vars = indexed_names("x", D.h1);
  Q.i = i;
  Q.k = k;
  for (int q = 0; q < D.h2; ++q) {
    MultiPoly p(Q.vars);
    for (int a = 0; a < D.h1; ++a)
      for (int b = 0; b < D.h1; ++b)
        if (D.cup[a][b][q] != 0)
          p += MultiPoly::variable(Q.vars, a) * MultiPoly::variable(Q.vars, b) * D.cup[a][b][q];
    if (!p.is_zero()) Q.q_equations.push_back(p);
  }
  std::vector<MultiPoly> gens = Q.q_equations;
  if (k <= 0) {
    gens = {MultiPoly::constant(Q.vars, 1)};
  } else {
    int hi = i >= 0 && i < static_cast<int>(D.dims.size()) ? D.dims[i] : 0;
    auto B = block_diagonal(action_matrix(D, i - 1, Q.vars), action_matrix(D, i, Q.vars));
    for (auto& m : minors(B, hi - k + 1)) gens.push_back(m);
  }
  Q.r_generators = ideal_normal_form(gens, false);
  return Q;
}

QuadraticData quadratic_data_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("h1") || !j.contains("cup"))
    throw ParseError("quadratic data must be {h1, h2, cup, dims, action}");
  QuadraticData D;
  D.h1 = j.at("h1").get<int>();
  D.h2 = j.value("h2", 0);
  for (const auto& row : j.at("cup")) {
    std::vector<Vec> r;
    for (const auto& v : row) r.push_back(vec_from_json(v));
    D.cup.push_back(r);
  }
  if (j.contains("dims")) D.dims = j.at("dims").get<std::vector<int>>();
  if (j.contains("action"))
    for (const auto& fam : j.at("action")) {
      std::vector<Matrix> ms;
      for (const auto& m : fam) ms.push_back(matrix_from_json(m));
      D.action.push_back(ms);
    }
  return D;
}

Json quadratic_model_json(const QuadraticModel& q) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "quadratic_model";
  j["i"] = q.i;
  j["k"] = q.k;
  j["vars"] = q.vars;
  auto list = [](const std::vector<MultiPoly>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) {
      Json g = poly_json(p);
      g["text"] = p.to_string();
      out.push_back(g);
    }
    return out;
  };
  j["q_equations"] = list(q.q_equations);
  j["r_generators"] = list(q.r_generators);
  return j;
}

}  // namespace jl
