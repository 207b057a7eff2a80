#include <jumploci/detvar/hankel.hpp>

#include <jumploci/exact/errors.hpp>

namespace jl {

HankelModel hankel_reembed(const HankelModel& h) {
  validate_model(h.a, h.b, h.k);
  if (h.k == 1) return h;
  return {h.a - h.k + 1, h.b + h.k - 1, 1};
}

Integer hankel_codim(const HankelModel& h) {
  validate_model(h.a, h.b, h.k);
  return Integer(h.b - h.a - 1 + 2 * h.k);
}

Integer hankel_multiplicity(const HankelModel& h, int m) {
  validate_model(h.a, h.b, h.k);
  if (m < h.k || m > h.a) throw HypothesisError("stratum index must satisfy k <= m <= a");
  return binomial(h.b - h.a - 1 + m + h.k, m - h.k);
}

Rational hankel_lct(const HankelModel& h) {
  validate_model(h.a, h.b, h.k);
  if (h.a == h.b && h.k == 1) return 1;
  if (h.a == h.b) return hankel_lct(hankel_reembed(h));
  Rational q(h.b + h.k - 2, h.a - h.k + 1);
  q.canonicalize();
  return 1 + q;
}

ResolutionData resolution_data_hankel(const HankelModel& h) {
  validate_model(h.a, h.b, h.k);
  ResolutionData r;
  for (int i = 0; i <= h.a - h.k; ++i)
    r.steps.push_back({i, "N_" + std::to_string(h.a - i), Integer(h.a - h.k + 1 - i),
                       Integer(h.a + h.b - 1 - 2 * i)});
  return r;
}

PolyMatrix hankel_matrix(int a, int b, const std::string& prefix) {
  if (a < 1 || b < 1) throw HypothesisError("matrix dimensions must be positive");
  auto vars = indexed_names(prefix, a + b - 1);
  PolyMatrix H(b, a, vars);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < a; ++j) H.set(i, j, MultiPoly::variable(vars, i + j));
  return H;
}

PolyMatrix generic_matrix(int a, int b, const std::string& prefix) {
  if (a < 1 || b < 1) throw HypothesisError("matrix dimensions must be positive");
  std::vector<std::string> vars;
  bool wide = a > 9 || b > 9;
  for (int i = 1; i <= b; ++i)
    for (int j = 1; j <= a; ++j)
      vars.push_back(prefix + std::to_string(i) + (wide ? "_" : "") + std::to_string(j));
  PolyMatrix G(b, a, vars);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < a; ++j) G.set(i, j, MultiPoly::variable(vars, i * a + j));
  return G;
}

}  // namespace jl
