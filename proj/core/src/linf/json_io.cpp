#include <jumploci/linf/json_io.hpp>

#include <stdexcept>

namespace jl {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

void check_kind(const Json& j, const char* kind) {
  if (j.contains("kind") && j.at("kind") != kind)
    throw ParseError(std::string("expected kind '") + kind + "'");
}

int int_field(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw ParseError(std::string(key) + " must be an integer");
  return j.at(key).get<int>();
}

bool bool_field(const Json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw ParseError(std::string(key) + " must be a boolean");
  return j.at(key).get<bool>();
}

std::vector<MultilinearMap> ops_from_json(const Json& ops, int cap, const GradedVectorSpace& L,
                                          const GradedVectorSpace* V) {
  std::vector<MultilinearMap> out;
  for (int n = 1; n <= cap; ++n)
    out.push_back(V ? make_module_operation(L, *V, n, 2 - n) : make_operation(L, n, 2 - n));
  if (!ops.is_array()) throw ParseError("ops must be an array");
  for (const auto& op : ops) {
    int n = int_field(op, "arity", 0);
    if (n < 1 || n > cap) throw ParseError("operation arity outside 1..arity_cap");
    if (op.contains("degree") && op.at("degree") != 2 - n)
      throw ParseError("operation of arity " + std::to_string(n) + " must have degree " +
                                  std::to_string(2 - n));
    operation_entries_from_json(op, out[n - 1]);
  }
  return out;
}

Json ops_json(const std::vector<MultilinearMap>& ops) {
  Json a = Json::array();
  for (const auto& m : ops)
    if (!m.is_zero()) a.push_back(operation_json(m));
  return a;
}

}  // namespace

Json space_json(const GradedVectorSpace& S) {
  Json j;
  j["degrees"] = S.degrees();
  j["dims"] = S.dims();
  return j;
}

GradedVectorSpace space_from_json(const Json& j) {
  const Json& degs = field(j, "degrees");
  const Json& dims = field(j, "dims");
  if (!degs.is_array() || !dims.is_array() || degs.size() != dims.size())
    throw ParseError("space: degrees and dims must be arrays of equal length");
  if (degs.empty()) return GradedVectorSpace(0, std::vector<int>{});
  std::vector<int> d = degs.get<std::vector<int>>();
  std::vector<int> n = dims.get<std::vector<int>>();
  for (size_t i = 1; i < d.size(); ++i)
    if (d[i] <= d[i - 1]) throw ParseError("space: degrees must be strictly increasing");
  std::vector<int> full(d.back() - d.front() + 1, 0);
  for (size_t i = 0; i < d.size(); ++i) {
    if (n[i] < 0) throw ParseError("space: negative dimension");
    full[d[i] - d.front()] = n[i];
  }
  return GradedVectorSpace(d.front(), full);
}

Json operation_json(const MultilinearMap& m) {
  Json j;
  j["arity"] = m.arity();
  j["degree"] = m.degree();
  Json entries = Json::array();
  for (const auto& [t, v] : m.values()) {
    Json e;
    e["tuple"] = t;
    e["value"] = vec_json(v);
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

void operation_entries_from_json(const Json& j, MultilinearMap& m) {
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("entries must be an array");
  for (const auto& e : entries) {
    auto t = field(e, "tuple").get<std::vector<int>>();
    Vec v = vec_from_json(field(e, "value"));
    try {
      m.add(t, v);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(std::string("entry rejected: ") + ex.what());
    } catch (const std::out_of_range& ex) {
      throw ParseError(std::string("entry rejected: ") + ex.what());
    }
  }
}

Json algebra_json(const LInfinityAlgebra& L) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "linf_algebra";
  j["arity_cap"] = L.arity_cap;
  j["exact"] = L.exact;
  j["verified"] = L.verified;
  j["space"] = space_json(L.space);
  j["ops"] = ops_json(L.ops);
  return j;
}

LInfinityAlgebra algebra_from_json(const Json& j) {
  check_kind(j, "linf_algebra");
  int cap = int_field(j, "arity_cap", 5);
  if (cap < 2) throw ParseError("arity_cap must be >= 2");
  LInfinityAlgebra L = LInfinityAlgebra::zero(space_from_json(field(j, "space")), cap,
                                              bool_field(j, "exact", true));
  L.ops = ops_from_json(field(j, "ops"), cap, L.space, nullptr);
  return L;
}

Json pair_json(const LInfinityPair& P) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "linf_pair";
  j["arity_cap"] = P.arity_cap;
  j["exact"] = P.exact;
  j["verified"] = P.verified;
  j["space"] = space_json(P.algebra.space);
  j["ops"] = ops_json(P.algebra.ops);
  j["module_space"] = space_json(P.module_space);
  j["module_ops"] = ops_json(P.module_ops);
  return j;
}

LInfinityPair pair_from_json(const Json& j) {
  check_kind(j, "linf_pair");
  int cap = int_field(j, "arity_cap", 5);
  if (cap < 2) throw ParseError("arity_cap must be >= 2");
  bool exact = bool_field(j, "exact", true);
  auto L = space_from_json(field(j, "space"));
  auto V = space_from_json(field(j, "module_space"));
  LInfinityPair P = LInfinityPair::zero(L, V, cap, exact);
  P.algebra.ops = ops_from_json(field(j, "ops"), cap, L, nullptr);
  P.module_ops = ops_from_json(field(j, "module_ops"), cap, L, &V);
  return P;
}

Json taylor_json(const TaylorFamily& f) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "taylor_family";
  j["arity_cap"] = f.arity_cap;
  j["space"] = space_json(f.space);
  j["maps"] = ops_json(f.maps);
  return j;
}

TaylorFamily taylor_from_json(const Json& j) {
  check_kind(j, "taylor_family");
  TaylorFamily f;
  f.space = space_from_json(field(j, "space"));
  f.arity_cap = int_field(j, "arity_cap", 5);
  for (int n = 1; n <= f.arity_cap; ++n) f.maps.push_back(make_operation(f.space, n, 1 - n));
  for (const auto& m : field(j, "maps")) {
    int n = int_field(m, "arity", 0);
    if (n < 1 || n > f.arity_cap) throw ParseError("map arity outside 1..arity_cap");
    operation_entries_from_json(m, f.f(n));
  }
  return f;
}

Json retract_json(const HomotopyRetract& r) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "homotopy_retract";
  j["complex"] = space_json(r.complex.space);
  j["cohomology"] = space_json(r.cohomology);
  j["d"] = matrix_json(r.complex.d);
  j["iota"] = matrix_json(r.iota);
  j["p"] = matrix_json(r.p);
  j["h"] = matrix_json(r.h);
  return j;
}

Json residuals_json(const std::vector<Residual>& res) {
  Json a = Json::array();
  for (const auto& r : res) {
    Json e;
    e["arity"] = r.arity;
    e["tuple"] = r.tuple;
    e["value"] = vec_json(r.value);
    a.push_back(e);
  }
  return a;
}

}  // namespace jl
