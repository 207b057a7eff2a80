#include <jumploci/detvar/oracles.hpp>

#include <jumploci/exact/errors.hpp>
#include <jumploci/exact/matrix.hpp>

#include <functional>
#include <map>

namespace jl {

namespace {

void monomials_of_degree(int nvars, int deg, std::vector<Exponent>& out) {
  Exponent e(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[var] = x;
      rec(var + 1, left - x);
    }
    e[var] = 0;
  };
  if (nvars == 0) {
    if (deg == 0) out.push_back(e);
    return;
  }
  rec(0, deg);
}

// Integer weight vectors making every generator homogeneous.
std::vector<std::vector<long>> fine_grading(const std::vector<MultiPoly>& gens, int nvars) {
  std::vector<Vec> diffs;
  for (const auto& g : gens) {
    const Exponent& first = g.terms().begin()->first;
    for (const auto& [e, c] : g.terms()) {
      Vec d(nvars);
      for (int i = 0; i < nvars; ++i) d[i] = e[i] - first[i];
      if (!is_zero(d)) diffs.push_back(d);
    }
  }
  std::vector<Vec> basis;
  if (diffs.empty()) {
    for (int i = 0; i < nvars; ++i) {
      Vec e(nvars);
      e[i] = 1;
      basis.push_back(e);
    }
  } else {
    basis = kernel(Matrix::from_rows(diffs, nvars));
  }
  std::vector<std::vector<long>> out;
  for (const auto& v : basis) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<long> w;
    for (const auto& x : v) w.push_back(Integer(x * l).get_si());
    out.push_back(w);
  }
  return out;
}

std::vector<long> weight_of(const std::vector<std::vector<long>>& W, const Exponent& e) {
  std::vector<long> k;
  for (const auto& w : W) {
    long s = 0;
    for (size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
    k.push_back(s);
  }
  return k;
}

// dim of the degree-n part of the ideal.
long ideal_dim(const std::vector<MultiPoly>& gens, const std::vector<std::vector<long>>& W, int nvars,
               int n, long& monomial_count) {
  std::vector<Exponent> mons;
  monomials_of_degree(nvars, n, mons);
  monomial_count = static_cast<long>(mons.size());
  std::map<std::vector<long>, std::map<Exponent, int>> pieces;
  for (const auto& m : mons) {
    auto& piece = pieces[weight_of(W, m)];
    piece.emplace(m, static_cast<int>(piece.size()));
  }
  std::map<std::vector<long>, std::vector<Vec>> rows;
  for (const auto& g : gens) {
    int dg = g.degree();
    if (dg > n) continue;
    std::vector<Exponent> mult;
    monomials_of_degree(nvars, n - dg, mult);
    auto wg = weight_of(W, g.terms().begin()->first);
    for (const auto& mu : mult) {
      auto key = weight_of(W, mu);
      for (size_t i = 0; i < key.size(); ++i) key[i] += wg[i];
      auto& piece = pieces.at(key);
      Vec row(piece.size());
      for (const auto& [e, c] : g.terms()) {
        Exponent x = e;
        for (int i = 0; i < nvars; ++i) x[i] += mu[i];
        row[piece.at(x)] = c;
      }
      rows[key].push_back(row);
    }
  }
  long total = 0;
  for (const auto& [key, rs] : rows) total += rank(Matrix::from_rows(rs, int(pieces.at(key).size())));
  return total;
}

}  // namespace

std::string to_string(HilbertResult::Status s) {
  switch (s) {
    case HilbertResult::Status::Ok: return "ok";
    case HilbertResult::Status::Empty: return "empty";
    default: return "inconclusive";
  }
}

HilbertResult hilbert_multiplicity_oracle(const std::vector<MultiPoly>& input, int ambient_dim,
                                          std::optional<int> max_degree, int window) {
  if (window < 2) throw HypothesisError("stabilization window must be >= 2");
  std::vector<MultiPoly> gens;
  for (const auto& g : input) {
    if (g.num_vars() != ambient_dim) throw HypothesisError("generator variable count differs from ambient dimension");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw HypothesisError("hilbert oracle needs homogeneous generators");
    gens.push_back(g);
  }
  HilbertResult R;
  for (const auto& g : gens)
    if (g.is_constant()) {
      R.status = HilbertResult::Status::Empty;
      R.hilbert_function = {0};
      return R;
    }
  int max_deg = max_degree.value_or(ambient_dim + 3);
  int min_deg = 1;
  for (const auto& g : gens) min_deg = std::max(min_deg, g.degree() + 1);
  auto W = fine_grading(gens, ambient_dim);
  std::vector<Integer> H;
  for (int n = 0; n <= max_deg; ++n) {
    long count = 0;
    long in_ideal = ideal_dim(gens, W, ambient_dim, n, count);
    H.push_back(Integer(count - in_ideal));
    R.hilbert_function = H;
    if (H.back() == 0) {
      R.status = HilbertResult::Status::Ok;
      R.dimension = 0;
      R.multiplicity = 0;
      for (const auto& h : H) R.multiplicity += h;
      return R;
    }
    if (n < min_deg) continue;
    std::vector<Integer> diff = H;
    for (int j = 0; static_cast<int>(diff.size()) >= window; ++j) {
      bool constant = true;
      for (int t = 1; t < window; ++t) constant = constant && diff[diff.size() - 1 - t] == diff.back();
      if (constant && diff.back() != 0) {
        R.status = HilbertResult::Status::Ok;
        R.dimension = j + 1;
        R.multiplicity = diff.back();
        return R;
      }
      std::vector<Integer> next;
      for (size_t t = 1; t < diff.size(); ++t) next.push_back(diff[t] - diff[t - 1]);
      diff = std::move(next);
    }
  }
  R.status = HilbertResult::Status::Inconclusive;
  return R;
}

std::vector<std::string> jet_variables(const std::vector<std::string>& vars, int m) {
  std::vector<std::string> out;
  for (int p = 0; p <= m; ++p)
    for (const auto& v : vars) out.push_back(v + std::string(p, '\''));
  return out;
}

std::vector<MultiPoly> jet_equations(const std::vector<MultiPoly>& gens, int m) {
  if (m < 0) throw HypothesisError("jet order must be >= 0");
  std::vector<MultiPoly> out;
  if (gens.empty()) return out;
  const auto& vars = gens.front().vars();
  int n = static_cast<int>(vars.size());
  auto jets = jet_variables(vars, m);
  auto ext = jets;
  ext.push_back("t");
  int tv = static_cast<int>(jets.size());
  std::vector<MultiPoly> images;
  for (int i = 0; i < n; ++i) {
    MultiPoly img(ext);
    for (int p = 0; p <= m; ++p) {
      Exponent e(ext.size(), 0);
      e[p * n + i] = 1;
      e[tv] = p;
      img.add_term(e, 1);
    }
    images.push_back(img);
  }
  for (const auto& f : gens) {
    if (f.vars() != vars) throw HypothesisError("generators must share one variable list");
    MultiPoly g = f.substitute(images);
    std::vector<MultiPoly> coeffs(m + 1, MultiPoly(jets));
    for (const auto& [e, c] : g.terms()) {
      if (e[tv] > m) continue;
      Exponent x(e.begin(), e.end() - 1);
      coeffs[e[tv]].add_term(x, c);
    }
    for (auto& c : coeffs) out.push_back(c);
  }
  return out;
}

}  // namespace jl
