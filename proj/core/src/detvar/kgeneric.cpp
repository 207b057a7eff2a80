#include <jumploci/detvar/kgeneric.hpp>

#include <jumploci/exact/errors.hpp>

#include <random>

namespace jl {

namespace {

using UPoly = std::vector<Rational>;  // coefficients, low degree first

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_mod(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rational upoly_eval(const UPoly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0 || n > 1000000) return out;
  for (long d = 1; d <= n.get_si(); ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::optional<Rational> rational_root(const UPoly& monic) {
  if (monic.empty()) return std::nullopt;
  if (monic[0] == 0) return Rational(0);
  Integer lcm = 1;
  for (const auto& c : monic) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : monic) ints.push_back(Rational(c * lcm).get_num());
  for (const auto& p : divisors(ints.front()))
    for (const auto& q : divisors(ints.back()))
      for (int sgn : {1, -1}) {
        Rational x(sgn * p, q);
        x.canonicalize();
        if (upoly_eval(monic, x) == 0) return x;
      }
  return std::nullopt;
}

UPoly to_upoly(const MultiPoly& p) {
  UPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (out.size() <= size_t(e[0])) out.resize(e[0] + 1);
    out[e[0]] = c;
  }
  return out;
}

MultiPoly from_upoly(const UPoly& p) {
  MultiPoly out({"t"});
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out.add_term({int(i)}, p[i]);
  return out;
}

// Coefficient of variable l in entry (r, c).
std::vector<Matrix> coefficient_matrices(const LinearMatrixSpace& A) {
  if (!A.is_linear()) throw HypothesisError("matrix entries must be linear forms");
  int s = static_cast<int>(A.vars().size());
  std::vector<Matrix> out(s, Matrix(A.rows(), A.cols()));
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c)
      for (const auto& [e, coef] : A(r, c).terms())
        for (int l = 0; l < s; ++l)
          if (e[l] == 1) out[l](r, c) = coef;
  return out;
}

bool in_perp(const std::vector<Matrix>& coeffs, const Matrix& psi) {
  for (const auto& Al : coeffs) {
    Rational t = 0;
    for (int i = 0; i < Al.rows(); ++i)
      for (int j = 0; j < Al.cols(); ++j) t += Al(i, j) * psi(j, i);
    if (t != 0) return false;
  }
  return true;
}

Matrix combine(const Matrix& B1, const Matrix& B2, const Rational& x, const Rational& y) {
  Matrix out(B1.rows(), B1.cols());
  for (int i = 0; i < B1.rows(); ++i)
    for (int j = 0; j < B1.cols(); ++j) out(i, j) = x * B1(i, j) + y * B2(i, j);
  return out;
}

// Fix `fixed` (k vectors of length n_fixed on one side of psi = sum u_i w_i^T)
// and solve the linear conditions for the other side.
std::optional<Matrix> solve_side(const std::vector<Matrix>& coeffs, int a, int b,
                                 const std::vector<Vec>& fixed, bool fixed_is_u) {
  int k = static_cast<int>(fixed.size());
  int other = fixed_is_u ? b : a;
  std::vector<Vec> rows;
  for (const auto& Al : coeffs) {  // Al is b x a; tr(Al psi) = sum_i w_i^T Al u_i
    Vec row(size_t(k) * other);
    for (int i = 0; i < k; ++i)
      for (int x = 0; x < other; ++x) {
        Rational t = 0;
        if (fixed_is_u) {
          for (int y = 0; y < a; ++y) t += Al(x, y) * fixed[i][y];
        } else {
          for (int y = 0; y < b; ++y) t += fixed[i][y] * Al(y, x);
        }
        row[size_t(i) * other + x] = t;
      }
    rows.push_back(row);
  }
  std::vector<Vec> ker;
  if (rows.empty()) {
    Vec e(size_t(k) * other);
    e[0] = 1;
    ker.push_back(e);
  } else {
    ker = kernel(Matrix::from_rows(rows, k * other));
  }
  for (const auto& v : ker) {
    Matrix psi(a, b);
    for (int i = 0; i < k; ++i)
      for (int x = 0; x < other; ++x) {
        const Rational& z = v[size_t(i) * other + x];
        if (z == 0) continue;
        if (fixed_is_u) {
          for (int y = 0; y < a; ++y) psi(y, x) += fixed[i][y] * z;
        } else {
          for (int y = 0; y < b; ++y) psi(x, y) += z * fixed[i][y];
        }
      }
    if (rank(psi) > 0) return psi;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "unknown";
  }
}

std::vector<Matrix> trace_perp(const LinearMatrixSpace& A) {
  auto coeffs = coefficient_matrices(A);
  int a = A.cols(), b = A.rows();
  std::vector<Vec> rows;
  for (const auto& Al : coeffs) {
    Vec row(size_t(a) * b);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < a; ++j) row[size_t(j) * b + i] = Al(i, j);  // psi(j, i)
    rows.push_back(row);
  }
  std::vector<Vec> ker;
  if (rows.empty()) {
    for (int n = 0; n < a * b; ++n) {
      Vec e(size_t(a) * b);
      e[n] = 1;
      ker.push_back(e);
    }
  } else {
    ker = kernel(Matrix::from_rows(rows, a * b));
  }
  std::vector<Matrix> out;
  for (const auto& v : ker) {
    Matrix psi(a, b);
    for (int j = 0; j < a; ++j)
      for (int i = 0; i < b; ++i) psi(j, i) = v[size_t(j) * b + i];
    out.push_back(psi);
  }
  return out;
}

bool is_hankel_space(const LinearMatrixSpace& A) {
  if (!A.is_linear()) return false;
  int a = A.cols(), b = A.rows();
  std::vector<Vec> forms;
  for (int d = 0; d < a + b - 1; ++d) {
    int i0 = std::max(0, d - (a - 1));
    const MultiPoly& ref = A(i0, d - i0);
    for (int i = i0; i <= std::min(d, b - 1); ++i)
      if (!(A(i, d - i) == ref)) return false;
    Vec f(A.vars().size());
    for (const auto& [e, c] : ref.terms())
      for (size_t l = 0; l < e.size(); ++l)
        if (e[l] == 1) f[l] = c;
    forms.push_back(f);
  }
  return rank(Matrix::from_rows(forms, int(A.vars().size()))) == a + b - 1;
}

KGenericResult is_k_generic(const LinearMatrixSpace& A, int k, const KGenericOptions& opt) {
  int a = A.cols(), b = A.rows();
  if (a < 1 || b < 1) throw HypothesisError("matrix must be nonempty");
  if (k < 1 || k > a) throw HypothesisError("need 1 <= k <= number of columns");
  auto coeffs = coefficient_matrices(A);
  auto perp = trace_perp(A);
  KGenericResult R;
  R.perp_dim = static_cast<int>(perp.size());
  auto fail = [&](const Matrix& w, const std::string& method) {
    R.verdict = Verdict::False;
    R.method = method;
    R.witness = w;
    return R;
  };
  if (perp.empty()) {
    R.verdict = Verdict::True;
    R.method = "perp dimension 0";
    R.certificate = "N^perp = 0";
    return R;
  }
  if (perp.size() == 1) {
    int r = rank(perp[0]);
    if (r <= k) return fail(perp[0], "perp dimension 1: spanning matrix has rank " + std::to_string(r));
    R.verdict = Verdict::True;
    R.method = "perp dimension 1";
    R.certificate = "N^perp spanned by a matrix of rank " + std::to_string(r) + " > k";
    return R;
  }
  if (perp.size() == 2) {
    const Matrix &B1 = perp[0], &B2 = perp[1];
    if (rank(B1) <= k) return fail(B1, "perp dimension 2: pencil member at infinity");
    std::vector<std::string> t{"t"};
    PolyMatrix P(a, b, t);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        P.set(i, j, MultiPoly::constant(t, B2(i, j)) + MultiPoly::variable(t, 0) * B1(i, j));
    UPoly g;
    for (const auto& m : minors(P, k + 1)) g = upoly_gcd(g, to_upoly(m));
    if (g.empty()) return fail(B2, "perp dimension 2: every pencil member has rank <= k");
    if (g.size() == 1) {
      R.verdict = Verdict::True;
      R.method = "perp dimension 2";
      R.certificate = "gcd of the (k+1)-minors of the pencil B2 + t B1 is 1 and B1 has rank > k";
      return R;
    }
    R.pencil_gcd = from_upoly(g);
    if (auto x = rational_root(g)) return fail(combine(B1, B2, *x, 1), "perp dimension 2: rational root of the minor gcd");
    R.verdict = Verdict::False;
    R.method = "perp dimension 2: minor gcd " + R.pencil_gcd->to_string() + " has an irrational root";
    return R;
  }
  if (k == 1 && is_hankel_space(A)) {
    R.verdict = Verdict::True;
    R.method = "known family";
    R.certificate = "Hankel matrix space: 1-generic";
    return R;
  }
  // Falsifier: choose one side of psi = sum_{i<=k} u_i w_i^T and solve for the other.
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto try_side = [&](const std::vector<Vec>& fixed, bool is_u) -> std::optional<Matrix> {
    auto psi = solve_side(coeffs, a, b, fixed, is_u);
    if (psi && rank(*psi) <= k && in_perp(coeffs, *psi)) return psi;
    return std::nullopt;
  };
  for (bool is_u : {true, false}) {
    int n = is_u ? a : b;
    if (k > n) continue;
    auto subs = subsets(n, k);
    if (static_cast<int>(subs.size()) > opt.trials) continue;
    for (const auto& sub : subs) {
      std::vector<Vec> fixed;
      for (int idx : sub) {
        Vec e(n);
        e[idx] = 1;
        fixed.push_back(e);
      }
      if (auto psi = try_side(fixed, is_u)) return fail(*psi, "falsifier: coordinate vectors");
    }
  }
  for (int trial = 0; trial < opt.trials; ++trial) {
    bool is_u = trial % 2 == 0;
    int n = is_u ? a : b;
    if (k > n) continue;
    std::vector<Vec> fixed;
    for (int i = 0; i < k; ++i) {
      Vec v(n);
      for (auto& x : v) x = coef(rng);
      fixed.push_back(v);
    }
    if (rank(Matrix::from_rows(fixed, n)) < k) continue;
    if (auto psi = try_side(fixed, is_u)) return fail(*psi, "falsifier: random vectors");
  }
  int dim_n = a * b - R.perp_dim;
  if (dim_n < k * (a + b - k)) {
    R.verdict = Verdict::False;
    R.method = "dimension count: dim N < k(a+b-k), so rank <= k matrices meet N^perp over an algebraically closed field";
    return R;
  }
  R.verdict = Verdict::Unknown;
  R.method = "falsifier exhausted " + std::to_string(opt.trials) + " trials";
  return R;
}

}  // namespace jl
