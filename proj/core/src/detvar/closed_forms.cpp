#include <jumploci/detvar/closed_forms.hpp>

#include <jumploci/exact/errors.hpp>

#include <algorithm>

namespace jl {

namespace {

std::string str(int n) { return std::to_string(n); }

void sort_unique_decreasing(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end(), [](const Rational& x, const Rational& y) { return x > y; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void validate_model(int a, int b, int k) {
  if (!(1 <= k && k <= a && a <= b))
    throw HypothesisError("need 1 <= k <= a <= b, got a=" + str(a) + " b=" + str(b) + " k=" + str(k));
}

LctResult ResolutionData::min_ratio() const {
  LctResult r;
  bool first = true;
  for (const auto& s : steps) {
    Rational q(s.nu, s.N);
    q.canonicalize();
    if (first || q < r.value) {
      r.value = q;
      r.argmin = {s.i};
      first = false;
    } else if (q == r.value) {
      r.argmin.push_back(s.i);
    }
  }
  return r;
}

std::vector<Rational> ResolutionData::candidate_poles() const {
  std::vector<Rational> out;
  for (const auto& s : steps) {
    Rational q(-s.nu, s.N);
    q.canonicalize();
    out.push_back(q);
  }
  sort_unique_decreasing(out);
  return out;
}

CodimDim generic_codim_dim(const GenericModel& m) {
  validate_model(m.a, m.b, m.k);
  Integer dim = Integer(m.a - m.k) * (m.b + m.k);
  return {Integer(m.a) * m.b - dim, dim};
}

Integer generic_multiplicity(const GenericModel& m) {
  validate_model(m.a, m.b, m.k);
  Rational prod = 1;
  for (int i = 0; i < m.k; ++i)
    prod *= Rational(factorial(m.b + i) * factorial(i)) /
            Rational(factorial(m.a - m.k + i) * factorial(m.b - m.a + m.k + i));
  if (prod.get_den() != 1) throw InvariantError("multiplicity product is not an integer");
  return prod.get_num();
}

LctResult generic_lct(const GenericModel& m) {
  validate_model(m.a, m.b, m.k);
  LctResult r;
  for (int i = 0; i <= m.a - m.k; ++i) {
    Rational q(Integer(m.a - i) * (m.b - i), Integer(m.a - m.k + 1 - i));
    q.canonicalize();
    if (i == 0 || q < r.value) {
      r.value = q;
      r.argmin = {i};
    } else if (q == r.value) {
      r.argmin.push_back(i);
    }
  }
  return r;
}

MultiplierProfile multiplier_profile_generic(const GenericModel& m, const Rational& c) {
  validate_model(m.a, m.b, m.k);
  if (c <= 0) throw HypothesisError("multiplier coefficient must be positive");
  MultiplierProfile p;
  p.c = c;
  p.trivial = true;
  for (int j = 0; j <= m.a - m.k; ++j) {
    Rational t = c * (j + 1);
    Integer e = floor_q(t).get_num() + 1 - Integer(m.k + j) * (m.b - m.a + m.k + j);
    ProfileFactor f{m.k + j, e, e <= 0};
    p.trivial = p.trivial && f.trivial;
    p.factors.push_back(f);
  }
  if (m.k == 1) p.power_of_j1 = floor_q(c).get_num() + m.a - m.b;
  return p;
}

Integer jet_component_count(const GenericModel& m, int n) {
  validate_model(m.a, m.b, m.k);
  if (n < 0) throw HypothesisError("jet order must be >= 0");
  if (m.k == 1 || m.k == m.a) return 1;
  Rational q(n + 1, m.a - m.k + 1);
  q.canonicalize();
  return Integer(n + 2) - ceil_q(q).get_num();
}

BFunction bs_poly_maximal_minors(int a, int b) {
  validate_model(a, b, 1);
  std::vector<std::string> s{"s"};
  BFunction out{MultiPoly::constant(s, 1), {}};
  for (int i = b - a + 1; i <= b; ++i) {
    out.poly = out.poly * (MultiPoly::variable(s, 0) + MultiPoly::constant(s, i));
    out.roots.push_back(-i);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Integer& x, const Integer& y) { return x > y; });
  return out;
}

Zeta zeta_square(int a, int k) {
  validate_model(a, a, k);
  Zeta z;
  z.closed_form = true;
  z.subset_caveat = k > 1;
  for (int i = 0; i <= a - k; ++i) {
    Rational q(-Integer(a - i) * (a - i), Integer(a - k + 1 - i));
    q.canonicalize();
    z.poles.push_back(q);
  }
  sort_unique_decreasing(z.poles);
  return z;
}

ResolutionData resolution_data_generic(const GenericModel& m) {
  validate_model(m.a, m.b, m.k);
  ResolutionData r;
  for (int i = 0; i <= m.a - m.k; ++i)
    r.steps.push_back({i, "M_" + str(m.a - i), Integer(m.a - m.k + 1 - i), Integer(m.a - i) * (m.b - i)});
  return r;
}

Integer euler_obstruction(int a, int k) {
  validate_model(a, a, k);
  return binomial(a, a - k);
}

MldPair mld_generic(int a, int k, int k_prime) {
  validate_model(a, a, k);
  if (k_prime < k || k_prime > a) throw HypothesisError("need k <= k' <= a");
  return {Integer(k + 1), Integer(a) * a - Integer(k) * k_prime};
}

MonodromyCheck monodromy_check(int a, int b) {
  validate_model(a, b, 1);
  MonodromyCheck mc;
  std::vector<Rational> poles;
  if (a == b) {
    poles = zeta_square(a, 1).poles;
  } else {
    poles = resolution_data_generic({a, b, 1}).candidate_poles();
    mc.candidates_only = true;
  }
  auto roots = bs_poly_maximal_minors(a, b).roots;
  for (const auto& p : poles) {
    auto it = std::find_if(roots.begin(), roots.end(), [&](const Integer& r) { return Rational(r) == p; });
    if (it != roots.end())
      mc.matched.emplace_back(p, *it);
    else
      mc.unmatched.push_back(p);
  }
  mc.holds = mc.unmatched.empty();
  return mc;
}

std::vector<ProfileFactor> hodge_profile_square(int a, int p) {
  if (a < 1) throw HypothesisError("need a >= 1");
  if (p < 0) throw HypothesisError("Hodge level must be >= 0");
  std::vector<ProfileFactor> out;
  for (int k = 1; k <= a - 1; ++k) {
    Integer e = Integer(k) * (p - 1) - binomial(k, 2);
    out.push_back({k + 1, e, e <= 0});
  }
  return out;
}

MinexpBounds minexp_bounds(int dim_x, int mult_e, const ResolutionData& res) {
  if (dim_x < 1) throw HypothesisError("need dim X >= 1");
  MinexpBounds b;
  if (mult_e >= 2) b.upper = Rational(dim_x, mult_e), b.upper->canonicalize();
  for (const auto& s : res.steps) {
    if (s.nu <= 1) continue;  // a divisorial center is the strict transform, not exceptional
    Rational q(s.nu, s.N);
    q.canonicalize();
    if (!b.lower || q < *b.lower) b.lower = q;
  }
  return b;
}

OneGenericSquare one_generic_square_minexp_bounds(int a, int dim_n) {
  if (a < 2) throw HypothesisError("need a > 1");
  if (dim_n < 2 * a - 1) throw HypothesisError("a 1-generic space of a x a matrices has dimension >= 2a - 1");
  OneGenericSquare r{1, 1, std::nullopt};
  if (dim_n == 2 * a - 1) r.upper = Rational(2 * a - 1, a), r.upper->canonicalize();
  return r;
}

ResiliencyReport resiliency_bounds(int a, int b, int k, int codim, int h) {
  validate_model(a, b, k);
  if (codim < 0) throw HypothesisError("codimension must be >= 0");
  ResiliencyReport r;
  if (codim <= a - k) {
    r.cohen_macaulay = true;
    r.codim_nk = Integer(k) * (k + b - a);
    r.minors_independent = true;
    r.triggers.push_back("codim <= a-k: Cohen-Macaulay of codimension k(k+b-a); (a-k+1)-minors linearly independent");
  }
  if (codim <= a - k - 1) {
    r.variety = true;
    r.minors_prime = true;
    r.triggers.push_back("codim <= a-k-1: variety; each (a-k+1)-minor prime");
  }
  if (k > 1 && codim <= a - k - 2) {
    r.normal = true;
    r.triggers.push_back("k > 1 and codim <= a-k-2: normal");
  }
  if (codim == 0 && h >= 0 && k + h <= a) {
    r.h_codim_bound = Integer(k) * (b - a + 2 * h - k);
    r.triggers.push_back("N k-generic and k+h <= a: every component of N_h has codimension >= k(b-a+2h-k)");
  }
  return r;
}

}  // namespace jl
