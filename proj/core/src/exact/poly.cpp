#include <jumploci/exact/poly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jl {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto check = [&](const std::string& part, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) throw std::invalid_argument("malformed rational: " + s);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + s);
  };
  Rational q;
  if (slash == std::string::npos) {
    check(s, true);
    q = Rational(Integer(s[0] == '+' ? s.substr(1) : s));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check(num, true);
    check(den, false);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    q = Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
  }
  return q;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Rational ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, int index) {
  if (index < 0 || index >= static_cast<int>(vars.size()))
    throw std::out_of_range("variable index");
  MultiPoly p(std::move(vars));
  Exponent e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponent e, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

int MultiPoly::low_degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const { return degree() == low_degree(); }

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent length mismatch");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) r.terms_.emplace(e, c);
  return r;
}

MultiPoly MultiPoly::truncated(int order) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) < order) r.terms_.emplace(e, c);
  return r;
}

Rational MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  Rational lc = leading_coefficient();
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c /= lc;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable-list mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

static MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, int order) {
  if (a.vars() != b.vars()) throw std::invalid_argument("variable-list mismatch");
  MultiPoly r(a.vars());
  Exponent e(a.vars().size());
  for (const auto& [ea, ca] : a.terms()) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (order >= 0 && da + total_degree(eb) >= order) continue;
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b, -1); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images,
                                const TruncatedLocalRing* ring) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("substitution arity mismatch");
  std::vector<std::string> target =
      ring ? ring->vars() : (images.empty() ? std::vector<std::string>{} : images[0].vars());
  MultiPoly result(target);
  auto mul = [&](const MultiPoly& x, const MultiPoly& y) {
    return ring ? ring->mul(x, y) : x * y;
  };
  // Cache powers per variable.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MultiPoly::constant(target, 1));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(mul(pw.back(), images[i]));
      term = mul(term, pw[e[i]]);
    }
    result += term;
  }
  return ring ? ring->reduce(result) : result;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation arity mismatch");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool is_const = total_degree(e) == 0;
    if (a != 1 || is_const) {
      os << a.get_str();
      if (!is_const) os << "*";
    }
    bool first_var = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::vector<std::string> indexed_names(const std::string& prefix, int n, int first) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(first + i));
  return v;
}

MultiPoly initial_form(const MultiPoly& p) {
  if (p.is_zero()) throw std::domain_error("initial form of zero polynomial");
  return p.homogeneous_part(p.low_degree());
}

TruncatedLocalRing::TruncatedLocalRing(std::vector<std::string> vars, int order)
    : vars_(std::move(vars)), order_(order) {
  if (order < 1) throw std::invalid_argument("ring order must be >= 1");
}

TruncatedLocalRing::TruncatedLocalRing(int num_vars, int order)
    : TruncatedLocalRing(indexed_names("t", num_vars), order) {}

MultiPoly TruncatedLocalRing::reduce(const MultiPoly& p) const {
  if (p.vars() != vars_) throw std::invalid_argument("polynomial not over this ring");
  return p.truncated(order_);
}

MultiPoly TruncatedLocalRing::mul(const MultiPoly& a, const MultiPoly& b) const {
  if (a.vars() != vars_ || b.vars() != vars_)
    throw std::invalid_argument("variable-count mismatch");
  return multiply(a, b, order_);
}

MultiPoly poly_mul_truncated(const MultiPoly& a, const MultiPoly& b,
                             const TruncatedLocalRing& ring) {
  return ring.mul(a, b);
}

bool poly_less(const MultiPoly& a, const MultiPoly& b) {
  GrlexDescending cmp;
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return cmp(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

std::vector<MultiPoly> ideal_normal_form(const std::vector<MultiPoly>& gens, bool local) {
  std::vector<MultiPoly> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    bool unit = local ? g.constant_term() != 0 : g.is_constant();
    if (unit) return {MultiPoly::constant(g.vars(), 1)};
    out.push_back(g.monic());
  }
  std::sort(out.begin(), out.end(), poly_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace jl
