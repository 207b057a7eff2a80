#pragma once

#include <jumploci/exact/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace jl {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Graded-lex with higher total degree first, then lexicographically larger
// exponent first (x1 > x2 > ...). Iteration order of MultiPoly::terms().
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class TruncatedLocalRing;

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, int index);
  static MultiPoly monomial(std::vector<std::string> vars, Exponent e, const Rational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  int num_vars() const { return static_cast<int>(vars_.size()); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;
  int degree() const;      // -1 for zero
  int low_degree() const;  // -1 for zero
  bool is_homogeneous() const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly homogeneous_part(int d) const;
  MultiPoly truncated(int order) const;  // drop total degree >= order
  // Leading term (first in grlex-descending order) scaled to coefficient 1.
  MultiPoly monic() const;
  Rational leading_coefficient() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Substitute vars[i] -> images[i]; images share a common variable list.
  // When ring is non-null, intermediate products are truncated in it.
  MultiPoly substitute(const std::vector<MultiPoly>& images,
                       const TruncatedLocalRing* ring = nullptr) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  std::vector<std::string> vars_;
  TermMap terms_;
};

// Variable names x1..xn (1-based) or prefix + index.
std::vector<std::string> indexed_names(const std::string& prefix, int n, int first = 1);

MultiPoly initial_form(const MultiPoly& p);  // throws on zero

// K[t_1..t_s]/m^N.
class TruncatedLocalRing {
 public:
  TruncatedLocalRing(std::vector<std::string> vars, int order);
  TruncatedLocalRing(int num_vars, int order);

  int num_vars() const { return static_cast<int>(vars_.size()); }
  int order() const { return order_; }
  const std::vector<std::string>& vars() const { return vars_; }

  MultiPoly reduce(const MultiPoly& p) const;
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const;
  MultiPoly zero() const { return MultiPoly(vars_); }
  MultiPoly one() const { return MultiPoly::constant(vars_, 1); }
  MultiPoly var(int i) const { return MultiPoly::variable(vars_, i); }
  bool is_unit(const MultiPoly& p) const { return p.constant_term() != 0; }
  bool in_maximal_ideal(const MultiPoly& p) const { return p.constant_term() == 0; }

  friend bool operator==(const TruncatedLocalRing& a, const TruncatedLocalRing& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> vars_;
  int order_;
};

MultiPoly poly_mul_truncated(const MultiPoly& a, const MultiPoly& b,
                             const TruncatedLocalRing& ring);

// Canonical generator set of an ideal: zeros dropped, each generator made
// monic, duplicates removed, sorted. A generator with nonzero constant term
// makes the whole set {1} (unit ideal in a local ring, and in K[x] for a
// nonzero constant).
std::vector<MultiPoly> ideal_normal_form(const std::vector<MultiPoly>& gens,
                                         bool local = true);

bool poly_less(const MultiPoly& a, const MultiPoly& b);

}  // namespace jl
