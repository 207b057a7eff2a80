#pragma once

#include <jumploci/linf/graded.hpp>
#include <jumploci/linf/signs.hpp>

#include <map>
#include <optional>
#include <vector>

namespace jl {

enum class Symmetry {
  Antisymmetric,  // graded antisymmetric in L (Koszul signs with |v|)
  Symmetric       // graded symmetric in L[1] (Koszul signs with |v| - 1)
};

// n-ary operation on a graded space, or on L^{n-1} (x) V for module maps
// (the V slot is last and never permuted). Values are stored only on
// canonical tuples: the L-block weakly increasing, with a repeated basis
// vector allowed only when it does not force the value to vanish (odd degree
// in the antisymmetric convention, even shifted degree in the symmetric one;
// these coincide). Degrees are unshifted: a tuple of total degree D maps to
// degree D + degree.
class MultilinearMap {
 public:
  MultilinearMap() = default;
  MultilinearMap(GradedVectorSpace source, GradedVectorSpace target, int arity, int degree,
                 Symmetry symmetry, std::optional<GradedVectorSpace> module = std::nullopt);

  const GradedVectorSpace& source() const { return source_; }
  const GradedVectorSpace& target() const { return target_; }
  const std::optional<GradedVectorSpace>& module() const { return module_; }
  bool is_module_map() const { return module_.has_value(); }
  int arity() const { return arity_; }
  int block_arity() const { return module_ ? arity_ - 1 : arity_; }
  int degree() const { return degree_; }
  Symmetry symmetry() const { return symmetry_; }
  const std::map<std::vector<int>, Vec>& values() const { return values_; }

  // Sorts the L-block in place; returns the Koszul sign, or 0 if the value
  // vanishes by symmetry.
  int canonicalize(std::vector<int>& tuple) const;
  int tuple_degree(const std::vector<int>& tuple) const;

  Vec at(std::vector<int> tuple) const;
  void set(std::vector<int> tuple, const Vec& value);
  void add(std::vector<int> tuple, const Vec& value);
  Vec apply(const std::vector<Vec>& args) const;

  bool is_zero() const { return values_.empty(); }
  MultilinearMap scaled(const Rational& c) const;
  MultilinearMap with_symmetry(Symmetry s) const;  // same stored values

  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b);

 private:
  int sign_degree(int slot_index) const;
  GradedVectorSpace source_, target_;
  std::optional<GradedVectorSpace> module_;
  int arity_ = 1;
  int degree_ = 0;
  Symmetry symmetry_ = Symmetry::Antisymmetric;
  std::map<std::vector<int>, Vec> values_;
};

// Canonical L-blocks of length n (weakly increasing; repeats only of odd
// degree basis vectors).
std::vector<std::vector<int>> canonical_tuples(const GradedVectorSpace& space, int n);

struct LInfinityAlgebra {
  GradedVectorSpace space;
  std::vector<MultilinearMap> ops;  // ops[n-1] = l_n, 1 <= n <= arity_cap
  int arity_cap = 5;
  bool verified = false;
  // True when every l_n with n > arity_cap is known to vanish (dglas and
  // hand-built structures), so truncation at the cap loses nothing.
  bool exact = false;

  static LInfinityAlgebra zero(const GradedVectorSpace& space, int arity_cap, bool exact = true);
  MultilinearMap& l(int n) { return ops.at(n - 1); }
  const MultilinearMap& l(int n) const { return ops.at(n - 1); }
  bool is_dgla() const;  // exact and l_n = 0 for n >= 3
};

struct LInfinityPair {
  LInfinityAlgebra algebra;
  GradedVectorSpace module_space;
  std::vector<MultilinearMap> module_ops;  // module_ops[n-1] = m_n
  int arity_cap = 5;
  bool verified = false;
  bool exact = false;

  static LInfinityPair zero(const GradedVectorSpace& L, const GradedVectorSpace& V, int arity_cap,
                            bool exact = true);
  MultilinearMap& m(int n) { return module_ops.at(n - 1); }
  const MultilinearMap& m(int n) const { return module_ops.at(n - 1); }
};

MultilinearMap make_operation(const GradedVectorSpace& L, int n, int degree,
                              Symmetry s = Symmetry::Antisymmetric);
MultilinearMap make_module_operation(const GradedVectorSpace& L, const GradedVectorSpace& V, int n,
                                     int degree, Symmetry s = Symmetry::Antisymmetric);

// Module <-> algebra reduction on L (+) V with
// j_n = (l_n, sum_i (-1)^{theta(n,i)} m_n(a_1..^a_i..a_n, v_i)),
// theta(n,i) = n - i + |v_i|(|a_{i+1}| + ... + |a_n|).
struct ReducedPair {
  LInfinityAlgebra algebra;
  DirectSum layout;
};
ReducedPair reduce_pair(const LInfinityPair& P);
// Inverse reading: l_n on L-tuples and m_n(a.., v) = V-part of j_n(a.., v).
// Throws if j does not have the shape produced by reduce_pair.
LInfinityPair split_pair(const LInfinityAlgebra& J, const DirectSum& layout,
                         const GradedVectorSpace& L, const GradedVectorSpace& V);

}  // namespace jl
