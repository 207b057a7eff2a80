#include <jumploci/linf/structures.hpp>

#include <functional>
#include <stdexcept>

namespace jl {

MultilinearMap::MultilinearMap(GradedVectorSpace source, GradedVectorSpace target, int arity,
                               int degree, Symmetry symmetry,
                               std::optional<GradedVectorSpace> module)
    : source_(std::move(source)), target_(std::move(target)), module_(std::move(module)),
      arity_(arity), degree_(degree), symmetry_(symmetry) {
  if (arity < 1) throw std::invalid_argument("arity must be >= 1");
}

int MultilinearMap::sign_degree(int index) const {
  int d = source_.degree_of(index);
  return symmetry_ == Symmetry::Symmetric ? d - 1 : d;
}

int MultilinearMap::canonicalize(std::vector<int>& t) const {
  int n = block_arity();
  if (static_cast<int>(t.size()) != arity_) throw std::invalid_argument("tuple length != arity");
  for (int p = 0; p < n; ++p)
    if (t[p] < 0 || t[p] >= source_.total_dim()) throw std::out_of_range("basis index");
  if (module_ && (t.back() < 0 || t.back() >= module_->total_dim()))
    throw std::out_of_range("module basis index");
  int sign = 1;
  bool anti = symmetry_ == Symmetry::Antisymmetric;
  for (int i = 1; i < n; ++i)
    for (int j = i; j > 0 && t[j - 1] > t[j]; --j) {
      int dx = sign_degree(t[j - 1]), dy = sign_degree(t[j]);
      int s = ((dx & 1) && (dy & 1)) ? -1 : 1;
      if (anti) s = -s;
      sign *= s;
      std::swap(t[j - 1], t[j]);
    }
  for (int i = 1; i < n; ++i)
    if (t[i] == t[i - 1] && !(source_.degree_of(t[i]) & 1)) return 0;
  return sign;
}

int MultilinearMap::tuple_degree(const std::vector<int>& t) const {
  int d = 0;
  for (int p = 0; p < block_arity(); ++p) d += source_.degree_of(t[p]);
  if (module_) d += module_->degree_of(t.back());
  return d;
}

Vec MultilinearMap::at(std::vector<int> tuple) const {
  int s = canonicalize(tuple);
  if (s == 0) return target_.zero();
  auto it = values_.find(tuple);
  if (it == values_.end()) return target_.zero();
  return s > 0 ? it->second : scale(it->second, -1);
}

void MultilinearMap::set(std::vector<int> tuple, const Vec& value) {
  if (static_cast<int>(value.size()) != target_.total_dim())
    throw std::invalid_argument("value has wrong length");
  int s = canonicalize(tuple);
  if (s == 0) {
    if (!jl::is_zero(value)) throw std::invalid_argument("nonzero value on a tuple forced to vanish");
    return;
  }
  if (jl::is_zero(value)) {
    values_.erase(tuple);
    return;
  }
  if (!target_.is_homogeneous_of(value, tuple_degree(tuple) + degree_))
    throw std::invalid_argument("value has the wrong degree for this operation");
  values_[tuple] = s > 0 ? value : scale(value, -1);
}

void MultilinearMap::add(std::vector<int> tuple, const Vec& value) {
  if (jl::is_zero(value)) return;
  Vec cur = at(tuple);
  set(tuple, jl::add(cur, value));
}

Vec MultilinearMap::apply(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("apply: wrong arity");
  std::vector<std::vector<std::pair<int, Rational>>> nz(arity_);
  for (int p = 0; p < arity_; ++p) {
    const auto& sp = (module_ && p == arity_ - 1) ? *module_ : source_;
    if (static_cast<int>(args[p].size()) != sp.total_dim())
      throw std::invalid_argument("apply: argument length mismatch");
    for (int i = 0; i < sp.total_dim(); ++i)
      if (args[p][i] != 0) nz[p].emplace_back(i, args[p][i]);
    if (nz[p].empty()) return target_.zero();
  }
  Vec out = target_.zero();
  std::vector<int> tuple(arity_);
  std::function<void(int, Rational)> rec = [&](int p, Rational c) {
    if (p == arity_) {
      axpy(out, c, at(tuple));
      return;
    }
    for (const auto& [i, x] : nz[p]) {
      tuple[p] = i;
      rec(p + 1, c * x);
    }
  };
  rec(0, 1);
  return out;
}

MultilinearMap MultilinearMap::scaled(const Rational& c) const {
  MultilinearMap r = *this;
  if (c == 0) {
    r.values_.clear();
    return r;
  }
  for (auto& [t, v] : r.values_) v = scale(v, c);
  return r;
}

MultilinearMap MultilinearMap::with_symmetry(Symmetry s) const {
  MultilinearMap r = *this;
  r.symmetry_ = s;
  return r;
}

bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
  return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.symmetry_ == b.symmetry_ &&
         a.source_ == b.source_ && a.target_ == b.target_ && a.module_ == b.module_ &&
         a.values_ == b.values_;
}

std::vector<std::vector<int>> canonical_tuples(const GradedVectorSpace& space, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  int dim = space.total_dim();
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < dim; ++i) {
      if (!cur.empty() && cur.back() == i && !(space.degree_of(i) & 1)) continue;
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

MultilinearMap make_operation(const GradedVectorSpace& L, int n, int degree, Symmetry s) {
  return MultilinearMap(L, L, n, degree, s);
}

MultilinearMap make_module_operation(const GradedVectorSpace& L, const GradedVectorSpace& V, int n,
                                     int degree, Symmetry s) {
  return MultilinearMap(L, V, n, degree, s, V);
}

LInfinityAlgebra LInfinityAlgebra::zero(const GradedVectorSpace& space, int arity_cap, bool exact) {
  LInfinityAlgebra A;
  A.space = space;
  A.arity_cap = arity_cap;
  A.exact = exact;
  for (int n = 1; n <= arity_cap; ++n) A.ops.push_back(make_operation(space, n, 2 - n));
  return A;
}

bool LInfinityAlgebra::is_dgla() const {
  if (!exact) return false;
  for (int n = 3; n <= arity_cap; ++n)
    if (!l(n).is_zero()) return false;
  return true;
}

LInfinityPair LInfinityPair::zero(const GradedVectorSpace& L, const GradedVectorSpace& V,
                                  int arity_cap, bool exact) {
  LInfinityPair P;
  P.algebra = LInfinityAlgebra::zero(L, arity_cap, exact);
  P.module_space = V;
  P.arity_cap = arity_cap;
  P.exact = exact;
  for (int n = 1; n <= arity_cap; ++n) P.module_ops.push_back(make_module_operation(L, V, n, 2 - n));
  return P;
}

ReducedPair reduce_pair(const LInfinityPair& P) {
  const auto& L = P.algebra.space;
  const auto& V = P.module_space;
  ReducedPair R;
  R.layout = direct_sum(L, V);
  const auto& S = R.layout.space;
  R.algebra = LInfinityAlgebra::zero(S, P.arity_cap, P.exact && P.algebra.exact);
  auto embed_L = [&](const Vec& v) {
    Vec out = S.zero();
    for (int i = 0; i < L.total_dim(); ++i) out[R.layout.from_first[i]] = v[i];
    return out;
  };
  auto embed_V = [&](const Vec& v) {
    Vec out = S.zero();
    for (int i = 0; i < V.total_dim(); ++i) out[R.layout.from_second[i]] = v[i];
    return out;
  };
  for (int n = 1; n <= P.arity_cap; ++n) {
    auto& j = R.algebra.l(n);
    for (const auto& t : canonical_tuples(S, n)) {
      int vcount = 0, vpos = -1;
      for (int p = 0; p < n; ++p)
        if (R.layout.part[t[p]] == 1) {
          ++vcount;
          vpos = p;
        }
      if (vcount == 0) {
        std::vector<int> a;
        for (int x : t) a.push_back(R.layout.local[x]);
        j.set(t, embed_L(P.algebra.l(n).at(a)));
      } else if (vcount == 1) {
        std::vector<int> args;
        int later = 0;
        for (int p = 0; p < n; ++p) {
          if (p == vpos) continue;
          args.push_back(R.layout.local[t[p]]);
          if (p > vpos) later += S.degree_of(t[p]);
        }
        int v = R.layout.local[t[vpos]];
        args.push_back(v);
        int i = vpos + 1;
        long theta = (n - i) + long(V.degree_of(v)) * later;
        Vec val = P.m(n).at(args);
        if (theta % 2) val = scale(val, -1);
        j.set(t, embed_V(val));
      }
    }
  }
  return R;
}

LInfinityPair split_pair(const LInfinityAlgebra& J, const DirectSum& layout,
                         const GradedVectorSpace& L, const GradedVectorSpace& V) {
  LInfinityPair P = LInfinityPair::zero(L, V, J.arity_cap, J.exact);
  const auto& S = layout.space;
  auto part_of = [&](const Vec& v, int which) {
    Vec out = which == 0 ? L.zero() : V.zero();
    for (int i = 0; i < S.total_dim(); ++i) {
      if (v[i] == 0) continue;
      if (layout.part[i] == which) out[layout.local[i]] = v[i];
    }
    return out;
  };
  for (int n = 1; n <= J.arity_cap; ++n) {
    for (const auto& [t, val] : J.l(n).values()) {
      int vcount = 0;
      for (int x : t) vcount += layout.part[x];
      if (vcount == 0) {
        if (!is_zero(part_of(val, 1)))
          throw std::domain_error("split_pair: L is not a subalgebra");
        std::vector<int> a;
        for (int x : t) a.push_back(layout.local[x]);
        P.algebra.l(n).set(a, part_of(val, 0));
      } else if (vcount == 1) {
        if (!is_zero(part_of(val, 0)))
          throw std::domain_error("split_pair: second grading violated");
      } else {
        throw std::domain_error("split_pair: nonzero operation on two module inputs");
      }
    }
    // m_n(a_1..a_{n-1}, v) is the V-part of j_n(a_1, .., a_{n-1}, v).
    for (const auto& a : canonical_tuples(L, n - 1))
      for (int v = 0; v < V.total_dim(); ++v) {
        std::vector<int> t;
        for (int x : a) t.push_back(layout.from_first[x]);
        t.push_back(layout.from_second[v]);
        Vec val = part_of(J.l(n).at(t), 1);
        std::vector<int> key = a;
        key.push_back(v);
        P.m(n).set(key, val);
      }
  }
  P.algebra.verified = P.verified = J.verified;
  return P;
}

}  // namespace jl
