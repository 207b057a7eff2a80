#include <jumploci/linf/transfer.hpp>

#include <jumploci/linf/checker.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jl {

namespace {

struct TreeEval {
  const LInfinityAlgebra& dgla;
  const HomotopyRetract& r;
  const std::vector<int>& inputs;
  std::vector<int> prefix_degree;  // sum of input degrees before position k

  // Value of the subtree whose leftmost leaf is input `first`.
  Vec eval(const RootedBinaryTree& t, int first) const {
    if (t.is_leaf()) return r.iota.column(inputs[first]);
    Vec x = eval(*t.left, first);
    Vec y = eval(*t.right, first + t.left->leaves);
    if (!t.left->is_leaf()) x = apply_h(x, first);
    if (!t.right->is_leaf()) y = apply_h(y, first + t.left->leaves);
    if (is_zero(x) || is_zero(y)) return dgla.space.zero();
    return dgla.l(2).apply({x, y});
  }

  Vec apply_h(const Vec& x, int first) const {
    Vec y = r.h.apply(x);
    if (prefix_degree[first] & 1) y = scale(y, -1);
    return y;
  }
};

}  // namespace

Vec tree_operation(const LInfinityAlgebra& dgla, const HomotopyRetract& r,
                   const RootedBinaryTree& tree, const std::vector<int>& inputs) {
  if (static_cast<int>(inputs.size()) != tree.leaves)
    throw std::invalid_argument("tree_operation: wrong number of inputs");
  TreeEval ev{dgla, r, inputs, {}};
  ev.prefix_degree.assign(inputs.size() + 1, 0);
  for (size_t k = 0; k < inputs.size(); ++k)
    ev.prefix_degree[k + 1] = ev.prefix_degree[k] + r.cohomology.degree_of(inputs[k]);
  Vec top = ev.eval(tree, 0);
  return r.p.apply(top);
}

LInfinityAlgebra transfer_algebra(const LInfinityAlgebra& dgla, const HomotopyRetract& r,
                                  int arity_cap, bool verify) {
  if (!dgla.is_dgla()) throw std::invalid_argument("transfer_algebra: input is not a dgla");
  if (!(r.complex.space == dgla.space) || !(r.complex.d == underlying_complex(dgla).d))
    throw std::invalid_argument("transfer_algebra: retract does not match the dgla");
  const auto& H = r.cohomology;
  LInfinityAlgebra out = LInfinityAlgebra::zero(H, arity_cap, false);
  for (int n = 2; n <= arity_cap; ++n) {
    auto trees = enumerate_trees(n);
    for (const auto& a : canonical_tuples(H, n)) {
      std::vector<int> degs;
      int total = 0;
      for (int x : a) {
        degs.push_back(H.degree_of(x));
        total += H.degree_of(x);
      }
      if (H.dim(total + 2 - n) == 0) continue;
      Vec sum = H.zero();
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<int> in(n);
        for (int p = 0; p < n; ++p) in[p] = a[perm[p]];
        int chi = koszul_sign(perm, degs, SignVariant::Antisymmetric);
        for (const auto& t : trees) {
          Vec v = tree_operation(dgla, r, t, in);
          if (is_zero(v)) continue;
          axpy(sum, Rational(chi) / Rational(t.automorphisms), v);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      out.l(n).set(a, sum);
    }
  }
  if (verify) {
    auto res = check_algebra(out, arity_cap);
    if (!res.empty())
      throw std::logic_error("transferred structure fails the L-infinity axioms at arity " +
                             std::to_string(res.front().arity));
    out.verified = true;
  }
  return out;
}

LInfinityPair transfer_pair(const LInfinityPair& pair, const HomotopyRetract& rc,
                            const HomotopyRetract& rm, int arity_cap, bool verify) {
  if (!pair.algebra.is_dgla() || !pair.exact)
    throw std::invalid_argument("transfer_pair: input is not a dgl pair");
  for (int n = 3; n <= pair.arity_cap; ++n)
    if (!pair.m(n).is_zero()) throw std::invalid_argument("transfer_pair: input is not a dgl pair");
  auto red = reduce_pair(pair);
  auto hl = direct_sum(rc.cohomology, rm.cohomology);
  auto rs = sum_retract(rc, rm, red.layout, hl);
  auto J = transfer_algebra(red.algebra, rs, arity_cap, verify);
  auto out = split_pair(J, hl, rc.cohomology, rm.cohomology);
  out.verified = out.algebra.verified = J.verified;
  out.exact = out.algebra.exact = false;
  return out;
}

LInfinityPair transfer_pair(const LInfinityPair& pair, int arity_cap, bool verify) {
  auto rc = build_retract(underlying_complex(pair.algebra));
  auto rm = build_retract(module_complex(pair));
  return transfer_pair(pair, rc, rm, arity_cap, verify);
}

}  // namespace jl
