#include <jumploci/linf/trees.hpp>

#include <stdexcept>

namespace jl {

namespace {

std::vector<std::shared_ptr<const RootedBinaryTree>> classes(int n) {
  std::vector<std::shared_ptr<const RootedBinaryTree>> out;
  if (n == 1) {
    auto leaf = std::make_shared<RootedBinaryTree>();
    leaf->shape = "*";
    out.push_back(leaf);
  } else {
    for (int n1 = n - 1; 2 * n1 >= n; --n1) {
      int n2 = n - n1;
      auto A = classes(n1);
      auto B = classes(n2);
      for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = (n1 == n2 ? i : 0); j < B.size(); ++j) {
          auto t = std::make_shared<RootedBinaryTree>();
          t->leaves = n;
          t->left = A[i];
          t->right = B[j];
          t->automorphisms = A[i]->automorphisms * B[j]->automorphisms;
          if (n1 == n2 && i == j) t->automorphisms *= 2;
          t->shape = "(" + A[i]->shape + "," + B[j]->shape + ")";
          out.push_back(t);
        }
    }
  }
  return out;
}

}  // namespace

std::vector<RootedBinaryTree> enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n >= 1 required");
  std::vector<RootedBinaryTree> out;
  for (const auto& t : classes(n)) out.push_back(*t);
  return out;
}

}  // namespace jl
