#pragma once

#include <jumploci/exact/rational.hpp>

#include <memory>
#include <string>
#include <vector>

namespace jl {

// Rooted binary tree up to swapping children. The stored children give the
// left-heavy planar representative: more leaves on the left, and for equal
// leaf counts the earlier class (in enumeration order) on the left.
struct RootedBinaryTree {
  int leaves = 1;
  Integer automorphisms = 1;
  std::string shape;  // "*" for a leaf, "(L,R)" otherwise
  std::shared_ptr<const RootedBinaryTree> left, right;

  bool is_leaf() const { return leaves == 1; }
  int internal_vertices() const { return leaves - 1; }
};

// All isomorphism classes with n leaves, in deterministic left-heavy order.
std::vector<RootedBinaryTree> enumerate_trees(int n);

}  // namespace jl
