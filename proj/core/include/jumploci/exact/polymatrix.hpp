#pragma once

#include <jumploci/exact/matrix.hpp>
#include <jumploci/exact/poly.hpp>

#include <optional>
#include <vector>

namespace jl {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, std::vector<std::string> vars,
             std::optional<TruncatedLocalRing> ring = std::nullopt);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::optional<TruncatedLocalRing>& ring() const { return ring_; }

  const MultiPoly& operator()(int r, int c) const { return entries_[size_t(r) * cols_ + c]; }
  void set(int r, int c, MultiPoly p);

  bool is_zero() const;
  int max_degree() const;
  // Every entry homogeneous of degree 1 (zero entries allowed).
  bool is_linear() const;

  PolyMatrix truncated(int order) const;  // reduce into K[x]/m^order
  PolyMatrix homogeneous_part(int d) const;
  PolyMatrix substitute(const std::vector<MultiPoly>& images,
                        const TruncatedLocalRing& target) const;
  Matrix evaluate(const std::vector<Rational>& point) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::string> vars_;
  std::optional<TruncatedLocalRing> ring_;
  std::vector<MultiPoly> entries_;
};

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix from_rational(const Matrix& m, std::vector<std::string> vars);

// Determinant by cofactor expansion with memoization over column subsets;
// products are truncated when the matrix carries a ring.
MultiPoly determinant(const PolyMatrix& m);

// All size-minors, rows subsets outer and column subsets inner, both in
// lexicographic order. size <= 0 gives {1}; size > min(rows, cols) gives {}.
std::vector<MultiPoly> minors(const PolyMatrix& m, int size);

// Lexicographic k-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace jl
