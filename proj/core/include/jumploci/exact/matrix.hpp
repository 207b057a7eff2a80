#pragma once

#include <jumploci/exact/rational.hpp>

#include <string>
#include <vector>

namespace jl {

using Vec = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols = -1);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec column(int c) const;
  Matrix transpose() const;
  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  bool is_zero() const;

  Vec apply(const Vec& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  int rank = 0;
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
  std::vector<Vec> kernel;  // one vector per free column, 1 at that column
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);
std::vector<Vec> kernel(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws if singular
Rational determinant(const Matrix& m);
// Some x with m x = b, or false if inconsistent.
bool solve(const Matrix& m, const Vec& b, Vec& x);
// Basis of the column space (as columns of m, chosen at pivot positions).
std::vector<int> pivot_columns(const Matrix& m);

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& c);
void axpy(Vec& y, const Rational& c, const Vec& x);  // y += c x

}  // namespace jl
