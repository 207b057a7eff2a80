#include <jumploci/exact/polymatrix.hpp>

#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace jl {

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<std::string> vars,
                       std::optional<TruncatedLocalRing> ring)
    : rows_(rows), cols_(cols), vars_(std::move(vars)), ring_(std::move(ring)),
      entries_(size_t(rows) * cols, MultiPoly(vars_)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  if (ring_ && ring_->vars() != vars_) throw std::invalid_argument("ring/variable mismatch");
}

void PolyMatrix::set(int r, int c, MultiPoly p) {
  if (p.vars() != vars_) throw std::invalid_argument("entry variable mismatch");
  entries_[size_t(r) * cols_ + c] = ring_ ? ring_->reduce(p) : std::move(p);
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

bool PolyMatrix::is_linear() const {
  for (const auto& e : entries_)
    if (!e.is_zero() && (e.degree() != 1 || e.low_degree() != 1)) return false;
  return true;
}

PolyMatrix PolyMatrix::truncated(int order) const {
  PolyMatrix r(rows_, cols_, vars_, TruncatedLocalRing(vars_, order));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, (*this)(i, j));
  return r;
}

PolyMatrix PolyMatrix::homogeneous_part(int d) const {
  PolyMatrix r(rows_, cols_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, (*this)(i, j).homogeneous_part(d));
  return r;
}

PolyMatrix PolyMatrix::substitute(const std::vector<MultiPoly>& images,
                                  const TruncatedLocalRing& target) const {
  PolyMatrix r(rows_, cols_, target.vars(), target);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, (*this)(i, j).substitute(images, &target));
  return r;
}

Matrix PolyMatrix::evaluate(const std::vector<Rational>& point) const {
  Matrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("product: size mismatch");
  if (a.vars_ != b.vars_) throw std::invalid_argument("product: variable mismatch");
  std::optional<TruncatedLocalRing> ring = a.ring_ ? a.ring_ : b.ring_;
  PolyMatrix r(a.rows_, b.cols_, a.vars_, ring);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) {
      MultiPoly s(a.vars_);
      for (int k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        const auto& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        s += ring ? ring->mul(x, y) : x * y;
      }
      r.set(i, j, std::move(s));
    }
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.vars_ == b.vars_ &&
         a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("block_diagonal: variable mismatch");
  std::optional<TruncatedLocalRing> ring = a.ring() ? a.ring() : b.ring();
  PolyMatrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.vars(), ring);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, a.cols() + j, b(i, j));
  return r;
}

PolyMatrix from_rational(const Matrix& m, std::vector<std::string> vars) {
  PolyMatrix r(m.rows(), m.cols(), vars);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(i, j, MultiPoly::constant(vars, m(i, j)));
  return r;
}

MultiPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows();
  if (n > 30) throw std::invalid_argument("determinant: matrix too large");
  const auto& ring = m.ring();
  auto mul = [&](const MultiPoly& a, const MultiPoly& b) { return ring ? ring->mul(a, b) : a * b; };
  std::unordered_map<uint32_t, MultiPoly> memo;
  // Expand along row r = popcount(used) over the unused columns.
  std::function<MultiPoly(uint32_t)> rec = [&](uint32_t used) -> MultiPoly {
    int r = __builtin_popcount(used);
    if (r == n) return MultiPoly::constant(m.vars(), 1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    MultiPoly s(m.vars());
    int free_before = 0;
    for (int c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      const auto& e = m(r, c);
      if (!e.is_zero()) {
        MultiPoly sub = rec(used | (1u << c));
        if (!sub.is_zero()) {
          MultiPoly t = mul(e, sub);
          if (free_before % 2) s -= t;
          else s += t;
        }
      }
      ++free_before;
    }
    memo.emplace(used, s);
    return s;
  };
  return rec(0);
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<MultiPoly> minors(const PolyMatrix& m, int size) {
  if (size <= 0) return {MultiPoly::constant(m.vars(), 1)};
  if (size > std::min(m.rows(), m.cols())) return {};
  std::vector<MultiPoly> out;
  auto rs = subsets(m.rows(), size), cs = subsets(m.cols(), size);
  for (const auto& r : rs)
    for (const auto& c : cs) {
      PolyMatrix sub(size, size, m.vars(), m.ring());
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) sub.set(i, j, m(r[i], c[j]));
      out.push_back(determinant(sub));
    }
  return out;
}

}  // namespace jl
