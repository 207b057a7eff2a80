#pragma once

#include <jumploci/exact/matrix.hpp>

#include <string>
#include <vector>

namespace jl {

// Finite-dimensional Z-graded space. Global basis indices run through the
// degrees in increasing order.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  GradedVectorSpace(int dmin, std::vector<int> dims, const std::string& prefix = "e");
  GradedVectorSpace(int dmin, std::vector<std::vector<std::string>> labels);

  int dmin() const { return dmin_; }
  int dmax() const { return dmin_ + static_cast<int>(dims_.size()) - 1; }
  int dim(int degree) const;
  int offset(int degree) const;  // global index of the first basis vector of that degree
  int total_dim() const { return total_; }
  int degree_of(int index) const { return degree_of_[index]; }
  const std::string& label(int index) const { return flat_labels_[index]; }
  std::vector<int> basis_of_degree(int degree) const;
  const std::vector<int>& dims() const { return dims_; }
  std::vector<int> degrees() const;

  Vec zero() const { return Vec(total_); }
  Vec basis(int index) const;
  // Degree of a nonzero homogeneous vector; throws if inhomogeneous or zero.
  int degree_of(const Vec& v) const;
  bool is_homogeneous_of(const Vec& v, int degree) const;

  friend bool operator==(const GradedVectorSpace& a, const GradedVectorSpace& b) {
    return a.dmin_ == b.dmin_ && a.dims_ == b.dims_ && a.flat_labels_ == b.flat_labels_;
  }

 private:
  void build(std::vector<std::vector<std::string>> labels);
  int dmin_ = 0;
  std::vector<int> dims_;
  int total_ = 0;
  std::vector<int> degree_of_;
  std::vector<std::string> flat_labels_;
};

// a (+) b with, in each degree, the basis of a first and then that of b.
struct DirectSum {
  GradedVectorSpace space;
  std::vector<int> from_first, from_second;  // index maps into the sum
  std::vector<int> part;                     // 0 or 1 per sum index
  std::vector<int> local;                    // index within its summand
};
DirectSum direct_sum(const GradedVectorSpace& a, const GradedVectorSpace& b);

}  // namespace jl
