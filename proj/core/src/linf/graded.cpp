#include <jumploci/linf/graded.hpp>

#include <set>
#include <stdexcept>

namespace jl {

GradedVectorSpace::GradedVectorSpace(int dmin, std::vector<int> dims, const std::string& prefix)
    : dmin_(dmin) {
  std::vector<std::vector<std::string>> labels;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0) throw std::invalid_argument("negative dimension");
    std::vector<std::string> l;
    for (int j = 0; j < dims[i]; ++j)
      l.push_back(prefix + std::to_string(dmin + int(i)) + "_" + std::to_string(j + 1));
    labels.push_back(std::move(l));
  }
  build(std::move(labels));
}

GradedVectorSpace::GradedVectorSpace(int dmin, std::vector<std::vector<std::string>> labels)
    : dmin_(dmin) {
  build(std::move(labels));
}

void GradedVectorSpace::build(std::vector<std::vector<std::string>> labels) {
  dims_.clear();
  degree_of_.clear();
  flat_labels_.clear();
  for (size_t i = 0; i < labels.size(); ++i) {
    std::set<std::string> seen(labels[i].begin(), labels[i].end());
    if (seen.size() != labels[i].size()) throw std::invalid_argument("duplicate basis labels");
    dims_.push_back(static_cast<int>(labels[i].size()));
    for (auto& l : labels[i]) {
      degree_of_.push_back(dmin_ + int(i));
      flat_labels_.push_back(std::move(l));
    }
  }
  total_ = static_cast<int>(flat_labels_.size());
}

int GradedVectorSpace::dim(int degree) const {
  if (degree < dmin_ || degree > dmax()) return 0;
  return dims_[degree - dmin_];
}

int GradedVectorSpace::offset(int degree) const {
  int off = 0;
  for (int d = dmin_; d < degree && d <= dmax(); ++d) off += dims_[d - dmin_];
  return off;
}

std::vector<int> GradedVectorSpace::basis_of_degree(int degree) const {
  std::vector<int> v;
  int off = offset(degree);
  for (int j = 0; j < dim(degree); ++j) v.push_back(off + j);
  return v;
}

std::vector<int> GradedVectorSpace::degrees() const {
  std::vector<int> d;
  for (int i = dmin_; i <= dmax(); ++i) d.push_back(i);
  return d;
}

Vec GradedVectorSpace::basis(int index) const {
  Vec v(total_);
  v.at(index) = 1;
  return v;
}

int GradedVectorSpace::degree_of(const Vec& v) const {
  int deg = 0;
  bool found = false;
  for (int i = 0; i < total_; ++i) {
    if (v[i] == 0) continue;
    if (found && degree_of_[i] != deg) throw std::invalid_argument("inhomogeneous vector");
    deg = degree_of_[i];
    found = true;
  }
  if (!found) throw std::invalid_argument("degree of zero vector");
  return deg;
}

bool GradedVectorSpace::is_homogeneous_of(const Vec& v, int degree) const {
  if (static_cast<int>(v.size()) != total_) return false;
  for (int i = 0; i < total_; ++i)
    if (v[i] != 0 && degree_of_[i] != degree) return false;
  return true;
}

DirectSum direct_sum(const GradedVectorSpace& a, const GradedVectorSpace& b) {
  DirectSum s;
  int lo = std::min(a.total_dim() ? a.dmin() : b.dmin(), b.total_dim() ? b.dmin() : a.dmin());
  int hi = std::max(a.total_dim() ? a.dmax() : b.dmax(), b.total_dim() ? b.dmax() : a.dmax());
  std::vector<std::vector<std::string>> labels;
  s.from_first.assign(a.total_dim(), -1);
  s.from_second.assign(b.total_dim(), -1);
  int idx = 0;
  for (int d = lo; d <= hi; ++d) {
    std::vector<std::string> l;
    for (int i : a.basis_of_degree(d)) {
      l.push_back(a.label(i));
      s.from_first[i] = idx++;
      s.part.push_back(0);
      s.local.push_back(i);
    }
    for (int i : b.basis_of_degree(d)) {
      std::string name = b.label(i);
      for (const auto& x : l)
        if (x == name) name += "'";
      l.push_back(name);
      s.from_second[i] = idx++;
      s.part.push_back(1);
      s.local.push_back(i);
    }
    labels.push_back(std::move(l));
  }
  s.space = GradedVectorSpace(lo, std::move(labels));
  return s;
}

}  // namespace jl
