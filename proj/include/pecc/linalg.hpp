#ifndef PECC_LINALG_HPP
#define PECC_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace pecc {

// Dense square matrix, row-major. All reductions run in index order so
// results are bit-reproducible.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int dim)
      : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {}

  static SquareMatrix identity(int dim);

  int dim() const { return dim_; }

  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }
  double& operator()(int i, int j) {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }

  // out = A * x
  void matvec(std::span<const double> x, std::span<double> out) const;

  std::size_t entry_count() const { return a_.size(); }

 private:
  int dim_ = 0;
  std::vector<double> a_;
};

double dot(std::span<const double> a, std::span<const double> b);
double l2_norm(std::span<const double> v);
double linf_norm(std::span<const double> v);

}  // namespace pecc

#endif
