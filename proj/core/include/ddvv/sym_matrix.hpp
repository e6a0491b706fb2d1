#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace ddvv {

/// Real symmetric n x n matrix. Construction symmetrizes the input as
/// (M + M^T)/2 and rejects inputs whose asymmetry ||M - M^T||_F exceeds
/// 1e-8 * (1 + ||M||_F), so corrupted data fails loudly instead of being
/// silently repaired. Immutable after construction.
class SymMatrix {
 public:
  static constexpr double kAsymmetryTol = 1e-8;

  explicit SymMatrix(Eigen::MatrixXd raw);

  static SymMatrix zero(Eigen::Index n);
  static SymMatrix identity(Eigen::Index n);

  Eigen::Index dim() const { return mat_.rows(); }
  const Eigen::MatrixXd& mat() const { return mat_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }

 private:
  Eigen::MatrixXd mat_;
};

/// Ordered list of m real symmetric n x n matrices (the A_r).
class SymTuple {
 public:
  explicit SymTuple(std::vector<SymMatrix> mats);

  Eigen::Index dim() const { return mats_.front().dim(); }
  Eigen::Index size() const { return static_cast<Eigen::Index>(mats_.size()); }
  const SymMatrix& operator[](Eigen::Index r) const {
    return mats_[static_cast<std::size_t>(r)];
  }
  const std::vector<SymMatrix>& mats() const { return mats_; }

  SymTuple scaled(double t) const;

 private:
  std::vector<SymMatrix> mats_;
};

}  // namespace ddvv
