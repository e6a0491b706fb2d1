#include "ddvv/sym_matrix.hpp"

#include <string>

namespace ddvv {

SymMatrix::SymMatrix(Eigen::MatrixXd raw) {
  if (raw.rows() < 1 || raw.rows() != raw.cols()) {
    throw std::invalid_argument("SymMatrix: matrix must be square with n >= 1, got " +
                                std::to_string(raw.rows()) + "x" + std::to_string(raw.cols()));
  }
  if (!raw.allFinite()) {
    throw std::invalid_argument("SymMatrix: entries must be finite");
  }
  const double asym = (raw - raw.transpose()).norm();
  if (asym > kAsymmetryTol * (1.0 + raw.norm())) {
    throw std::invalid_argument("SymMatrix: asymmetry " + std::to_string(asym) +
                                " exceeds tolerance " +
                                std::to_string(kAsymmetryTol * (1.0 + raw.norm())));
  }
  mat_ = 0.5 * (raw + raw.transpose());
}

SymMatrix SymMatrix::zero(Eigen::Index n) {
  return SymMatrix(Eigen::MatrixXd::Zero(n, n));
}

SymMatrix SymMatrix::identity(Eigen::Index n) {
  return SymMatrix(Eigen::MatrixXd::Identity(n, n));
}

SymTuple::SymTuple(std::vector<SymMatrix> mats) : mats_(std::move(mats)) {
  if (mats_.empty()) {
    throw std::invalid_argument("SymTuple: need at least one matrix");
  }
  const Eigen::Index n = mats_.front().dim();
  for (const auto& a : mats_) {
    if (a.dim() != n) {
      throw std::invalid_argument("SymTuple: all members must share dimension " +
                                  std::to_string(n) + ", got " + std::to_string(a.dim()));
    }
  }
}

SymTuple SymTuple::scaled(double t) const {
  std::vector<SymMatrix> out;
  out.reserve(mats_.size());
  for (const auto& a : mats_) out.emplace_back(t * a.mat());
  return SymTuple(std::move(out));
}

}  // namespace ddvv
