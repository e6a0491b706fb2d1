#pragma once

#include <cstdint>

#include "ddvv/sym_matrix.hpp"

namespace ddvv {

/// Element (Q, Q1) of O(n) x O(m). Q conjugates each member, Q1 mixes the
/// tuple slots. Both factors are validated against Q^T Q = I to 1e-10.
class OrthogonalPair {
 public:
  static constexpr double kOrthogonalityTol = 1e-10;

  OrthogonalPair(Eigen::MatrixXd q_space, Eigen::MatrixXd q_normal);

  const Eigen::MatrixXd& q_space() const { return q_space_; }
  const Eigen::MatrixXd& q_normal() const { return q_normal_; }

  /// Composition so that act(T, g2 * g1) == act(act(T, g1), g2).
  OrthogonalPair after(const OrthogonalPair& first) const;

 private:
  Eigen::MatrixXd q_space_;
  Eigen::MatrixXd q_normal_;
};

/// B_r = sum_s (Q1)_{rs} Q A_s Q^T.
SymTuple act(const SymTuple& t, const OrthogonalPair& g);

/// Haar-distributed k x k orthogonal matrix: Gaussian entries, QR, then the
/// Q factor with columns flipped so the R diagonal is nonnegative.
Eigen::MatrixXd random_orthogonal(Eigen::Index k, std::uint64_t seed);

/// Rotates T into the reduced position used throughout the proofs:
/// members pairwise Frobenius-orthogonal (the m x m Gram matrix is
/// diagonalized), norms nonincreasing, and the first member diagonal with
/// nonincreasing diagonal entries. Preserves S and C. Throws on the zero
/// tuple.
SymTuple canonicalize(const SymTuple& t);

}  // namespace ddvv
