#pragma once

#include <cmath>
#include <vector>

#include "ddvv/ddvv.hpp"

namespace ddvv::testing {

// Naive quadruple-loop evaluation of the commutator energy,
// sum_{r<s} sum_{i,j} (sum_k (A_r[i][k] A_s[k][j] - A_s[i][k] A_r[k][j]))^2,
// kept deliberately independent of the matrix-product implementation.
inline double brute_force_energy(const SymTuple& t) {
  const Eigen::Index n = t.dim();
  double total = 0.0;
  for (Eigen::Index r = 0; r + 1 < t.size(); ++r) {
    for (Eigen::Index s = r + 1; s < t.size(); ++s) {
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          double entry = 0.0;
          for (Eigen::Index k = 0; k < n; ++k) {
            entry += t[r](i, k) * t[s](k, j) - t[s](i, k) * t[r](k, j);
          }
          total += entry * entry;
        }
      }
    }
  }
  return total;
}

// Largest componentwise defect between the analytic gradient and a central
// finite difference of C along every symmetric basis direction, scaled by
// 1 + |directional derivative|.
inline double max_gradient_fd_error(const SymTuple& t, double h = 1e-5) {
  const std::vector<SymMatrix> grad = euclidean_gradient(t);
  double worst = 0.0;
  for (Eigen::Index r = 0; r < t.size(); ++r) {
    for (Eigen::Index i = 0; i < t.dim(); ++i) {
      for (Eigen::Index j = i; j < t.dim(); ++j) {
        auto perturbed = [&](double delta) {
          std::vector<SymMatrix> mats;
          mats.reserve(static_cast<std::size_t>(t.size()));
          for (Eigen::Index q = 0; q < t.size(); ++q) {
            Eigen::MatrixXd m = t[q].mat();
            if (q == r) {
              m(i, j) += delta;
              if (i != j) m(j, i) += delta;
            }
            mats.emplace_back(std::move(m));
          }
          return commutator_energy(SymTuple(std::move(mats)));
        };
        const double fd = (perturbed(h) - perturbed(-h)) / (2.0 * h);
        const double analytic =
            (i == j) ? grad[static_cast<std::size_t>(r)](i, i)
                     : 2.0 * grad[static_cast<std::size_t>(r)](i, j);
        worst = std::max(worst, std::abs(fd - analytic) / (1.0 + std::abs(analytic)));
      }
    }
  }
  return worst;
}

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// The P(2,2) equality witness A = [[0,1],[1,0]], B = [[1,0],[0,-1]].
inline SymTuple equality_pair() {
  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << 0, 1, 1, 0;
  b << 1, 0, 0, -1;
  return SymTuple({SymMatrix(a), SymMatrix(b)});
}

inline OrthogonalPair random_group_element(Eigen::Index n, Eigen::Index m,
                                           std::uint64_t seed) {
  return OrthogonalPair(random_orthogonal(n, derive_seed(seed, 1)),
                        random_orthogonal(m, derive_seed(seed, 2)));
}

}  // namespace ddvv::testing
