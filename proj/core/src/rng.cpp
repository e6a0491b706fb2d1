#include "ddvv/rng.hpp"

#include <cmath>

#include "ddvv/inequalities.hpp"

namespace ddvv {

SymMatrix random_sym_matrix(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd raw(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) raw(i, j) = gauss(rng);
  }
  return SymMatrix(0.5 * (raw + raw.transpose()));
}

SymTuple random_sym_tuple(Eigen::Index n, Eigen::Index m, std::mt19937_64& rng,
                          TupleDistribution dist) {
  std::vector<SymMatrix> mats;
  mats.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index r = 0; r < m; ++r) {
    SymMatrix a = random_sym_matrix(n, rng);
    mats.push_back(dist == TupleDistribution::traceless_gaussian ? traceless_part(a)
                                                                 : a);
  }
  return SymTuple(std::move(mats));
}

SymTuple random_unit_tuple(Eigen::Index n, Eigen::Index m, std::mt19937_64& rng) {
  for (;;) {
    SymTuple t = random_sym_tuple(n, m, rng);
    const double s = total_norm(t);
    if (s > 0.0) return t.scaled(1.0 / std::sqrt(s));
    // Gaussian draws are zero with probability zero; retry regardless.
  }
}

}  // namespace ddvv
