#include "ddvv/lemmas.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ddvv/inequalities.hpp"
#include "ddvv/rng.hpp"

namespace ddvv {

namespace {

void require_weights(double x, double y, const char* op) {
  if (!(x >= y && y >= 0.0)) {
    throw std::invalid_argument(std::string(op) + ": requires x >= y >= 0");
  }
}

void require_unit_first(const SymMatrix& a1, const char* op) {
  if (std::abs(a1.mat().norm() - 1.0) > 1e-10) {
    throw std::invalid_argument(std::string(op) + ": first member must have unit norm");
  }
}

// (3/2)(sum ||A_i||^2)^2 - sum ||A_i||^4 - 2 sum_{i<j} ||[A_i,A_j]||^2,
// i.e. the P' residual of the remaining tuple.
double pprime_bracket(const SymTuple& rest) {
  return pprime_residual(rest).residual;
}

}  // namespace

Lemma1Instance::Lemma1Instance(double x_, double y_, Eigen::VectorXd eta_,
                               Eigen::Index i_, Eigen::Index j_, Eigen::Index k_,
                               Eigen::Index l_)
    : x(x_), y(y_), eta(std::move(eta_)), i(i_), j(j_), k(k_), l(l_) {
  require_weights(x, y, "Lemma1Instance");
  if (std::abs(eta.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("Lemma1Instance: eta must be a unit vector");
  }
  const Eigen::Index n = eta.size();
  for (Eigen::Index idx : {i, j, k, l}) {
    if (idx < 0 || idx >= n) {
      throw std::invalid_argument("Lemma1Instance: index out of range");
    }
  }
  if (i == j || k == l) {
    throw std::invalid_argument("Lemma1Instance: index pairs must be distinct within");
  }
  const bool same_pair = (std::minmax(i, j) == std::minmax(k, l));
  if (same_pair) {
    throw std::invalid_argument("Lemma1Instance: requires {i,j} != {k,l}");
  }
}

double lemma1_residual(const Lemma1Instance& inst) {
  const double di = inst.eta(inst.i) - inst.eta(inst.j);
  const double dk = inst.eta(inst.k) - inst.eta(inst.l);
  return 2.0 * inst.x + inst.y - (di * di * inst.x + dk * dk * inst.y);
}

double lemma1_max_eigenvalue(double x, double y) {
  require_weights(x, y, "lemma1_max_eigenvalue");
  Eigen::Matrix3d m;
  m << x + y, -x, -y,
       -x,     x, 0.0,
       -y,   0.0,   y;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
  return es.eigenvalues().maxCoeff();
}

double lemma1_closed_form(double x, double y) {
  require_weights(x, y, "lemma1_closed_form");
  return x + y + std::sqrt(x * x - x * y + y * y);
}

double case1_profile(double alpha, double x, double y, double d1, double d2) {
  require_weights(x, y, "case1_profile");
  if (d1 < 0.0 || d2 < 0.0) {
    throw std::invalid_argument("case1_profile: d1, d2 must be nonnegative");
  }
  const double c2 = std::cos(alpha) * std::cos(alpha);
  const double s2 = std::sin(alpha) * std::sin(alpha);
  return d1 * (x * c2 + y * s2) + d2 * (x * s2 + y * c2);
}

double case2_bound(double b, double c, double x, double y,
                   const Eigen::VectorXd& diag_b, const Eigen::VectorXd& diag_c) {
  require_weights(x, y, "case2_bound");
  if (diag_b.size() != diag_c.size()) {
    throw std::invalid_argument("case2_bound: diagonal vectors must have equal length");
  }
  constexpr double tol = 1e-10;
  if (std::abs(2.0 * b * c + diag_b.dot(diag_c)) > tol) {
    throw std::invalid_argument("case2_bound: orthogonality constraint violated");
  }
  if (std::abs(2.0 * b * b + diag_b.squaredNorm() - x) > tol ||
      std::abs(2.0 * c * c + diag_c.squaredNorm() - y) > tol) {
    throw std::invalid_argument("case2_bound: norm bookkeeping violated");
  }
  return (2.0 * x + y) - 4.0 * (b * b + c * c);
}

double reduction_a(const SymMatrix& a1_unit, const SymTuple& rest) {
  require_unit_first(a1_unit, "reduction_a");
  if (a1_unit.dim() != rest.dim()) {
    throw std::invalid_argument("reduction_a: dimension mismatch");
  }
  double cross = 0.0;
  double norms = 0.0;
  for (const auto& ai : rest.mats()) {
    cross += commutator(a1_unit, ai).squaredNorm();
    norms += frobenius_norm_sq(ai);
  }
  return 2.0 * cross - 3.0 * norms;
}

double reduction_quartic(double t, const SymMatrix& a1_unit, const SymTuple& rest) {
  const double a = reduction_a(a1_unit, rest);
  const double t2 = t * t;
  return 0.5 * t2 * t2 - a * t2 + pprime_bracket(rest);
}

SweepSummary lemma1_random_sweep(std::size_t samples, Eigen::Index n_max,
                                 std::uint64_t seed) {
  if (n_max < 3) {
    throw std::invalid_argument("lemma1_random_sweep: need n_max >= 3 for distinct pairs");
  }
  double min_residual = std::numeric_limits<double>::infinity();
  for (std::size_t sample = 0; sample < samples; ++sample) {
    std::mt19937_64 rng = make_rng(derive_seed(seed, sample));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<Eigen::Index> dim(3, n_max);

    const Eigen::Index n = dim(rng);
    Eigen::VectorXd eta(n);
    do {
      for (Eigen::Index p = 0; p < n; ++p) eta(p) = gauss(rng);
    } while (eta.norm() == 0.0);
    eta /= eta.norm();

    double x = std::abs(gauss(rng)) * 2.0;
    double y = std::abs(gauss(rng)) * 2.0;
    if (x < y) std::swap(x, y);

    std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
    Eigen::Index i = pick(rng), j, k, l;
    do { j = pick(rng); } while (j == i);
    for (;;) {
      k = pick(rng);
      do { l = pick(rng); } while (l == k);
      if (std::minmax(i, j) != std::minmax(k, l)) break;
    }
    min_residual =
        std::min(min_residual, lemma1_residual(Lemma1Instance(x, y, eta, i, j, k, l)));
  }
  return SweepSummary{samples, min_residual};
}

EigenGridSummary lemma1_eigen_grid(std::size_t steps, double max_x) {
  if (steps < 2 || !(max_x > 0.0)) {
    throw std::invalid_argument("lemma1_eigen_grid: need steps >= 2 and max_x > 0");
  }
  EigenGridSummary out{0, 0.0, std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity()};
  for (std::size_t ix = 0; ix < steps; ++ix) {
    const double x = max_x * static_cast<double>(ix) / static_cast<double>(steps - 1);
    for (std::size_t iy = 0; iy < steps; ++iy) {
      const double y = x * static_cast<double>(iy) / static_cast<double>(steps - 1);
      const double eig = lemma1_max_eigenvalue(x, y);
      const double margin = 2.0 * x + y - eig;
      out.points += 1;
      out.max_closed_form_gap =
          std::max(out.max_closed_form_gap, std::abs(eig - lemma1_closed_form(x, y)));
      out.min_bound_margin = std::min(out.min_bound_margin, margin);
      const bool interior = x > 0.0 && iy > 0 && iy + 1 < steps;
      if (interior) out.min_interior_margin = std::min(out.min_interior_margin, margin);
    }
  }
  return out;
}

double case1_grid_max(double x, double y, double d1, double d2, std::size_t steps) {
  if (steps < 1) throw std::invalid_argument("case1_grid_max: need steps >= 1");
  double best = -std::numeric_limits<double>::infinity();
  const double pi = std::acos(-1.0);
  for (std::size_t s = 0; s < steps; ++s) {
    const double alpha = pi * static_cast<double>(s) / static_cast<double>(steps);
    best = std::max(best, case1_profile(alpha, x, y, d1, d2));
  }
  return best;
}

SweepSummary case2_random_sweep(std::size_t samples, Eigen::Index dim,
                                std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("case2_random_sweep: dim must be >= 1");
  double min_residual = std::numeric_limits<double>::infinity();
  for (std::size_t sample = 0; sample < samples; ++sample) {
    std::mt19937_64 rng = make_rng(derive_seed(seed, sample));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) {
        throw std::runtime_error("case2_random_sweep: rejection sampling stalled");
      }
      const double b = gauss(rng);
      if (std::abs(b) < 0.05) continue;
      Eigen::VectorXd beta(dim), gamma(dim);
      for (Eigen::Index p = 0; p < dim; ++p) beta(p) = gauss(rng);
      for (Eigen::Index p = 0; p < dim; ++p) gamma(p) = gauss(rng);
      // Solve the orthogonality constraint for c, then keep only draws with
      // x >= y.
      const double c = -beta.dot(gamma) / (2.0 * b);
      const double x = 2.0 * b * b + beta.squaredNorm();
      const double y = 2.0 * c * c + gamma.squaredNorm();
      if (x < y) continue;
      min_residual = std::min(min_residual, case2_bound(b, c, x, y, beta, gamma));
      break;
    }
  }
  return SweepSummary{samples, min_residual};
}

QuarticSweepSummary quartic_random_sweep(std::size_t samples, std::uint64_t seed) {
  QuarticSweepSummary out{samples, 0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t sample = 0; sample < samples; ++sample) {
    std::mt19937_64 rng = make_rng(derive_seed(seed, sample));
    std::uniform_int_distribution<Eigen::Index> dim_n(2, 5);
    std::uniform_int_distribution<Eigen::Index> dim_m(2, 4);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const Eigen::Index n = dim_n(rng);
    const Eigen::Index m = dim_m(rng);
    SymMatrix a1 = random_sym_matrix(n, rng);
    a1 = SymMatrix(a1.mat() / a1.mat().norm());
    const SymTuple rest = random_sym_tuple(n, m - 1, rng);
    const double t = 1.5 * gauss(rng);

    const double quartic = reduction_quartic(t, a1, rest);
    std::vector<SymMatrix> assembled{SymMatrix(t * a1.mat())};
    for (const auto& ai : rest.mats()) assembled.push_back(ai);
    const double direct = pprime_residual(SymTuple(std::move(assembled))).residual;

    out.max_rel_mismatch = std::max(
        out.max_rel_mismatch, std::abs(quartic - direct) / (1.0 + std::abs(direct)));
    out.min_bound_margin =
        std::min(out.min_bound_margin, total_norm(rest) - reduction_a(a1, rest));
  }
  return out;
}

}  // namespace ddvv
