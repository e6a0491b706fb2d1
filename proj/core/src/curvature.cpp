#include "ddvv/curvature.hpp"

#include <cmath>

namespace ddvv {

namespace {

void require_surface_dim(const SecondFundamentalForm& f, const char* op) {
  if (f.n() < 2) {
    throw std::domain_error(std::string(op) + ": requires tangent dimension n >= 2");
  }
}

// sum_{r<s} sum_{i<j} (sum_k (h_ik^r h_jk^s - h_ik^s h_jk^r))^2, the squared
// normal-curvature components before any normalization.
double normal_curvature_sq_sum(const SecondFundamentalForm& f) {
  const Eigen::Index n = f.n();
  const Eigen::Index m = f.m();
  double total = 0.0;
  for (Eigen::Index r = 0; r + 1 < m; ++r) {
    const Eigen::MatrixXd& hr = f.h()[r].mat();
    for (Eigen::Index s = r + 1; s < m; ++s) {
      const Eigen::MatrixXd& hs = f.h()[s].mat();
      for (Eigen::Index i = 0; i + 1 < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
          double comp = 0.0;
          for (Eigen::Index k = 0; k < n; ++k) {
            comp += hr(i, k) * hs(j, k) - hs(i, k) * hr(j, k);
          }
          total += comp * comp;
        }
      }
    }
  }
  return total;
}

}  // namespace

SecondFundamentalForm::SecondFundamentalForm(SymTuple h, double c)
    : h_(std::move(h)), c_(c) {
  if (!std::isfinite(c_)) {
    throw std::invalid_argument("SecondFundamentalForm: c must be finite");
  }
}

double mean_curvature_sq(const SecondFundamentalForm& f) {
  const double n = static_cast<double>(f.n());
  double total = 0.0;
  for (const auto& hr : f.h().mats()) {
    const double mean = hr.mat().trace() / n;
    total += mean * mean;
  }
  return total;
}

double gauss_rho(const SecondFundamentalForm& f) {
  require_surface_dim(f, "gauss_rho");
  const Eigen::Index n = f.n();
  double sectional_sum = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double term = f.c();
      for (const auto& hr : f.h().mats()) {
        term += hr(i, i) * hr(j, j) - hr(i, j) * hr(i, j);
      }
      sectional_sum += term;
    }
  }
  const double dn = static_cast<double>(n);
  return 2.0 / (dn * (dn - 1.0)) * sectional_sum;
}

double normal_rho(const SecondFundamentalForm& f) {
  require_surface_dim(f, "normal_rho");
  if (f.m() == 1) return 0.0;
  const double dn = static_cast<double>(f.n());
  return 2.0 / (dn * (dn - 1.0)) * std::sqrt(normal_curvature_sq_sum(f));
}

CurvatureSummary curvature_summary(const SecondFundamentalForm& f) {
  return CurvatureSummary{gauss_rho(f), normal_rho(f), mean_curvature_sq(f), f.c()};
}

InequalityReport conjecture1_residual(const SecondFundamentalForm& f, double tol) {
  const double h_sq = mean_curvature_sq(f);
  const double lhs = h_sq + f.c();
  const double rhs = gauss_rho(f) + normal_rho(f);
  return make_report(InequalityName::Conjecture1, lhs, rhs,
                     1.0 + std::abs(f.c()) + h_sq, tol);
}

InequalityReport eq1a_residual(const SecondFundamentalForm& f, double tol) {
  require_surface_dim(f, "eq1a_residual");
  const Eigen::Index n = f.n();
  const double dn = static_cast<double>(n);

  double diag_diff_sum = 0.0;
  double offdiag_sum = 0.0;
  for (const auto& hr : f.h().mats()) {
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double d = hr(i, i) - hr(j, j);
        diag_diff_sum += d * d;
        offdiag_sum += hr(i, j) * hr(i, j);
      }
    }
  }
  const double lhs = diag_diff_sum + 2.0 * dn * offdiag_sum;
  const double rhs = 2.0 * dn * std::sqrt(normal_curvature_sq_sum(f));
  const double scale =
      dn * dn * (dn - 1.0) * (1.0 + std::abs(f.c()) + mean_curvature_sq(f));
  return make_report(InequalityName::Eq1a, lhs, rhs, scale, tol);
}

}  // namespace ddvv
