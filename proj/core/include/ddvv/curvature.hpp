#pragma once

#include "ddvv/inequalities.hpp"
#include "ddvv/sym_matrix.hpp"

namespace ddvv {

/// Second-fundamental-form coefficients h_ij^r (one symmetric n x n slice per
/// normal direction r = 1..m) together with the ambient constant sectional
/// curvature c.
class SecondFundamentalForm {
 public:
  SecondFundamentalForm(SymTuple h, double c);

  Eigen::Index n() const { return h_.dim(); }
  Eigen::Index m() const { return h_.size(); }
  const SymTuple& h() const { return h_; }
  double c() const { return c_; }

  /// The matrix tuple with A_r = h^r, the bridge to the P(n,m) side.
  const SymTuple& as_tuple() const { return h_; }

 private:
  SymTuple h_;
  double c_;
};

struct CurvatureSummary {
  double rho;        // normalized scalar curvature
  double rho_perp;   // normalized normal scalar curvature, >= 0
  double mean_h_sq;  // |H|^2
  double c;
};

inline constexpr double kCurvatureFormTol = 1e-10;

/// |H|^2 = sum_r ((1/n) tr h^r)^2.
double mean_curvature_sq(const SecondFundamentalForm& f);

/// rho = (2/(n(n-1))) sum_{i<j} [c + sum_r (h_ii^r h_jj^r - (h_ij^r)^2)],
/// the sectional terms expanded by the Gauss equation. Requires n >= 2.
double gauss_rho(const SecondFundamentalForm& f);

/// rho_perp = (2/(n(n-1))) sqrt(sum_{r<s} sum_{i<j} (sum_k (h_ik^r h_jk^s -
/// h_ik^s h_jk^r))^2). Requires n >= 2; zero when m = 1.
double normal_rho(const SecondFundamentalForm& f);

CurvatureSummary curvature_summary(const SecondFundamentalForm& f);

/// |H|^2 + c >= rho + rho_perp. residual = lhs - rhs, scale 1 + |c| + |H|^2.
InequalityReport conjecture1_residual(const SecondFundamentalForm& f,
                                      double tol = kCurvatureFormTol);

/// The coefficient form: sum_r sum_{i<j} (h_ii^r - h_jj^r)^2
/// + 2n sum_r sum_{i<j} (h_ij^r)^2 >= 2n sqrt(sum_{r<s} sum_{i<j} (...)^2).
/// residual = lhs - rhs, scale n^2(n-1) * (1 + |c| + |H|^2) so the holds flag
/// is consistent with conjecture1_residual.
InequalityReport eq1a_residual(const SecondFundamentalForm& f,
                               double tol = kCurvatureFormTol);

}  // namespace ddvv
