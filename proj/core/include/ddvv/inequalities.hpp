#pragma once

#include <string>

#include "ddvv/sym_matrix.hpp"

namespace ddvv {

enum class InequalityName { P, Pprime, Conjecture1, Eq1a };

std::string to_string(InequalityName name);

/// Outcome of evaluating one inequality. residual is oriented so that
/// residual >= 0 means the inequality holds; the holds flag uses the
/// op-declared relative normalizer: holds == (residual >= -tol * scale).
struct InequalityReport {
  InequalityName name;
  double lhs;
  double rhs;
  double residual;
  double scale;
  double tol;
  bool holds;
};

InequalityReport make_report(InequalityName name, double lhs, double rhs, double scale,
                             double tol);

inline constexpr double kMatrixFormTol = 1e-9;

/// ||M||^2 = sum of squared entries.
double frobenius_norm_sq(const SymMatrix& m);

/// Frobenius inner product <X, Y> = sum_ij x_ij y_ij.
double frobenius_inner(const SymMatrix& x, const SymMatrix& y);

/// [X, Y] = XY - YX. Antisymmetric for symmetric inputs.
Eigen::MatrixXd commutator(const SymMatrix& x, const SymMatrix& y);

/// C(T) = sum_{r<s} ||[A_r, A_s]||^2.
double commutator_energy(const SymTuple& t);

/// S(T) = sum_r ||A_r||^2.
double total_norm(const SymTuple& t);

/// P(n,m): S^2 >= 2C. residual = S^2 - 2C, scale S^2.
InequalityReport ddvv_residual(const SymTuple& t, double tol = kMatrixFormTol);

/// P'(n,m): 2C <= (3/2)S^2 - sum_r ||A_r||^4. residual = lhs - 2C, scale S^2.
InequalityReport pprime_residual(const SymTuple& t, double tol = kMatrixFormTol);

/// C/S^2, the scale-invariant objective. Throws std::domain_error on the zero
/// tuple ("undefined ratio").
double normalized_lambda(const SymTuple& t);

/// M - (tr M / n) I.
SymMatrix traceless_part(const SymMatrix& m);

namespace detail {
// Unvalidated hot-path versions used by the search loop; inputs must be
// symmetric n x n matrices of equal size.
double energy(const std::vector<Eigen::MatrixXd>& mats);
double norm_sum(const std::vector<Eigen::MatrixXd>& mats);
}  // namespace detail

}  // namespace ddvv
