#include "ddvv/inequalities.hpp"

namespace ddvv {

std::string to_string(InequalityName name) {
  switch (name) {
    case InequalityName::P: return "P";
    case InequalityName::Pprime: return "Pprime";
    case InequalityName::Conjecture1: return "Conjecture1";
    case InequalityName::Eq1a: return "Eq1a";
  }
  return "unknown";
}

InequalityReport make_report(InequalityName name, double lhs, double rhs, double scale,
                             double tol) {
  const double residual = lhs - rhs;
  return InequalityReport{name, lhs, rhs, residual, scale, tol,
                          residual >= -tol * scale};
}

double frobenius_norm_sq(const SymMatrix& m) { return m.mat().squaredNorm(); }

double frobenius_inner(const SymMatrix& x, const SymMatrix& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("frobenius_inner: dimension mismatch");
  }
  return x.mat().cwiseProduct(y.mat()).sum();
}

Eigen::MatrixXd commutator(const SymMatrix& x, const SymMatrix& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("commutator: dimension mismatch");
  }
  return x.mat() * y.mat() - y.mat() * x.mat();
}

namespace detail {

double energy(const std::vector<Eigen::MatrixXd>& mats) {
  double c = 0.0;
  for (std::size_t r = 0; r + 1 < mats.size(); ++r) {
    for (std::size_t s = r + 1; s < mats.size(); ++s) {
      c += (mats[r] * mats[s] - mats[s] * mats[r]).squaredNorm();
    }
  }
  return c;
}

double norm_sum(const std::vector<Eigen::MatrixXd>& mats) {
  double s = 0.0;
  for (const auto& a : mats) s += a.squaredNorm();
  return s;
}

}  // namespace detail

double commutator_energy(const SymTuple& t) {
  double c = 0.0;
  for (Eigen::Index r = 0; r + 1 < t.size(); ++r) {
    for (Eigen::Index s = r + 1; s < t.size(); ++s) {
      c += commutator(t[r], t[s]).squaredNorm();
    }
  }
  return c;
}

double total_norm(const SymTuple& t) {
  double s = 0.0;
  for (const auto& a : t.mats()) s += frobenius_norm_sq(a);
  return s;
}

InequalityReport ddvv_residual(const SymTuple& t, double tol) {
  const double s = total_norm(t);
  const double c = commutator_energy(t);
  return make_report(InequalityName::P, s * s, 2.0 * c, s * s, tol);
}

InequalityReport pprime_residual(const SymTuple& t, double tol) {
  const double s = total_norm(t);
  double quartic = 0.0;
  for (const auto& a : t.mats()) {
    const double q = frobenius_norm_sq(a);
    quartic += q * q;
  }
  const double c = commutator_energy(t);
  return make_report(InequalityName::Pprime, 1.5 * s * s - quartic, 2.0 * c, s * s, tol);
}

double normalized_lambda(const SymTuple& t) {
  const double s = total_norm(t);
  if (s <= 0.0) {
    throw std::domain_error("normalized_lambda: undefined ratio for the zero tuple");
  }
  return commutator_energy(t) / (s * s);
}

SymMatrix traceless_part(const SymMatrix& m) {
  const double mean = m.mat().trace() / static_cast<double>(m.dim());
  return SymMatrix(m.mat() -
                   mean * Eigen::MatrixXd::Identity(m.dim(), m.dim()));
}

}  // namespace ddvv
