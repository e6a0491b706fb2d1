#include "ddvv/symmetry.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "ddvv/inequalities.hpp"
#include "ddvv/rng.hpp"

namespace ddvv {

namespace {

void require_orthogonal(const Eigen::MatrixXd& q, const char* which) {
  if (q.rows() < 1 || q.rows() != q.cols()) {
    throw std::invalid_argument(std::string("OrthogonalPair: ") + which +
                                " must be square");
  }
  const Eigen::MatrixXd defect =
      q.transpose() * q - Eigen::MatrixXd::Identity(q.rows(), q.cols());
  if (defect.cwiseAbs().maxCoeff() > OrthogonalPair::kOrthogonalityTol) {
    throw std::invalid_argument(std::string("OrthogonalPair: ") + which +
                                " is not orthogonal within tolerance");
  }
}

// Flip v so its first nonzero component is positive; deterministic output for
// golden tests.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

// Eigenvectors of a symmetric matrix, columns reordered to nonincreasing
// eigenvalue and sign-fixed. Exact ties keep the solver's (ascending) order,
// which is all the degenerate case requires.
Eigen::MatrixXd descending_eigenbasis(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("canonicalize: eigensolver failed");
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(sym.rows()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return es.eigenvalues()(a) > es.eigenvalues()(b);
  });
  Eigen::MatrixXd basis(sym.rows(), sym.cols());
  for (Eigen::Index r = 0; r < sym.rows(); ++r) {
    basis.col(r) = es.eigenvectors().col(order[static_cast<std::size_t>(r)]);
    fix_sign(basis.col(r));
  }
  return basis;
}

}  // namespace

OrthogonalPair::OrthogonalPair(Eigen::MatrixXd q_space, Eigen::MatrixXd q_normal)
    : q_space_(std::move(q_space)), q_normal_(std::move(q_normal)) {
  require_orthogonal(q_space_, "q_space");
  require_orthogonal(q_normal_, "q_normal");
}

OrthogonalPair OrthogonalPair::after(const OrthogonalPair& first) const {
  return OrthogonalPair(q_space_ * first.q_space_, q_normal_ * first.q_normal_);
}

SymTuple act(const SymTuple& t, const OrthogonalPair& g) {
  if (g.q_space().rows() != t.dim() || g.q_normal().rows() != t.size()) {
    throw std::invalid_argument("act: group element dimensions do not match tuple");
  }
  std::vector<Eigen::MatrixXd> conjugated;
  conjugated.reserve(static_cast<std::size_t>(t.size()));
  for (const auto& a : t.mats()) {
    conjugated.push_back(g.q_space() * a.mat() * g.q_space().transpose());
  }
  std::vector<SymMatrix> out;
  out.reserve(conjugated.size());
  for (Eigen::Index r = 0; r < t.size(); ++r) {
    Eigen::MatrixXd mixed = Eigen::MatrixXd::Zero(t.dim(), t.dim());
    for (Eigen::Index s = 0; s < t.size(); ++s) {
      mixed += g.q_normal()(r, s) * conjugated[static_cast<std::size_t>(s)];
    }
    out.emplace_back(std::move(mixed));
  }
  return SymTuple(std::move(out));
}

Eigen::MatrixXd random_orthogonal(Eigen::Index k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_orthogonal: k must be >= 1");
  std::mt19937_64 rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd a(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) a(i, j) = gauss(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal sign factor so the distribution is Haar rather than
  // biased by the QR convention.
  for (Eigen::Index j = 0; j < k; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

SymTuple canonicalize(const SymTuple& t) {
  if (total_norm(t) <= 0.0) {
    throw std::domain_error("canonicalize: zero tuple has no canonical position");
  }
  const Eigen::Index m = t.size();
  Eigen::MatrixXd gram(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index s = r; s < m; ++s) {
      gram(r, s) = gram(s, r) = frobenius_inner(t[r], t[s]);
    }
  }
  const Eigen::MatrixXd basis = descending_eigenbasis(gram);

  // Mix slots: member r of the rotated tuple is sum_t basis(t, r) A_t, which
  // diagonalizes the Gram matrix and orders norms nonincreasingly.
  std::vector<Eigen::MatrixXd> mixed(static_cast<std::size_t>(m));
  for (Eigen::Index r = 0; r < m; ++r) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(t.dim(), t.dim());
    for (Eigen::Index s = 0; s < m; ++s) acc += basis(s, r) * t[s].mat();
    mixed[static_cast<std::size_t>(r)] = std::move(acc);
  }

  // Conjugate so the first (largest-norm) member is diagonal, entries
  // nonincreasing.
  const Eigen::MatrixXd u = descending_eigenbasis(mixed.front());
  std::vector<SymMatrix> out;
  out.reserve(mixed.size());
  for (auto& b : mixed) {
    out.emplace_back(u.transpose() * b * u);
  }
  return SymTuple(std::move(out));
}

}  // namespace ddvv
