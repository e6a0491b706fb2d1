#include <doctest.h>

#include "test_helpers.hpp"

using namespace ddvv;
using ddvv::testing::equality_pair;
using ddvv::testing::random_group_element;

TEST_CASE("identity action leaves the tuple unchanged") {
  const SymTuple pair = equality_pair();
  const OrthogonalPair id(Eigen::MatrixXd::Identity(2, 2),
                          Eigen::MatrixXd::Identity(2, 2));
  const SymTuple out = act(pair, id);
  for (Eigen::Index r = 0; r < pair.size(); ++r) {
    CHECK((out[r].mat() - pair[r].mat()).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("normal permutation swaps tuple slots") {
  const SymTuple pair = equality_pair();
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  const SymTuple out = act(pair, OrthogonalPair(Eigen::MatrixXd::Identity(2, 2), swap));
  CHECK((out[0].mat() - pair[1].mat()).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((out[1].mat() - pair[0].mat()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("the action preserves S and C on the equality pair") {
  const SymTuple pair = equality_pair();
  for (std::uint64_t seed : {0ULL, 7ULL, 123ULL}) {
    const SymTuple out = act(pair, random_group_element(2, 2, seed));
    CHECK(commutator_energy(out) == doctest::Approx(8.0).epsilon(1e-10));
    CHECK(total_norm(out) == doctest::Approx(4.0).epsilon(1e-12));
  }
}

TEST_CASE("act validates dimensions and orthogonality") {
  const SymTuple pair = equality_pair();
  CHECK_THROWS_AS(act(pair, OrthogonalPair(Eigen::MatrixXd::Identity(3, 3),
                                           Eigen::MatrixXd::Identity(2, 2))),
                  std::invalid_argument);
  Eigen::MatrixXd not_orthogonal(2, 2);
  not_orthogonal << 1, 1, 0, 1;
  CHECK_THROWS_AS(OrthogonalPair(not_orthogonal, Eigen::MatrixXd::Identity(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("random_orthogonal produces orthogonal matrices deterministically") {
  const Eigen::MatrixXd one = random_orthogonal(1, 5);
  CHECK(std::abs(std::abs(one(0, 0)) - 1.0) <= 1e-12);

  const Eigen::MatrixXd a = random_orthogonal(5, 42);
  const Eigen::MatrixXd b = random_orthogonal(5, 42);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::MatrixXd defect =
      a.transpose() * a - Eigen::MatrixXd::Identity(5, 5);
  CHECK(defect.cwiseAbs().maxCoeff() <= 1e-10);

  CHECK_THROWS_AS(random_orthogonal(0, 1), std::invalid_argument);
}

TEST_CASE("G-invariance of S and C over random tuples and group elements") {
  std::mt19937_64 rng = make_rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const SymTuple t = random_sym_tuple(4, 3, rng);
    const SymTuple moved =
        act(t, random_group_element(4, 3, static_cast<std::uint64_t>(trial)));
    const double c = commutator_energy(t);
    const double s = total_norm(t);
    CHECK(std::abs(commutator_energy(moved) - c) <= 1e-9 * (1.0 + c));
    CHECK(std::abs(total_norm(moved) - s) <= 1e-10 * (1.0 + s));
  }
}

TEST_CASE("act composes as a group action") {
  std::mt19937_64 rng = make_rng(42);
  const SymTuple t = random_sym_tuple(3, 3, rng);
  const OrthogonalPair g1 = random_group_element(3, 3, 100);
  const OrthogonalPair g2 = random_group_element(3, 3, 200);
  const SymTuple stepwise = act(act(t, g1), g2);
  const SymTuple composed = act(t, g2.after(g1));
  for (Eigen::Index r = 0; r < t.size(); ++r) {
    CHECK((stepwise[r].mat() - composed[r].mat()).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("canonicalize onto the reduced position") {
  std::mt19937_64 rng = make_rng(43);
  const SymTuple t = act(equality_pair(), random_group_element(2, 2, 77));
  const SymTuple canon = canonicalize(t);

  // Gram matrix diagonal, norms nonincreasing.
  const double s = total_norm(canon);
  CHECK(std::abs(frobenius_inner(canon[0], canon[1])) <= 1e-9 * s);
  CHECK(frobenius_norm_sq(canon[0]) >= frobenius_norm_sq(canon[1]) - 1e-12);

  // First member diagonal with nonincreasing diagonal.
  Eigen::MatrixXd first = canon[0].mat();
  first.diagonal().setZero();
  CHECK(first.cwiseAbs().maxCoeff() <= 1e-9);
  CHECK(canon[0](0, 0) >= canon[0](1, 1) - 1e-12);

  // S and C preserved.
  CHECK(std::abs(total_norm(canon) - total_norm(t)) <= 1e-9 * (1.0 + total_norm(t)));
  CHECK(std::abs(commutator_energy(canon) - commutator_energy(t)) <=
        1e-9 * (1.0 + commutator_energy(t)));

  const SymTuple generic = random_sym_tuple(4, 3, rng);
  const SymTuple canon2 = canonicalize(generic);
  const double s2 = total_norm(canon2);
  for (Eigen::Index r = 0; r < canon2.size(); ++r) {
    for (Eigen::Index q = r + 1; q < canon2.size(); ++q) {
      CHECK(std::abs(frobenius_inner(canon2[r], canon2[q])) <= 1e-9 * s2);
    }
  }
}

TEST_CASE("canonicalize is idempotent on generic tuples") {
  std::mt19937_64 rng = make_rng(44);
  const SymTuple canon = canonicalize(random_sym_tuple(3, 3, rng));
  const SymTuple again = canonicalize(canon);
  for (Eigen::Index r = 0; r < canon.size(); ++r) {
    CHECK((again[r].mat() - canon[r].mat()).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("canonicalize sorts a zero member last and rejects the zero tuple") {
  std::mt19937_64 rng = make_rng(45);
  const SymTuple t({SymMatrix::zero(3), random_sym_matrix(3, rng),
                    random_sym_matrix(3, rng)});
  const SymTuple canon = canonicalize(t);
  CHECK(frobenius_norm_sq(canon[2]) <= 1e-18);

  CHECK_THROWS_AS(canonicalize(SymTuple({SymMatrix::zero(2)})), std::domain_error);
}
