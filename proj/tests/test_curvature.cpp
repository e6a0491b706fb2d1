#include <doctest.h>

#include "test_helpers.hpp"

using namespace ddvv;

namespace {

SecondFundamentalForm umbilical(double c = 0.0) {
  return SecondFundamentalForm(SymTuple({SymMatrix::identity(2)}), c);
}

// h^1 = [[0,1],[1,0]], h^2 = [[1,0],[0,-1]]: the traceless equality
// configuration.
SecondFundamentalForm equality_form(double c = 0.0) {
  return SecondFundamentalForm(ddvv::testing::equality_pair(), c);
}

SecondFundamentalForm corner(double c = 0.0) {
  Eigen::MatrixXd h(2, 2);
  h << 1, 0, 0, 0;
  return SecondFundamentalForm(SymTuple({SymMatrix(h)}), c);
}

SecondFundamentalForm random_form(Eigen::Index n, Eigen::Index m,
                                  std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  return SecondFundamentalForm(random_sym_tuple(n, m, rng), 2.0 * gauss(rng));
}

}  // namespace

TEST_CASE("mean_curvature_sq") {
  CHECK(mean_curvature_sq(umbilical()) == doctest::Approx(1.0));
  CHECK(mean_curvature_sq(equality_form()) == doctest::Approx(0.0));
  CHECK(mean_curvature_sq(corner()) == doctest::Approx(0.25));
}

TEST_CASE("gauss_rho") {
  CHECK(gauss_rho(umbilical()) == doctest::Approx(1.0));
  CHECK(gauss_rho(corner()) == doctest::Approx(0.0));

  const SecondFundamentalForm flat(SymTuple({SymMatrix::zero(3), SymMatrix::zero(3)}),
                                   -1.5);
  CHECK(gauss_rho(flat) == doctest::Approx(-1.5));

  const SecondFundamentalForm line(SymTuple({SymMatrix::identity(1)}), 0.0);
  CHECK_THROWS_AS(gauss_rho(line), std::domain_error);
  CHECK_THROWS_AS(normal_rho(line), std::domain_error);
}

TEST_CASE("normal_rho") {
  CHECK(normal_rho(umbilical(3.0)) == 0.0);  // m = 1
  CHECK(normal_rho(equality_form()) == doctest::Approx(2.0));

  Eigen::MatrixXd d1(3, 3), d2(3, 3);
  d1 = Eigen::Vector3d(1, 2, 3).asDiagonal();
  d2 = Eigen::Vector3d(-1, 0, 5).asDiagonal();
  const SecondFundamentalForm diag(SymTuple({SymMatrix(d1), SymMatrix(d2)}), 1.0);
  CHECK(normal_rho(diag) == 0.0);

  std::mt19937_64 rng = make_rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(normal_rho(random_form(4, 3, rng)) >= 0.0);
  }
}

TEST_CASE("conjecture1_residual examples") {
  const InequalityReport r1 = conjecture1_residual(umbilical());
  CHECK(r1.lhs == doctest::Approx(1.0));
  CHECK(r1.rhs == doctest::Approx(1.0));
  CHECK(std::abs(r1.residual) <= 1e-12);
  CHECK(r1.holds);

  const SecondFundamentalForm flat(SymTuple({SymMatrix::zero(2)}), 0.7);
  CHECK(std::abs(conjecture1_residual(flat).residual) <= 1e-12);

  const InequalityReport r2 = conjecture1_residual(equality_form());
  CHECK(r2.residual >= -1e-12);
  CHECK(std::abs(r2.residual) <= 1e-12);  // equality configuration
}

TEST_CASE("eq1a_residual examples") {
  const InequalityReport r1 = eq1a_residual(corner());
  CHECK(r1.lhs == doctest::Approx(1.0));
  CHECK(r1.rhs == doctest::Approx(0.0));
  CHECK(r1.residual == doctest::Approx(1.0));

  const SecondFundamentalForm flat(SymTuple({SymMatrix::zero(3), SymMatrix::zero(3)}),
                                   0.0);
  CHECK(eq1a_residual(flat).residual == 0.0);

  const InequalityReport r2 = eq1a_residual(equality_form());
  CHECK(r2.lhs == doctest::Approx(8.0));
  CHECK(r2.rhs == doctest::Approx(8.0));
  CHECK(std::abs(r2.residual) <= 1e-12);
}

TEST_CASE("conjecture1 and eq1a agree in sign for random forms") {
  std::mt19937_64 rng = make_rng(32);
  std::uniform_int_distribution<Eigen::Index> pick_n(2, 4);
  std::uniform_int_distribution<Eigen::Index> pick_m(2, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const SecondFundamentalForm f = random_form(pick_n(rng), pick_m(rng), rng);
    const InequalityReport conj1 = conjecture1_residual(f);
    const InequalityReport eq1a = eq1a_residual(f);
    auto sign = [](const InequalityReport& r) {
      if (std::abs(r.residual) < 1e-10 * r.scale) return 0;
      return r.residual > 0.0 ? 1 : -1;
    };
    CHECK(sign(conj1) == sign(eq1a));
  }
}

TEST_CASE("eq1a rhs ignores identity shifts of each slice") {
  std::mt19937_64 rng = make_rng(33);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const SecondFundamentalForm f = random_form(3, 3, rng);
    std::vector<SymMatrix> shifted;
    for (const auto& hr : f.h().mats()) {
      shifted.emplace_back(hr.mat() +
                           gauss(rng) * Eigen::MatrixXd::Identity(3, 3));
    }
    const SecondFundamentalForm g(SymTuple(std::move(shifted)), f.c());
    CHECK(ddvv::testing::rel_close(eq1a_residual(f).rhs, eq1a_residual(g).rhs, 1e-10));
  }
}

TEST_CASE("eq1a rhs equals n sqrt(2 C) of the matrix tuple") {
  std::mt19937_64 rng = make_rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    const SecondFundamentalForm f = random_form(4, 3, rng);
    const double rhs = eq1a_residual(f).rhs;
    const double n = static_cast<double>(f.n());
    const double via_energy = n * std::sqrt(2.0 * commutator_energy(f.as_tuple()));
    CHECK(ddvv::testing::rel_close(rhs, via_energy, 1e-10));
  }
}
