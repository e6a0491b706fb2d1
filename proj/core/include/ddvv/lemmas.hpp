#pragma once

#include <cstdint>

#include "ddvv/sym_matrix.hpp"

namespace ddvv {

/// Inputs of the two-term eigenvalue lemma: weights x >= y >= 0, a unit
/// vector eta, and index pairs {i,j} != {k,l} (0-based, i != j, k != l).
struct Lemma1Instance {
  double x;
  double y;
  Eigen::VectorXd eta;
  Eigen::Index i, j, k, l;

  Lemma1Instance(double x, double y, Eigen::VectorXd eta, Eigen::Index i,
                 Eigen::Index j, Eigen::Index k, Eigen::Index l);
};

/// 2x + y - ((eta_i - eta_j)^2 x + (eta_k - eta_l)^2 y); nonnegative by the
/// lemma.
double lemma1_residual(const Lemma1Instance& inst);

/// Largest eigenvalue of [[x+y,-x,-y],[-x,x,0],[-y,0,y]], computed by a
/// symmetric eigensolver. Requires x >= y >= 0.
double lemma1_max_eigenvalue(double x, double y);

/// The closed form x + y + sqrt(x^2 - xy + y^2) for the same eigenvalue;
/// cross-checked against the eigensolver, never trusted alone.
double lemma1_closed_form(double x, double y);

/// d1 (x cos^2 a + y sin^2 a) + d2 (x sin^2 a + y cos^2 a). Sinusoidal in
/// cos 2a, so the maximum over a is attained at 0 or pi/2.
double case1_profile(double alpha, double x, double y, double d1, double d2);

/// (2x + y) - 4(b^2 + c^2) under the orthogonality constraint
/// 2 b c + <diag_b, diag_c> = 0 and the norm bookkeeping 2b^2 + |diag_b|^2 = x,
/// 2c^2 + |diag_c|^2 = y with x >= y. Throws if a constraint is violated
/// beyond 1e-10.
double case2_bound(double b, double c, double x, double y,
                   const Eigen::VectorXd& diag_b, const Eigen::VectorXd& diag_c);

/// a = 2 sum_{i>=2} ||[A_1', A_i]||^2 - 3 sum_{i>=2} ||A_i||^2 for a unit
/// first member (||A_1'|| = 1 to 1e-10).
double reduction_a(const SymMatrix& a1_unit, const SymTuple& rest);

/// The quartic-in-t rewrite of the P' residual for the split tuple
/// (t A_1', rest): (1/2) t^4 - a t^2 + [(3/2)(sum ||A_i||^2)^2 -
/// sum ||A_i||^4 - 2 sum_{i<j} ||[A_i, A_j]||^2]. Identical to
/// pprime_residual of the assembled tuple; when a > 0 the minimum over t is
/// at t^2 = a.
double reduction_quartic(double t, const SymMatrix& a1_unit, const SymTuple& rest);

// ---------------------------------------------------------------------------
// Shipped brute-force oracles. These reproduce the sampled/grid evidence for
// each case analysis; the CLI `lemmas` command runs them all.

struct SweepSummary {
  std::size_t samples;
  double min_residual;
};

/// Random Lemma1Instances (dimension 3..n_max); min residual over the sweep.
SweepSummary lemma1_random_sweep(std::size_t samples, Eigen::Index n_max,
                                 std::uint64_t seed);

struct EigenGridSummary {
  std::size_t points;
  double max_closed_form_gap;  // max |eigensolver - closed form|
  double min_bound_margin;     // min (2x + y - eigenvalue), grid-wide
  double min_interior_margin;  // same, away from {y=0} and {y=x}
};

/// steps x steps grid over 0 <= y <= x <= max_x.
EigenGridSummary lemma1_eigen_grid(std::size_t steps, double max_x);

/// Max of case1_profile over an alpha grid on [0, pi); compare against
/// max(f(0), f(pi/2)).
double case1_grid_max(double x, double y, double d1, double d2, std::size_t steps);

/// Random feasible Case 2 instances (rejection-sampled to meet the
/// constraints); min residual over the sweep.
SweepSummary case2_random_sweep(std::size_t samples, Eigen::Index dim,
                                std::uint64_t seed);

struct QuarticSweepSummary {
  std::size_t samples;
  double max_rel_mismatch;  // reduction_quartic vs assembled pprime residual
  double min_bound_margin;  // min (sum_{i>=2} ||A_i||^2 - a)
};

/// Random split tuples; checks the quartic identity and the bound on a.
QuarticSweepSummary quartic_random_sweep(std::size_t samples, std::uint64_t seed);

}  // namespace ddvv
