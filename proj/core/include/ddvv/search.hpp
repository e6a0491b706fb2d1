#pragma once

#include <cstdint>
#include <vector>

#include "ddvv/sym_matrix.hpp"

namespace ddvv {

struct SearchOptions {
  int max_iters = 5000;
  double step_init = 0.1;
  double tol_grad = 1e-8;         // on the tangential gradient norm
  double tol_stationarity = 1e-6; // on the Lagrange residuals
  int restarts = 20;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Outcome of one ascent (or the best restart). lambda is the commutator
/// energy C at the returned tuple, a certified lower bound for the true
/// maximum, never claimed as the maximum itself.
struct SearchResult {
  SymTuple tuple;                    // S = 1
  double lambda;                     // C at the tuple
  std::vector<double> stationarity;  // per-matrix Lagrange residuals
  int iterations;
  bool converged;                    // max |stationarity| < tol_stationarity
  int restart_index;
  std::uint64_t seed;
};

/// Outcome of a single ascent run. energy_trace records the accepted
/// iterates' C values (monotone nondecreasing by construction).
struct AscentResult {
  SymTuple tuple;
  double lambda;
  std::vector<double> stationarity;
  int iterations;
  bool converged;
  std::vector<double> energy_trace;
};

/// Euclidean gradient of C: G_r = 2 sum_{s != r} [[A_r, A_s], A_s]. Each G_r
/// is symmetric; <G, V> matches d/dt C(T + tV) at t = 0 for every symmetric
/// direction V.
std::vector<SymMatrix> euclidean_gradient(const SymTuple& t);

/// Lagrange residuals at a point on the sphere S = 1:
/// residual_r = sum_{s != r} ||[A_r, A_s]||^2 - 2 C(T) ||A_r||^2.
/// All residuals vanish at an exact constrained maximizer, and they sum to
/// zero identically. Throws if |S - 1| > 1e-8.
std::vector<double> stationarity_residuals(const SymTuple& t);

/// Projected gradient ascent from a given start (projected to S = 1 first):
/// t <- renormalize(t + step * G) with backtracking step halving until C
/// increases; stops when the tangential gradient norm drops below
/// opts.tol_grad or iterations run out.
AscentResult ascend_from(const SymTuple& start, const SearchOptions& opts);

/// Best ascent over opts.restarts independent Gaussian starts. Each restart
/// draws its stream from derive_seed(opts.seed, restart_index), so the result
/// does not depend on scheduling; ties in lambda keep the lowest restart
/// index.
SearchResult maximize_lambda(Eigen::Index n, Eigen::Index m, const SearchOptions& opts);

}  // namespace ddvv
