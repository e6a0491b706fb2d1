#include "ddvv/search.hpp"

#include <cmath>
#include <stdexcept>

#include "ddvv/inequalities.hpp"
#include "ddvv/rng.hpp"

namespace ddvv {

namespace {

using MatList = std::vector<Eigen::MatrixXd>;

MatList to_raw(const SymTuple& t) {
  MatList raw;
  raw.reserve(static_cast<std::size_t>(t.size()));
  for (const auto& a : t.mats()) raw.push_back(a.mat());
  return raw;
}

SymTuple to_tuple(const MatList& raw) {
  std::vector<SymMatrix> mats;
  mats.reserve(raw.size());
  for (const auto& a : raw) mats.emplace_back(a);
  return SymTuple(std::move(mats));
}

// G_r = 2 sum_{s != r} [[A_r, A_s], A_s].
MatList gradient_raw(const MatList& a) {
  const std::size_t m = a.size();
  const Eigen::Index n = a.front().rows();
  MatList grad(m, Eigen::MatrixXd::Zero(n, n));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      if (s == r) continue;
      const Eigen::MatrixXd k = a[r] * a[s] - a[s] * a[r];
      grad[r] += 2.0 * (k * a[s] - a[s] * k);
    }
  }
  return grad;
}

// residual_r = sum_{s != r} ||[A_r, A_s]||^2 - 2 C ||A_r||^2, for S = 1.
std::vector<double> stationarity_raw(const MatList& a) {
  const std::size_t m = a.size();
  std::vector<double> row_energy(m, 0.0);
  double c = 0.0;
  for (std::size_t r = 0; r + 1 < m; ++r) {
    for (std::size_t s = r + 1; s < m; ++s) {
      const double e = (a[r] * a[s] - a[s] * a[r]).squaredNorm();
      row_energy[r] += e;
      row_energy[s] += e;
      c += e;
    }
  }
  std::vector<double> res(m);
  for (std::size_t r = 0; r < m; ++r) {
    res[r] = row_energy[r] - 2.0 * c * a[r].squaredNorm();
  }
  return res;
}

void renormalize(MatList& a) {
  const double s = detail::norm_sum(a);
  if (s <= 0.0) throw std::domain_error("ascent: cannot project the zero tuple");
  const double inv = 1.0 / std::sqrt(s);
  for (auto& mat : a) {
    mat *= inv;
    mat = 0.5 * (mat + mat.transpose().eval());  // keep rounding drift out
  }
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

void SearchOptions::validate() const {
  if (max_iters < 1) throw std::invalid_argument("SearchOptions: max_iters must be >= 1");
  if (!(step_init > 0.0)) throw std::invalid_argument("SearchOptions: step_init must be > 0");
  if (!(tol_grad > 0.0)) throw std::invalid_argument("SearchOptions: tol_grad must be > 0");
  if (!(tol_stationarity > 0.0)) {
    throw std::invalid_argument("SearchOptions: tol_stationarity must be > 0");
  }
  if (restarts < 1) throw std::invalid_argument("SearchOptions: restarts must be >= 1");
}

std::vector<SymMatrix> euclidean_gradient(const SymTuple& t) {
  const MatList grad = gradient_raw(to_raw(t));
  std::vector<SymMatrix> out;
  out.reserve(grad.size());
  for (const auto& g : grad) out.emplace_back(g);
  return out;
}

std::vector<double> stationarity_residuals(const SymTuple& t) {
  if (std::abs(total_norm(t) - 1.0) > 1e-8) {
    throw std::invalid_argument("stationarity_residuals: tuple is not normalized to S = 1");
  }
  return stationarity_raw(to_raw(t));
}

AscentResult ascend_from(const SymTuple& start, const SearchOptions& opts) {
  opts.validate();
  MatList current = to_raw(start);
  renormalize(current);
  double energy = detail::energy(current);

  std::vector<double> trace{energy};
  double step = opts.step_init;
  int iterations = 0;

  for (; iterations < opts.max_iters; ++iterations) {
    const MatList grad = gradient_raw(current);

    // Tangential part: subtract the radial component <G, T> T on the stacked
    // sphere (S = 1, so T itself is the unit normal).
    double radial = 0.0;
    for (std::size_t r = 0; r < grad.size(); ++r) {
      radial += grad[r].cwiseProduct(current[r]).sum();
    }
    double tangential_sq = 0.0;
    for (std::size_t r = 0; r < grad.size(); ++r) {
      tangential_sq += (grad[r] - radial * current[r]).squaredNorm();
    }
    if (std::sqrt(tangential_sq) < opts.tol_grad) break;

    // Backtracking: halve until ascent; below 1e-14 the stationarity test
    // decides convergence.
    bool accepted = false;
    while (step >= 1e-14) {
      MatList candidate = current;
      for (std::size_t r = 0; r < candidate.size(); ++r) {
        candidate[r] += step * grad[r];
      }
      if (detail::norm_sum(candidate) > 0.0) {
        renormalize(candidate);
        const double cand_energy = detail::energy(candidate);
        if (cand_energy > energy) {
          current = std::move(candidate);
          energy = cand_energy;
          trace.push_back(energy);
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;
    step = std::min(step * 2.0, 1e2);
  }

  std::vector<double> residuals = stationarity_raw(current);
  const bool converged = max_abs(residuals) < opts.tol_stationarity;
  return AscentResult{to_tuple(current), energy,       std::move(residuals),
                      iterations,        converged,    std::move(trace)};
}

SearchResult maximize_lambda(Eigen::Index n, Eigen::Index m, const SearchOptions& opts) {
  opts.validate();
  if (n < 1 || m < 1) {
    throw std::invalid_argument("maximize_lambda: n and m must be >= 1");
  }
  SearchResult best{SymTuple({SymMatrix::zero(1)}), -1.0, {}, 0, false, -1, opts.seed};
  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::mt19937_64 rng = make_rng(derive_seed(opts.seed, static_cast<std::uint64_t>(restart)));
    const SymTuple start = random_unit_tuple(n, m, rng);
    AscentResult run = ascend_from(start, opts);
    // Strict improvement only, so ties keep the lowest restart index.
    if (run.lambda > best.lambda) {
      best = SearchResult{std::move(run.tuple), run.lambda,   std::move(run.stationarity),
                          run.iterations,       run.converged, restart,
                          opts.seed};
    }
  }
  return best;
}

}  // namespace ddvv
