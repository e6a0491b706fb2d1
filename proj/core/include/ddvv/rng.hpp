#pragma once

#include <cstdint>
#include <random>

#include "ddvv/sym_matrix.hpp"

namespace ddvv {

/// SplitMix64 finalizer. Every derived RNG stream in this project is seeded by
/// mixing a base seed with a task index through this function, so results do
/// not depend on scheduling order.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

enum class TupleDistribution { gaussian, traceless_gaussian };

/// Independent standard Gaussian entries, then symmetrized as (M + M^T)/2.
SymMatrix random_sym_matrix(Eigen::Index n, std::mt19937_64& rng);

SymTuple random_sym_tuple(Eigen::Index n, Eigen::Index m, std::mt19937_64& rng,
                          TupleDistribution dist = TupleDistribution::gaussian);

/// Gaussian tuple projected to the sphere S = 1.
SymTuple random_unit_tuple(Eigen::Index n, Eigen::Index m, std::mt19937_64& rng);

}  // namespace ddvv
