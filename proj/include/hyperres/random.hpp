// Seeded generators for randomized experiments.

#ifndef HYPERRES_RANDOM_HPP
#define HYPERRES_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hyperres/ideal.hpp"

namespace hyperres {

using Rng = std::mt19937_64;

/// Seed for trial `index` of a run with master seed `seed` (splitmix64 mix),
/// so any single trial can be replayed on its own.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Dense homogeneous polynomial: every monomial of `degree` gets an
/// independent uniform coefficient.
template <class F>
Polynomial<F> random_homogeneous(const RingPtr<F>& ring, unsigned degree, Rng& rng);

struct RandomIdealShape {
  unsigned min_generators = 1;
  unsigned max_generators = 3;
  unsigned min_degree = 1;
  unsigned max_degree = 3;
};

/// Generator count and degrees drawn uniformly from the shape's ranges.
template <class F>
Ideal<F> random_homogeneous_ideal(const RingPtr<F>& ring, const RandomIdealShape& shape, Rng& rng);

}  // namespace hyperres

#endif  // HYPERRES_RANDOM_HPP
