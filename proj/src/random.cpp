#include "hyperres/random.hpp"

namespace hyperres {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

template <class F>
Polynomial<F> random_homogeneous(const RingPtr<F>& ring, unsigned degree, Rng& rng) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (auto& m : monomials_of_degree(ring->num_vars(), degree))
    terms.push_back({std::move(m), ring->field().random(rng)});
  return Polynomial<F>(ring, std::move(terms));
}

template <class F>
Ideal<F> random_homogeneous_ideal(const RingPtr<F>& ring, const RandomIdealShape& shape, Rng& rng) {
  std::uniform_int_distribution<unsigned> count(shape.min_generators, shape.max_generators);
  std::uniform_int_distribution<unsigned> degree(shape.min_degree, shape.max_degree);
  const unsigned k = count(rng);
  std::vector<Polynomial<F>> gens;
  for (unsigned i = 0; i < k; ++i) gens.push_back(random_homogeneous(ring, degree(rng), rng));
  return Ideal<F>(ring, std::move(gens));
}

template Polynomial<PrimeField> random_homogeneous(const RingPtr<PrimeField>&, unsigned, Rng&);
template Polynomial<RationalField> random_homogeneous(const RingPtr<RationalField>&, unsigned, Rng&);
template Ideal<PrimeField> random_homogeneous_ideal(const RingPtr<PrimeField>&, const RandomIdealShape&,
                                                    Rng&);
template Ideal<RationalField> random_homogeneous_ideal(const RingPtr<RationalField>&,
                                                       const RandomIdealShape&, Rng&);

}  // namespace hyperres
