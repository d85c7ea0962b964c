// Ideals with a cached reduced Groebner basis, the ideal operations built on
// them, and graded quotients A/I with their Hilbert dimensions.

#ifndef HYPERRES_IDEAL_HPP
#define HYPERRES_IDEAL_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "hyperres/groebner.hpp"
#include "hyperres/polynomial.hpp"

namespace hyperres {

template <class F>
class Ideal {
 public:
  /// Zero generators are dropped. All generators must live in `ring`.
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens);

  static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr<F> ring);

  const Ring<F>& ring() const { return *ring_; }
  const RingPtr<F>& ring_ptr() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }

  /// Reduced Groebner basis under the ring's order. Computed once and shared
  /// between copies; safe to call concurrently.
  const std::vector<Polynomial<F>>& groebner_basis() const;

  Polynomial<F> normal_form(const Polynomial<F>& f) const;
  bool contains(const Polynomial<F>& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const;

  /// Equality as ideals (same reduced basis).
  bool operator==(const Ideal& other) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial<F>> basis;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

/// I + J. Throws std::invalid_argument when the rings differ.
template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b);

/// I + (f_1, ..., f_k).
template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, std::span<const Polynomial<F>> extra);

/// I ∩ J via t·I + (1 - t)·J in one extra variable, eliminating t.
template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& a, const Ideal<F>& b);

/// (I : f) = {g : g·f ∈ I}, computed as (I ∩ (f)) / f.
/// Throws std::invalid_argument when f = 0.
template <class F>
Ideal<F> ideal_colon_element(const Ideal<F>& ideal, const Polynomial<F>& f);

/// I ∩ K[x_{k+1}, ..., x_n], returned in a ring on those n - k variables.
template <class F>
Ideal<F> eliminate_leading_variables(const Ideal<F>& ideal, std::size_t k, RingPtr<F> target);

/// Kernel of K[T_1..T_m] -> K[X_1..X_n], T_i -> images[i], presented in
/// `presentation_ring` (m variables). The images live in `target_vars`
/// variables and must share one total degree.
template <class F>
Ideal<F> kernel_of_monomial_map(RingPtr<F> presentation_ring, std::size_t target_vars,
                                std::span<const Monomial> images);

/// True iff every variable lies in the ideal.
template <class F>
bool contains_maximal_ideal(const Ideal<F>& ideal);

/// binom(n - 1 + d, d): dimension of the degree-d part of n-variable polynomials.
std::uint64_t ambient_dim(std::size_t num_vars, int degree);

/// Number of degree-d monomials divisible by none of `leading`.
std::uint64_t count_standard_monomials(std::size_t num_vars, int degree,
                                       std::span<const Monomial> leading);

/// A/I for homogeneous I.
template <class F>
class GradedQuotient {
 public:
  /// Throws std::invalid_argument when the ideal is not homogeneous.
  explicit GradedQuotient(Ideal<F> defining_ideal);
  /// The polynomial ring itself.
  explicit GradedQuotient(RingPtr<F> ring) : GradedQuotient(Ideal<F>::zero(std::move(ring))) {}

  const Ring<F>& ring() const { return ideal_.ring(); }
  const RingPtr<F>& ring_ptr() const { return ideal_.ring_ptr(); }
  const F& field() const { return ideal_.ring().field(); }
  std::size_t num_vars() const { return ideal_.ring().num_vars(); }
  const Ideal<F>& defining_ideal() const { return ideal_; }

  /// dim_K (A/I)_d; zero in negative degrees.
  std::uint64_t hilbert_dim(int degree) const;
  /// Values for degrees 0..max_degree.
  std::vector<std::uint64_t> hilbert_function(int max_degree) const;

  /// dim_K of the degree-d part of the ideal J/I of this quotient, for an
  /// ideal J ⊇ I given by its pre-image in A.
  std::uint64_t ideal_dim(const Ideal<F>& preimage, int degree) const;

  /// A/(I + (forms)).
  GradedQuotient quotient_by(std::span<const Polynomial<F>> forms) const;

 private:
  Ideal<F> ideal_;
};

/// dim_K (A/J)_d for a homogeneous ideal J.
template <class F>
std::uint64_t hilbert_dim(const Ideal<F>& ideal, int degree);

template <class F>
std::uint64_t hilbert_dim(const GradedQuotient<F>& q, int degree) {
  return q.hilbert_dim(degree);
}

extern template class Ideal<PrimeField>;
extern template class Ideal<RationalField>;
extern template class GradedQuotient<PrimeField>;
extern template class GradedQuotient<RationalField>;

}  // namespace hyperres

#endif  // HYPERRES_IDEAL_HPP
