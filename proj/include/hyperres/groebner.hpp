// Division algorithm and Buchberger's algorithm.

#ifndef HYPERRES_GROEBNER_HPP
#define HYPERRES_GROEBNER_HPP

#include <span>
#include <vector>

#include "hyperres/polynomial.hpp"

namespace hyperres {

/// Fully reduced remainder of `f` modulo `basis` under the order of f's ring:
/// no term of the result is divisible by a leading monomial of the basis.
/// Throws std::invalid_argument on a variable-count or order mismatch.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> basis);

/// Same, after moving f and the basis to `order`.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> basis,
                          const MonomialOrder& order);

/// The reduced Groebner basis of the ideal generated by `gens`, under the order
/// of their common ring. Monic, pairwise top-irreducible, sorted ascending by
/// leading monomial. Zero generators are ignored; the empty list yields the
/// empty basis.
///
/// S-pairs are processed by the normal strategy (smallest lcm first) with the
/// coprime and chain criteria.
template <class F>
std::vector<Polynomial<F>> buchberger(std::span<const Polynomial<F>> gens);

/// Same, in a copy of the generators' ring ordered by `order`.
template <class F>
std::vector<Polynomial<F>> buchberger(std::span<const Polynomial<F>> gens, const MonomialOrder& order);

/// True when `basis` is a reduced Groebner basis: every S-polynomial reduces
/// to zero, leading coefficients are one and no term is divisible by another
/// element's leading monomial.
template <class F>
bool is_reduced_groebner_basis(std::span<const Polynomial<F>> basis);

}  // namespace hyperres

#endif  // HYPERRES_GROEBNER_HPP
