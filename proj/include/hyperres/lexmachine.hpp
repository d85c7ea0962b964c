// Lex-segment ideals with a prescribed Hilbert function.
//
// Variables are ordered x_1 > x_2 > ... > x_n; the last variable is the one
// used for restriction, so dim (A/(L + (x_n)))_d = c_<d> with c = dim (A/L)_d
// for the lex-segment ideal L.

#ifndef HYPERRES_LEXMACHINE_HPP
#define HYPERRES_LEXMACHINE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hyperres/ideal.hpp"

namespace hyperres {

/// Hilbert function values on degrees 0..horizon() for an n-variable ring.
class HilbertFunction {
 public:
  /// Throws std::invalid_argument unless values[0] = 1, every value fits in
  /// the ambient ring and the sequence satisfies Macaulay's growth bound.
  HilbertFunction(std::size_t num_vars, std::vector<std::uint64_t> values);

  std::size_t num_vars() const { return num_vars_; }
  int horizon() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<std::uint64_t>& values() const { return values_; }
  std::uint64_t operator[](std::size_t d) const { return values_[d]; }

  /// Uniformly picks each next value in [0, min(growth bound, ambient)].
  static HilbertFunction random(std::size_t num_vars, int horizon, std::mt19937_64& rng);

 private:
  std::size_t num_vars_;
  std::vector<std::uint64_t> values_;
};

/// The ideal generated, in degrees 1..horizon, by the lex-largest monomials
/// that the quotient basis of each degree excludes.
template <class F>
Ideal<F> lex_segment_ideal(RingPtr<F> ring, const HilbertFunction& hf);

/// dim_K (A/(I + (x_n)))_d.
template <class F>
std::uint64_t lex_restricted_dim(const Ideal<F>& lex_ideal, int degree);

/// True when every degree-d piece (d <= horizon) of the monomial ideal is an
/// initial segment of the lex order.
template <class F>
bool is_lex_segment(const Ideal<F>& monomial_ideal, int horizon);

extern template Ideal<PrimeField> lex_segment_ideal(RingPtr<PrimeField>, const HilbertFunction&);
extern template Ideal<RationalField> lex_segment_ideal(RingPtr<RationalField>, const HilbertFunction&);

}  // namespace hyperres

#endif  // HYPERRES_LEXMACHINE_HPP
