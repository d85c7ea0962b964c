// Integer combinatorics of Macaulay representations.
//
// Every non-negative integer c has a unique d'th Macaulay representation
//
//   c = binom(k_d, d) + binom(k_{d-1}, d-1) + ... + binom(k_1, 1),
//   k_d > k_{d-1} > ... > k_1 >= 0,
//
// obtained greedily from the top. Terms with binomial value zero are kept
// (the greedy choice is then k_j = j - 1 clipped below k_{j+1}), so every
// representation carries exactly d coefficients. All arithmetic is exact.

#ifndef HYPERRES_MACAULAY_HPP
#define HYPERRES_MACAULAY_HPP

#include <span>
#include <vector>

#include "hyperres/field.hpp"

namespace hyperres {

/// Binomial coefficient with binom(a, b) = 0 when a < b or a < 0.
BigInt binom(const BigInt& a, unsigned long b);
BigInt binom(long a, unsigned long b);

struct MacaulayRep {
  BigInt value;
  unsigned degree = 1;
  /// (k_d, k_{d-1}, ..., k_1); coeffs[0] is the top coefficient.
  std::vector<BigInt> coeffs;

  /// Sum of binom(coeffs[i] + shift, degree - i + lift); the building block for
  /// the lower operator (shift -1), growth (+1, +1) and shifted bounds.
  BigInt evaluate(long shift = 0, long lift = 0) const;
};

MacaulayRep macaulay_rep(const BigInt& c, unsigned d);

/// c_<d>: subtract one from every Macaulay coefficient and re-sum.
BigInt macaulay_lower(const BigInt& c, unsigned d);

/// c^<d>: the Macaulay growth bound, binom(k_d + 1, d + 1) + ... + binom(k_1 + 1, 2).
BigInt macaulay_upper(const BigInt& c, unsigned d);

/// binom(k_d - p, d) + ... + binom(k_1 - p, 1); p = 0 returns c, p = 1 is c_<d>.
BigInt shifted_bound(const BigInt& c, unsigned d, unsigned long p);

/// Truth of the implication
///   c_H <= (c_H)_<d> + (c - c_H)_<d-1>   ==>   c_H <= c_<d>,
/// with the <0> operator read as the identity. Requires 0 <= c_H <= c.
bool lemma_green_inequality(const BigInt& c, const BigInt& c_h, unsigned d);

/// Macaulay's characterization: hf[0] = 1 and hf[d+1] <= hf[d]^<d> for d >= 1.
bool is_o_sequence(std::span<const BigInt> hf);
bool is_o_sequence(std::span<const unsigned long> hf);

}  // namespace hyperres

#endif  // HYPERRES_MACAULAY_HPP
