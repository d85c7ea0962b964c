#include "hyperres/macaulay.hpp"

#include <stdexcept>

namespace hyperres {

BigInt binom(const BigInt& a, unsigned long b) {
  if (a < 0 || a < b) return 0;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), a.get_mpz_t(), b);
  return out;
}

BigInt binom(long a, unsigned long b) { return binom(BigInt(a), b); }

BigInt MacaulayRep::evaluate(long shift, long lift) const {
  BigInt sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    long bottom = static_cast<long>(degree - i) + lift;
    if (bottom < 0) continue;
    sum += binom(BigInt(coeffs[i] + shift), static_cast<unsigned long>(bottom));
  }
  return sum;
}

namespace {

// Largest k in [floor, cap) with binom(k, j) <= rest; floor itself is always
// admissible because callers pass floor < j (binomial zero) or a checked value.
BigInt largest_fitting(const BigInt& rest, unsigned j, const BigInt& floor, const BigInt& cap) {
  BigInt lo = floor;  // binom(lo, j) <= rest
  BigInt step = 1;
  BigInt hi = lo + step;
  while (hi < cap && binom(hi, j) <= rest) {
    lo = hi;
    step *= 2;
    hi = lo + step;
  }
  if (hi > cap) hi = cap;
  // Invariant: binom(lo) <= rest, and hi == cap or binom(hi) > rest.
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (binom(mid, j) <= rest)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

MacaulayRep macaulay_rep(const BigInt& c, unsigned d) {
  if (c < 0) throw std::invalid_argument("macaulay_rep: c must be non-negative");
  if (d == 0) throw std::invalid_argument("macaulay_rep: d must be positive");
  MacaulayRep rep{c, d, {}};
  rep.coeffs.reserve(d);
  BigInt rest = c;
  // binom(c + d, d) > c, so the top coefficient lies below c + d.
  BigInt cap = c + d + 1;
  for (unsigned j = d; j >= 1; --j) {
    BigInt floor = j - 1;
    if (floor >= cap) floor = cap - 1;
    BigInt k = largest_fitting(rest, j, floor, cap);
    rest -= binom(k, j);
    rep.coeffs.push_back(k);
    cap = k;
  }
  return rep;
}

BigInt macaulay_lower(const BigInt& c, unsigned d) { return macaulay_rep(c, d).evaluate(-1, 0); }

BigInt macaulay_upper(const BigInt& c, unsigned d) { return macaulay_rep(c, d).evaluate(1, 1); }

BigInt shifted_bound(const BigInt& c, unsigned d, unsigned long p) {
  if (p == 0) return c;
  return macaulay_rep(c, d).evaluate(-static_cast<long>(p), 0);
}

bool lemma_green_inequality(const BigInt& c, const BigInt& c_h, unsigned d) {
  if (c_h < 0 || c_h > c)
    throw std::invalid_argument("lemma_green_inequality: requires 0 <= c_H <= c");
  const BigInt rest = c - c_h;
  const BigInt rest_lower = d == 1 ? rest : macaulay_lower(rest, d - 1);
  const bool hypothesis = c_h <= macaulay_lower(c_h, d) + rest_lower;
  return !hypothesis || c_h <= macaulay_lower(c, d);
}

bool is_o_sequence(std::span<const BigInt> hf) {
  if (hf.empty() || hf[0] != 1) return false;
  for (std::size_t d = 1; d + 1 < hf.size(); ++d) {
    if (hf[d] < 0 || hf[d + 1] < 0) return false;
    if (hf[d + 1] > macaulay_upper(hf[d], static_cast<unsigned>(d))) return false;
  }
  return true;
}

bool is_o_sequence(std::span<const unsigned long> hf) {
  std::vector<BigInt> big(hf.begin(), hf.end());
  return is_o_sequence(std::span<const BigInt>(big));
}

}  // namespace hyperres
