#include "hyperres/lexmachine.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperres/macaulay.hpp"

namespace hyperres {

HilbertFunction::HilbertFunction(std::size_t num_vars, std::vector<std::uint64_t> values)
    : num_vars_(num_vars), values_(std::move(values)) {
  if (num_vars_ == 0) throw std::invalid_argument("hilbert function: need at least one variable");
  if (values_.empty() || values_[0] != 1)
    throw std::invalid_argument("hilbert function: value in degree 0 must be 1");
  for (std::size_t d = 0; d < values_.size(); ++d)
    if (values_[d] > ambient_dim(num_vars_, static_cast<int>(d)))
      throw std::invalid_argument("hilbert function: value in degree " + std::to_string(d) +
                                  " exceeds the ambient dimension");
  std::vector<unsigned long> raw(values_.begin(), values_.end());
  if (!is_o_sequence(std::span<const unsigned long>(raw)))
    throw std::invalid_argument("hilbert function: violates Macaulay's growth bound");
}

HilbertFunction HilbertFunction::random(std::size_t num_vars, int horizon, std::mt19937_64& rng) {
  std::vector<std::uint64_t> values{1};
  for (int d = 1; d <= horizon; ++d) {
    std::uint64_t cap = ambient_dim(num_vars, d);
    if (d >= 2) {
      BigInt growth = macaulay_upper(BigInt(static_cast<unsigned long>(values.back())),
                                     static_cast<unsigned>(d - 1));
      if (growth < BigInt(static_cast<unsigned long>(cap))) cap = growth.get_ui();
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, cap);
    values.push_back(dist(rng));
  }
  return HilbertFunction(num_vars, std::move(values));
}

template <class F>
Ideal<F> lex_segment_ideal(RingPtr<F> ring, const HilbertFunction& hf) {
  const std::size_t n = ring->num_vars();
  if (n != hf.num_vars()) throw std::invalid_argument("lex_segment_ideal: variable-count mismatch");
  std::vector<Monomial> gens;
  for (int d = 1; d <= hf.horizon(); ++d) {
    // Descending lex: the first (size - hf[d]) monomials leave the quotient basis.
    auto monos = monomials_of_degree(n, static_cast<unsigned>(d));
    const std::size_t excluded = monos.size() - hf[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < excluded; ++i) {
      const bool covered = std::any_of(gens.begin(), gens.end(),
                                       [&](const Monomial& g) { return g.divides(monos[i]); });
      if (!covered) gens.push_back(monos[i]);
    }
  }
  std::vector<Polynomial<F>> polys;
  polys.reserve(gens.size());
  for (auto& m : gens) polys.push_back(Polynomial<F>::monomial(ring, std::move(m), ring->field().one()));
  return Ideal<F>(std::move(ring), std::move(polys));
}

template <class F>
std::uint64_t lex_restricted_dim(const Ideal<F>& lex_ideal, int degree) {
  const std::size_t n = lex_ideal.ring().num_vars();
  auto last = Polynomial<F>::variable(lex_ideal.ring_ptr(), n - 1);
  return hilbert_dim(ideal_sum(lex_ideal, std::span<const Polynomial<F>>(&last, 1)), degree);
}

template <class F>
bool is_lex_segment(const Ideal<F>& monomial_ideal, int horizon) {
  const std::size_t n = monomial_ideal.ring().num_vars();
  std::vector<Monomial> leading;
  for (const auto& g : monomial_ideal.generators()) {
    if (g.size() != 1) return false;
    leading.push_back(g.leading_monomial());
  }
  for (int d = 0; d <= horizon; ++d) {
    bool outside_seen = false;
    for (const auto& m : monomials_of_degree(n, static_cast<unsigned>(d))) {
      const bool inside =
          std::any_of(leading.begin(), leading.end(), [&](const Monomial& g) { return g.divides(m); });
      if (inside && outside_seen) return false;
      if (!inside) outside_seen = true;
    }
  }
  return true;
}

#define HYPERRES_INSTANTIATE(F)                                                     \
  template Ideal<F> lex_segment_ideal(RingPtr<F>, const HilbertFunction&);         \
  template std::uint64_t lex_restricted_dim(const Ideal<F>&, int);                 \
  template bool is_lex_segment(const Ideal<F>&, int);

HYPERRES_INSTANTIATE(PrimeField)
HYPERRES_INSTANTIATE(RationalField)

}  // namespace hyperres
