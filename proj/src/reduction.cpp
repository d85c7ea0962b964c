#include "hyperres/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hyperres/macaulay.hpp"

namespace hyperres {

std::string to_string(ReductionVariant variant) {
  switch (variant) {
    case ReductionVariant::general:
      return "general";
    case ReductionVariant::segre_product:
      return "segre-product";
    case ReductionVariant::veronese_power:
      return "veronese-power";
    case ReductionVariant::segre_veronese:
      return "segre-veronese";
    case ReductionVariant::chain_partial_sums:
      return "chain-partial-sums";
  }
  return "?";
}

ReductionVariant parse_reduction_variant(const std::string& text) {
  for (auto v : {ReductionVariant::general, ReductionVariant::segre_product, ReductionVariant::veronese_power,
                 ReductionVariant::segre_veronese, ReductionVariant::chain_partial_sums})
    if (to_string(v) == text) return v;
  throw std::invalid_argument("unknown reduction variant '" + text + "'");
}

namespace {

StructuredVariant structured(ReductionVariant v) {
  switch (v) {
    case ReductionVariant::segre_product:
      return StructuredVariant::segre_product;
    case ReductionVariant::veronese_power:
      return StructuredVariant::veronese_power;
    case ReductionVariant::segre_veronese:
      return StructuredVariant::segre_veronese;
    case ReductionVariant::chain_partial_sums:
      return StructuredVariant::chain_partial_sums;
    case ReductionVariant::general:
      break;
  }
  throw std::logic_error("general variant has no structured shape");
}

bool power_type(ReductionVariant v) {
  return v == ReductionVariant::veronese_power || v == ReductionVariant::segre_veronese ||
         v == ReductionVariant::chain_partial_sums;
}

}  // namespace

template <class F>
bool criterion_holds(const GradedQuotient<F>& algebra, unsigned power, unsigned num_elements) {
  if (power == 0 || num_elements == 0) throw std::invalid_argument("criterion_holds: i and p must be positive");
  return BigInt(static_cast<unsigned long>(algebra.hilbert_dim(static_cast<int>(power)))) <
         binom(BigInt(power + num_elements), power);
}

template <class F>
bool verify_reduction(const GradedQuotient<F>& algebra, std::span<const LinearForm<F>> forms, unsigned power) {
  std::vector<Polynomial<F>> polys;
  for (const auto& l : forms) polys.push_back(l.to_polynomial(algebra.ring_ptr()));
  auto ideal = ideal_sum(algebra.defining_ideal(), std::span<const Polynomial<F>>(polys));
  return hilbert_dim(ideal, static_cast<int>(power)) == 0;
}

template <class F>
ReductionResult<F> search_reduction(const ReductionProblem<F>& problem, std::uint64_t seed,
                                    const SearchOptions& options) {
  const auto& algebra = problem.algebra;
  if (!options.exploratory && !criterion_holds(algebra, problem.power, problem.num_elements))
    throw std::invalid_argument("search_reduction: dim R_" + std::to_string(problem.power) +
                                " >= binom(i+p, i); refusing to search");
  if (problem.variant != ReductionVariant::general) {
    if (!problem.toric) throw std::invalid_argument("search_reduction: structured variant needs toric data");
    if (problem.toric->num_vars() != algebra.num_vars())
      throw std::invalid_argument("search_reduction: algebra is not a quotient of the presentation ring");
  }
  if (power_type(problem.variant) && options.characteristic_bound != 0) {
    const auto p = algebra.field().characteristic();
    if (p != 0 && p < options.characteristic_bound)
      throw std::invalid_argument("search_reduction: characteristic " + std::to_string(p) +
                                  " is below the bound " + std::to_string(options.characteristic_bound));
  }

  ReductionResult<F> result;
  for (std::size_t t = 0; t < options.max_trials; ++t) {
    Rng rng(derive_seed(seed, t));
    result.forms.clear();
    for (unsigned j = 0; j < problem.num_elements; ++j) {
      if (problem.variant == ReductionVariant::general)
        result.forms.push_back(sample_linear_form(algebra.num_vars(), algebra.field(), rng));
      else
        result.forms.push_back(sample_structured_form(*problem.toric, structured(problem.variant), rng));
    }
    result.trials_used = t + 1;
    if (verify_reduction(algebra, std::span<const LinearForm<F>>(result.forms), problem.power)) {
      result.verified = true;
      break;
    }
  }
  return result;
}

std::uint64_t power_generator_count(std::span<const Monomial> generators, unsigned power) {
  if (generators.empty()) return 0;
  if (power == 0) return 1;
  const std::size_t n = generators.front().num_vars();
  auto key = [](const Monomial& m) { return m.exponents(); };
  std::set<std::vector<unsigned>> current{key(Monomial(n))};
  for (unsigned k = 0; k < power; ++k) {
    std::set<std::vector<unsigned>> next;
    for (const auto& e : current)
      for (const auto& g : generators) next.insert(key(Monomial(e) * g));
    current = std::move(next);
  }
  std::vector<Monomial> products;
  for (const auto& e : current) products.emplace_back(e);
  std::uint64_t minimal = 0;
  for (std::size_t a = 0; a < products.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < products.size() && !redundant; ++b)
      redundant = b != a && products[b].divides(products[a]);
    if (!redundant) ++minimal;
  }
  return minimal;
}

#define HYPERRES_INSTANTIATE(F)                                                                         \
  template bool criterion_holds(const GradedQuotient<F>&, unsigned, unsigned);                          \
  template bool verify_reduction(const GradedQuotient<F>&, std::span<const LinearForm<F>>, unsigned);  \
  template ReductionResult<F> search_reduction(const ReductionProblem<F>&, std::uint64_t, const SearchOptions&);

HYPERRES_INSTANTIATE(PrimeField)
HYPERRES_INSTANTIATE(RationalField)

}  // namespace hyperres
