// Eakin-Sathaye reductions at the level of a standard graded algebra R: find
// p forms of degree one (plain or structured) with (R/(l_1..l_p))_i = 0.

#ifndef HYPERRES_REDUCTION_HPP
#define HYPERRES_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperres/ideal.hpp"
#include "hyperres/restriction.hpp"
#include "hyperres/toric.hpp"

namespace hyperres {

enum class ReductionVariant { general, segre_product, veronese_power, segre_veronese, chain_partial_sums };

std::string to_string(ReductionVariant variant);
/// Accepts the names produced by to_string. Throws std::invalid_argument.
ReductionVariant parse_reduction_variant(const std::string& text);

template <class F>
struct ReductionProblem {
  GradedQuotient<F> algebra;
  unsigned power = 1;
  unsigned num_elements = 1;
  ReductionVariant variant = ReductionVariant::general;
  /// Required for every variant except `general`.
  std::optional<ToricPresentation<F>> toric;
};

template <class F>
struct ReductionResult {
  std::vector<LinearForm<F>> forms;
  std::size_t trials_used = 0;
  bool verified = false;
};

struct SearchOptions {
  std::size_t max_trials = 32;
  /// Variants l^b, l_1^{b_1}...l_s^{b_s} and the chain products need
  /// characteristic 0 or a prime at least this large; 0 turns the check off.
  std::uint64_t characteristic_bound = 65521;
  /// Search even when the numerical criterion fails.
  bool exploratory = false;
};

/// dim_K R_i < binom(i + p, i).
template <class F>
bool criterion_holds(const GradedQuotient<F>& algebra, unsigned power, unsigned num_elements);

/// Trial t draws its forms from derive_seed(seed, t), so any trial can be
/// replayed on its own. Returns the first verifying trial, or the last
/// attempted forms with verified = false once the budget is spent.
/// Throws std::invalid_argument when the criterion fails (outside exploratory
/// mode), when toric data is missing or mismatched, or when the field's
/// characteristic is below the configured bound for a power-type variant.
template <class F>
ReductionResult<F> search_reduction(const ReductionProblem<F>& problem, std::uint64_t seed,
                                    const SearchOptions& options = {});

template <class F>
bool verify_reduction(const GradedQuotient<F>& algebra, std::span<const LinearForm<F>> forms, unsigned power);

/// Number of minimal generators of (generators)^power.
std::uint64_t power_generator_count(std::span<const Monomial> generators, unsigned power);

}  // namespace hyperres

#endif  // HYPERRES_REDUCTION_HPP
