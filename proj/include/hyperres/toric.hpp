// Toric presentations of monomial subalgebras (Segre, Veronese,
// Segre-Veronese, chain rings, fiber cones of equigenerated monomial ideals)
// and the structured linear forms that live on them.
//
// Source variables are grouped into blocks X_{i,1..n_i}. Presentation
// variables follow the generating monomials in descending lex order of their
// exponent vectors, fixed once per presentation.

#ifndef HYPERRES_TORIC_HPP
#define HYPERRES_TORIC_HPP

#include <string>
#include <vector>

#include "hyperres/ideal.hpp"
#include "hyperres/restriction.hpp"

namespace hyperres {

enum class ToricKind { segre, veronese, segre_veronese, chain, fiber_cone };

/// Shapes of structured forms: l_1⋯l_s, l^b, l_1^{b_1}⋯l_s^{b_s}, and
/// l_1(l_1+l_2)⋯(l_1+⋯+l_s).
enum class StructuredVariant { segre_product, veronese_power, segre_veronese, chain_partial_sums };

std::string to_string(ToricKind kind);
std::string to_string(StructuredVariant variant);
/// Accepts the names produced by to_string. Throws std::invalid_argument.
StructuredVariant parse_structured_variant(const std::string& text);

template <class F>
struct ToricPresentation {
  ToricKind kind;
  /// n_1..n_s; for chain rings the nondecreasing bounds; for fiber cones one block.
  std::vector<std::size_t> block_sizes;
  /// b_1..b_s (all ones for Segre; the chain length times one for chain rings).
  std::vector<unsigned> block_degrees;
  std::size_t source_vars = 0;
  /// One generating monomial per presentation variable, in source variables.
  std::vector<Monomial> images;
  /// K[T_1..T_m] with readable variable names.
  RingPtr<F> ring;
  /// Kernel of T_i -> images[i].
  Ideal<F> presentation_ideal;

  std::size_t num_vars() const { return images.size(); }
  GradedQuotient<F> quotient() const { return GradedQuotient<F>(presentation_ideal); }
  /// The variant matching this presentation's kind.
  StructuredVariant natural_variant() const;
};

template <class F>
ToricPresentation<F> segre(const F& field, const std::vector<std::size_t>& sizes);

template <class F>
ToricPresentation<F> veronese(const F& field, std::size_t num_source_vars, unsigned degree);

template <class F>
ToricPresentation<F> segre_veronese(const F& field, const std::vector<std::size_t>& sizes,
                                    const std::vector<unsigned>& degrees);

/// Products X_{i_1}⋯X_{i_s} with i_j <= n_j; `bounds` must be nondecreasing.
/// Each distinct monomial is one presentation variable, labelled by its
/// nondecreasing index tuple.
template <class F>
ToricPresentation<F> chain_toric(const F& field, const std::vector<std::size_t>& bounds);

/// Presentation of K[generators] for an equigenerated monomial ideal.
template <class F>
ToricPresentation<F> fiber_cone(const F& field, const std::vector<Monomial>& generators);

/// Expands the structured product in the source variables and reads off the
/// coefficient of every generating monomial. `underlying` holds one form per
/// factor; factor i of a block presentation has n_i coefficients, factor i of
/// a chain ring has n_i coefficients on X_1..X_{n_i}.
template <class F>
LinearForm<F> structured_form(const ToricPresentation<F>& toric,
                              const std::vector<std::vector<typename F::Element>>& underlying,
                              StructuredVariant variant);

/// Samples the underlying forms and returns the structured form.
template <class F>
LinearForm<F> sample_structured_form(const ToricPresentation<F>& toric, StructuredVariant variant,
                                     Rng& rng);

/// Whether every generator of the presentation ideal vanishes after
/// substituting the generating monomials.
template <class F>
bool kernel_vanishes(const ToricPresentation<F>& toric);

}  // namespace hyperres

#endif  // HYPERRES_TORIC_HPP
