// Polynomial rings and sparse polynomials over a coefficient field.

#ifndef HYPERRES_POLYNOMIAL_HPP
#define HYPERRES_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperres/field.hpp"
#include "hyperres/monomial.hpp"

namespace hyperres {

/// K[x_1, ..., x_n] with a fixed monomial order. Shared immutably between
/// the polynomials that live in it.
template <class F>
class Ring {
 public:
  Ring(F field, std::size_t num_vars, MonomialOrder order = MonomialOrder::grevlex(),
       std::vector<std::string> names = {});

  const F& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Same field, variable count and order; names are cosmetic.
  bool compatible(const Ring& other) const {
    return field_ == other.field_ && num_vars_ == other.num_vars_ && order_ == other.order_;
  }

 private:
  F field_;
  std::size_t num_vars_;
  MonomialOrder order_;
  std::vector<std::string> names_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::size_t num_vars, MonomialOrder order = MonomialOrder::grevlex(),
                     std::vector<std::string> names = {}) {
  return std::make_shared<const Ring<F>>(std::move(field), num_vars, order, std::move(names));
}

/// Same ring with a different monomial order.
template <class F>
RingPtr<F> with_order(const RingPtr<F>& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->field(), ring->num_vars(), order, ring->names());
}

template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial mono;
    Element coeff;
  };

  /// The zero polynomial of `ring`.
  explicit Polynomial(RingPtr<F> ring);
  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial(RingPtr<F> ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr<F> ring, const Element& c);
  static Polynomial variable(RingPtr<F> ring, std::size_t index);
  static Polynomial monomial(RingPtr<F> ring, Monomial m, const Element& c);
  /// Linear form sum_i coeffs[i] * x_i.
  static Polynomial linear(RingPtr<F> ring, std::span<const Element> coeffs);

  const Ring<F>& ring() const { return *ring_; }
  const RingPtr<F>& ring_ptr() const { return ring_; }
  const F& field() const { return ring_->field(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t size() const { return terms_.size(); }
  /// Terms in ascending monomial order; the leading term is last.
  std::span<const Term> terms() const { return terms_; }

  const Term& leading_term() const { return terms_.back(); }
  const Monomial& leading_monomial() const { return terms_.back().mono; }
  const Element& leading_coeff() const { return terms_.back().coeff; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Element coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Element& c) const;
  Polynomial times_term(const Monomial& m, const Element& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;
  /// Removes the leading term in place; used by reduction loops.
  void drop_leading_term() { terms_.pop_back(); }

  /// this - c * m * g, in one merge pass.
  Polynomial minus_multiple(const Monomial& m, const Element& c, const Polynomial& g) const;

  /// Quotient and remainder of multivariate division by a single divisor.
  std::pair<Polynomial, Polynomial> divide(const Polynomial& divisor) const;

  /// Re-expresses the polynomial in `target`, sending variable i to variable
  /// var_map[i]. Also used to re-sort under a different order.
  Polynomial mapped(RingPtr<F> target, std::span<const std::size_t> var_map) const;
  /// Same variables, different ring object (for example a new order).
  Polynomial in_ring(RingPtr<F> target) const;

  bool operator==(const Polynomial& other) const;

  std::string to_string() const;

 private:
  Polynomial(RingPtr<F> ring, std::vector<Term> sorted_terms, bool /*already_sorted*/)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  void normalize();

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

extern template class Ring<PrimeField>;
extern template class Ring<RationalField>;
extern template class Polynomial<PrimeField>;
extern template class Polynomial<RationalField>;

}  // namespace hyperres

#endif  // HYPERRES_POLYNOMIAL_HPP
