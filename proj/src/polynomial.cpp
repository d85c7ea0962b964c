#include "hyperres/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperres {

template <class F>
Ring<F>::Ring(F field, std::size_t num_vars, MonomialOrder order, std::vector<std::string> names)
    : field_(std::move(field)), num_vars_(num_vars), order_(order), names_(std::move(names)) {
  if (names_.empty()) {
    for (std::size_t i = 0; i < num_vars_; ++i) names_.push_back("x" + std::to_string(i + 1));
  } else if (names_.size() != num_vars_) {
    throw std::invalid_argument("ring: expected " + std::to_string(num_vars_) + " variable names");
  }
}

template <class F>
Polynomial<F>::Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

template <class F>
Polynomial<F>::Polynomial(RingPtr<F> ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const Term& t : terms_)
    if (t.mono.num_vars() != ring_->num_vars())
      throw std::invalid_argument("polynomial: variable-count mismatch");
  normalize();
}

template <class F>
void Polynomial<F>::normalize() {
  const MonomialOrder& order = ring_->order();
  const F& k = ring_->field();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order.less(a.mono, b.mono); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff = k.add(merged.back().coeff, t.coeff);
    } else {
      if (!merged.empty() && k.is_zero(merged.back().coeff)) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && k.is_zero(merged.back().coeff)) merged.pop_back();
  terms_ = std::move(merged);
}

template <class F>
Polynomial<F> Polynomial<F>::constant(RingPtr<F> ring, const Element& c) {
  std::size_t n = ring->num_vars();
  return Polynomial(std::move(ring), {Term{Monomial(n), c}});
}

template <class F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, std::size_t index) {
  if (index >= ring->num_vars()) throw std::out_of_range("polynomial: variable index out of range");
  Element one = ring->field().one();
  std::size_t n = ring->num_vars();
  return Polynomial(std::move(ring), {Term{Monomial::variable(n, index), one}});
}

template <class F>
Polynomial<F> Polynomial<F>::monomial(RingPtr<F> ring, Monomial m, const Element& c) {
  return Polynomial(std::move(ring), {Term{std::move(m), c}});
}

template <class F>
Polynomial<F> Polynomial<F>::linear(RingPtr<F> ring, std::span<const Element> coeffs) {
  const std::size_t n = ring->num_vars();
  if (coeffs.size() != n) throw std::invalid_argument("linear form: variable-count mismatch");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < n; ++i) terms.push_back(Term{Monomial::variable(n, i), coeffs[i]});
  return Polynomial(std::move(ring), std::move(terms));
}

template <class F>
int Polynomial<F>::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

template <class F>
bool Polynomial<F>::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

template <class F>
typename Polynomial<F>::Element Polynomial<F>::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coeff;
  return ring_->field().zero();
}

namespace {

template <class F, class Term, class Transform>
std::vector<Term> merge_terms(const F& k, const MonomialOrder& order, std::span<const Term> a,
                              std::span<const Term> b, Transform&& transform_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term tb = transform_b(b[j]);
    if (i == a.size()) {
      out.push_back(std::move(tb));
      ++j;
      continue;
    }
    int c = order.compare(a[i].mono, tb.mono);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(std::move(tb));
      ++j;
    } else {
      auto sum = k.add(a[i].coeff, tb.coeff);
      if (!k.is_zero(sum)) out.push_back(Term{a[i].mono, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

template <class F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& other) const {
  const F& k = field();
  auto terms = merge_terms<F, Term>(k, ring_->order(), terms_, other.terms_,
                                    [](const Term& t) { return t; });
  return Polynomial(ring_, std::move(terms), true);
}

template <class F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& other) const {
  const F& k = field();
  auto terms = merge_terms<F, Term>(k, ring_->order(), terms_, other.terms_,
                                    [&](const Term& t) { return Term{t.mono, k.neg(t.coeff)}; });
  return Polynomial(ring_, std::move(terms), true);
}

template <class F>
Polynomial<F> Polynomial<F>::operator-() const {
  return scaled(field().neg(field().one()));
}

template <class F>
Polynomial<F> Polynomial<F>::minus_multiple(const Monomial& m, const Element& c,
                                            const Polynomial& g) const {
  const F& k = field();
  const Element neg_c = k.neg(c);
  auto terms = merge_terms<F, Term>(k, ring_->order(), terms_, g.terms_, [&](const Term& t) {
    return Term{t.mono * m, k.mul(neg_c, t.coeff)};
  });
  return Polynomial(ring_, std::move(terms), true);
}

template <class F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& other) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size() * other.terms_.size());
  const F& k = field();
  for (const Term& a : terms_)
    for (const Term& b : other.terms_) terms.push_back(Term{a.mono * b.mono, k.mul(a.coeff, b.coeff)});
  return Polynomial(ring_, std::move(terms));
}

template <class F>
Polynomial<F> Polynomial<F>::scaled(const Element& c) const {
  const F& k = field();
  if (k.is_zero(c)) return Polynomial(ring_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back(Term{t.mono, k.mul(c, t.coeff)});
  return Polynomial(ring_, std::move(terms), true);
}

template <class F>
Polynomial<F> Polynomial<F>::times_term(const Monomial& m, const Element& c) const {
  const F& k = field();
  if (k.is_zero(c)) return Polynomial(ring_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back(Term{t.mono * m, k.mul(c, t.coeff)});
  return Polynomial(ring_, std::move(terms), true);
}

template <class F>
Polynomial<F> Polynomial<F>::pow(unsigned e) const {
  Polynomial result = constant(ring_, field().one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class F>
Polynomial<F> Polynomial<F>::monic() const {
  if (is_zero() || field().is_one(leading_coeff())) return *this;
  return scaled(field().inv(leading_coeff()));
}

template <class F>
std::pair<Polynomial<F>, Polynomial<F>> Polynomial<F>::divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const F& k = field();
  std::vector<Term> quotient, remainder;
  Polynomial rest = *this;
  const Monomial& lm = divisor.leading_monomial();
  const Element lc_inv = k.inv(divisor.leading_coeff());
  while (!rest.is_zero()) {
    const Term& top = rest.leading_term();
    if (lm.divides(top.mono)) {
      Term q{top.mono / lm, k.mul(top.coeff, lc_inv)};
      rest = rest.minus_multiple(q.mono, q.coeff, divisor);
      quotient.push_back(std::move(q));
    } else {
      remainder.push_back(top);
      rest.terms_.pop_back();
    }
  }
  std::reverse(quotient.begin(), quotient.end());
  std::reverse(remainder.begin(), remainder.end());
  return {Polynomial(ring_, std::move(quotient), true), Polynomial(ring_, std::move(remainder), true)};
}

template <class F>
Polynomial<F> Polynomial<F>::mapped(RingPtr<F> target, std::span<const std::size_t> var_map) const {
  if (!(target->field() == ring_->field()))
    throw std::invalid_argument("polynomial: cannot map between different fields");
  if (var_map.size() != ring_->num_vars())
    throw std::invalid_argument("polynomial: variable map has wrong length");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(target->num_vars());
    for (std::size_t i = 0; i < var_map.size(); ++i)
      if (t.mono[i] != 0) m.set(var_map[i], m[var_map[i]] + t.mono[i]);
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial(std::move(target), std::move(terms));
}

template <class F>
Polynomial<F> Polynomial<F>::in_ring(RingPtr<F> target) const {
  if (target->num_vars() != ring_->num_vars())
    throw std::invalid_argument("polynomial: variable-count mismatch");
  if (target->order() == ring_->order() && target->field() == ring_->field())
    return Polynomial(std::move(target), terms_, true);
  return Polynomial(std::move(target), terms_);
}

template <class F>
bool Polynomial<F>::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  if (ring_->order() == other.ring_->order()) {
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff)
        return false;
    return true;
  }
  for (const Term& t : terms_)
    if (other.coefficient(t.mono) != t.coeff) return false;
  return true;
}

template <class F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  const F& k = field();
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string c = k.to_string(it->coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (it->mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += it->mono.to_string(ring_->names());
    }
  }
  return out;
}

template class Ring<PrimeField>;
template class Ring<RationalField>;
template class Polynomial<PrimeField>;
template class Polynomial<RationalField>;

}  // namespace hyperres
