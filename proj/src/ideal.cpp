#include "hyperres/ideal.hpp"

#include <numeric>
#include <stdexcept>

namespace hyperres {

template <class F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring().num_vars() != ring_->num_vars() || !(g.field() == ring_->field()))
      throw std::invalid_argument("ideal: generator lives in a different ring");
    if (g.ring_ptr() == ring_ || g.ring().compatible(*ring_))
      gens_.push_back(std::move(g));
    else
      gens_.push_back(g.in_ring(ring_));
  }
}

template <class F>
Ideal<F> Ideal<F>::unit(RingPtr<F> ring) {
  auto one = Polynomial<F>::constant(ring, ring->field().one());
  return Ideal(std::move(ring), {std::move(one)});
}

template <class F>
const std::vector<Polynomial<F>>& Ideal<F>::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = buchberger(std::span<const Polynomial<F>>(gens_));
  });
  return cache_->basis;
}

template <class F>
Polynomial<F> Ideal<F>::normal_form(const Polynomial<F>& f) const {
  const auto& gb = groebner_basis();
  return hyperres::normal_form(f.in_ring(ring_), std::span<const Polynomial<F>>(gb));
}

template <class F>
bool Ideal<F>::contains(const Polynomial<F>& f) const {
  return normal_form(f).is_zero();
}

template <class F>
bool Ideal<F>::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

template <class F>
bool Ideal<F>::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

template <class F>
bool Ideal<F>::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

template <class F>
bool Ideal<F>::operator==(const Ideal& other) const {
  if (!ring_->compatible(*other.ring_)) return false;
  const auto& a = groebner_basis();
  const auto& b = other.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

namespace {

template <class F>
void require_same_ring(const Ideal<F>& a, const Ideal<F>& b) {
  if (!a.ring().compatible(b.ring())) throw std::invalid_argument("ideal operation: ring mismatch");
}

// K[t, x_1..x_n] with t eliminated first.
template <class F>
RingPtr<F> ring_with_leading_variable(const Ring<F>& ring) {
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  return make_ring(ring.field(), ring.num_vars() + 1, MonomialOrder::elimination(1), std::move(names));
}

std::vector<std::size_t> shifted_map(std::size_t n, std::size_t shift) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), shift);
  return map;
}

}  // namespace

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_ring(a, b);
  std::vector<Polynomial<F>> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<F>(a.ring_ptr(), std::move(gens));
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, std::span<const Polynomial<F>> extra) {
  std::vector<Polynomial<F>> gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal<F>(a.ring_ptr(), std::move(gens));
}

template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal<F>::zero(a.ring_ptr());
  const std::size_t n = a.ring().num_vars();
  auto big = ring_with_leading_variable(a.ring());
  const auto up = shifted_map(n, 1);
  const auto t = Polynomial<F>::variable(big, 0);
  const auto one_minus_t = Polynomial<F>::constant(big, big->field().one()) - t;

  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.mapped(big, up));
  for (const auto& h : b.generators()) gens.push_back(one_minus_t * h.mapped(big, up));
  auto gb = buchberger(std::span<const Polynomial<F>>(gens));

  std::vector<std::size_t> down(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) down[i] = i - 1;
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb) {
    bool has_t = false;
    for (const auto& term : g.terms()) has_t = has_t || term.mono[0] != 0;
    if (!has_t) kept.push_back(g.mapped(a.ring_ptr(), down));
  }
  return Ideal<F>(a.ring_ptr(), std::move(kept));
}

template <class F>
Ideal<F> ideal_colon_element(const Ideal<F>& ideal, const Polynomial<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("ideal_colon_element: f must be nonzero");
  if (ideal.is_zero()) return ideal;
  if (ideal.contains(f)) return Ideal<F>::unit(ideal.ring_ptr());
  const auto g = f.in_ring(ideal.ring_ptr());
  auto meet = ideal_intersection(ideal, Ideal<F>(ideal.ring_ptr(), {g}));
  std::vector<Polynomial<F>> quotients;
  for (const auto& h : meet.generators()) {
    auto [q, r] = h.divide(g);
    if (!r.is_zero()) throw std::logic_error("ideal_colon_element: inexact division");
    quotients.push_back(std::move(q));
  }
  return Ideal<F>(ideal.ring_ptr(), std::move(quotients));
}

template <class F>
Ideal<F> eliminate_leading_variables(const Ideal<F>& ideal, std::size_t k, RingPtr<F> target) {
  const std::size_t n = ideal.ring().num_vars();
  if (k > n || target->num_vars() != n - k)
    throw std::invalid_argument("eliminate: target ring has the wrong number of variables");
  auto elim = with_order(ideal.ring_ptr(), MonomialOrder::elimination(k));
  auto gb = buchberger(std::span<const Polynomial<F>>(ideal.generators()), elim->order());
  std::vector<std::size_t> down(n, 0);
  for (std::size_t i = k; i < n; ++i) down[i] = i - k;
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb) {
    bool touches = false;
    for (const auto& term : g.terms())
      for (std::size_t i = 0; i < k && !touches; ++i) touches = term.mono[i] != 0;
    if (!touches) kept.push_back(g.mapped(target, down));
  }
  return Ideal<F>(std::move(target), std::move(kept));
}

template <class F>
Ideal<F> kernel_of_monomial_map(RingPtr<F> presentation_ring, std::size_t target_vars,
                                std::span<const Monomial> images) {
  const std::size_t m = presentation_ring->num_vars();
  if (images.size() != m)
    throw std::invalid_argument("kernel_of_monomial_map: one image per presentation variable");
  for (const auto& img : images) {
    if (img.num_vars() != target_vars)
      throw std::invalid_argument("kernel_of_monomial_map: image has wrong variable count");
    if (img.degree() != images.front().degree())
      throw std::invalid_argument("kernel_of_monomial_map: images must share one degree");
  }
  if (m == 0) return Ideal<F>::zero(std::move(presentation_ring));

  std::vector<std::string> names;
  for (std::size_t i = 0; i < target_vars; ++i) names.push_back("_X" + std::to_string(i + 1));
  names.insert(names.end(), presentation_ring->names().begin(), presentation_ring->names().end());
  auto big = make_ring(presentation_ring->field(), target_vars + m, MonomialOrder::grevlex(),
                       std::move(names));
  const auto identity = shifted_map(target_vars, 0);
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < m; ++i) {
    auto image = Polynomial<F>::monomial(
        make_ring(presentation_ring->field(), target_vars), images[i], presentation_ring->field().one());
    gens.push_back(Polynomial<F>::variable(big, target_vars + i) - image.mapped(big, identity));
  }
  return eliminate_leading_variables(Ideal<F>(big, std::move(gens)), target_vars,
                                     std::move(presentation_ring));
}

template <class F>
bool contains_maximal_ideal(const Ideal<F>& ideal) {
  for (std::size_t i = 0; i < ideal.ring().num_vars(); ++i)
    if (!ideal.contains(Polynomial<F>::variable(ideal.ring_ptr(), i))) return false;
  return true;
}

std::uint64_t ambient_dim(std::size_t num_vars, int degree) {
  if (degree < 0) return 0;
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  // binom(n - 1 + d, d), built incrementally to stay exact.
  std::uint64_t value = 1;
  for (int i = 1; i <= degree; ++i) value = value * (num_vars - 1 + i) / i;
  return value;
}

std::uint64_t count_standard_monomials(std::size_t num_vars, int degree,
                                       std::span<const Monomial> leading) {
  if (degree < 0) return 0;
  std::uint64_t count = 0;
  for (const auto& m : monomials_of_degree(num_vars, static_cast<unsigned>(degree))) {
    bool standard = true;
    for (const auto& lm : leading) {
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
  }
  return count;
}

template <class F>
std::uint64_t hilbert_dim(const Ideal<F>& ideal, int degree) {
  if (degree < 0) return 0;
  const auto& gb = ideal.groebner_basis();
  std::vector<Monomial> leading;
  leading.reserve(gb.size());
  for (const auto& g : gb) leading.push_back(g.leading_monomial());
  return count_standard_monomials(ideal.ring().num_vars(), degree, leading);
}

template <class F>
GradedQuotient<F>::GradedQuotient(Ideal<F> defining_ideal) : ideal_(std::move(defining_ideal)) {
  if (!ideal_.is_homogeneous())
    throw std::invalid_argument("graded quotient: defining ideal must be homogeneous");
}

template <class F>
std::uint64_t GradedQuotient<F>::hilbert_dim(int degree) const {
  return hyperres::hilbert_dim(ideal_, degree);
}

template <class F>
std::vector<std::uint64_t> GradedQuotient<F>::hilbert_function(int max_degree) const {
  std::vector<std::uint64_t> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(hilbert_dim(d));
  return out;
}

template <class F>
std::uint64_t GradedQuotient<F>::ideal_dim(const Ideal<F>& preimage, int degree) const {
  if (degree < 0) return 0;
  return hilbert_dim(degree) - hyperres::hilbert_dim(preimage, degree);
}

template <class F>
GradedQuotient<F> GradedQuotient<F>::quotient_by(std::span<const Polynomial<F>> forms) const {
  return GradedQuotient(ideal_sum(ideal_, forms));
}

#define HYPERRES_INSTANTIATE(F)                                                                  \
  template class Ideal<F>;                                                                      \
  template class GradedQuotient<F>;                                                             \
  template Ideal<F> ideal_sum(const Ideal<F>&, const Ideal<F>&);                                \
  template Ideal<F> ideal_sum(const Ideal<F>&, std::span<const Polynomial<F>>);                 \
  template Ideal<F> ideal_intersection(const Ideal<F>&, const Ideal<F>&);                       \
  template Ideal<F> ideal_colon_element(const Ideal<F>&, const Polynomial<F>&);                 \
  template Ideal<F> eliminate_leading_variables(const Ideal<F>&, std::size_t, RingPtr<F>);      \
  template Ideal<F> kernel_of_monomial_map(RingPtr<F>, std::size_t, std::span<const Monomial>); \
  template bool contains_maximal_ideal(const Ideal<F>&);                                        \
  template std::uint64_t hilbert_dim(const Ideal<F>&, int);

HYPERRES_INSTANTIATE(PrimeField)
HYPERRES_INSTANTIATE(RationalField)

}  // namespace hyperres
