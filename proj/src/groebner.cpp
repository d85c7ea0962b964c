#include "hyperres/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace hyperres {

namespace {

template <class F>
void require_compatible(const Polynomial<F>& f, std::span<const Polynomial<F>> basis) {
  for (const auto& g : basis) {
    if (g.ring().num_vars() != f.ring().num_vars())
      throw std::invalid_argument("normal_form: variable-count mismatch");
    if (!(g.ring().order() == f.ring().order()))
      throw std::invalid_argument("normal_form: basis uses a different monomial order");
  }
}

template <class F>
std::vector<Polynomial<F>> moved_to(std::span<const Polynomial<F>> polys, const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.in_ring(ring));
  return out;
}

template <class F>
Polynomial<F> reduce_fully(const Polynomial<F>& f, std::span<const Polynomial<F>> basis) {
  using Term = typename Polynomial<F>::Term;
  const F& k = f.field();
  std::vector<Term> remainder;
  Polynomial<F> rest = f;
  while (!rest.is_zero()) {
    const Term& top = rest.leading_term();
    const Polynomial<F>* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(top.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      auto c = k.div(top.coeff, divisor->leading_coeff());
      rest = rest.minus_multiple(top.mono / divisor->leading_monomial(), c, *divisor);
    } else {
      remainder.push_back(top);
      rest.drop_leading_term();
    }
  }
  return Polynomial<F>(f.ring_ptr(), std::move(remainder));
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const F& k = f.field();
  auto a = f.times_term(l / f.leading_monomial(), k.inv(f.leading_coeff()));
  return a.minus_multiple(l / g.leading_monomial(), k.inv(g.leading_coeff()), g);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> basis) {
  require_compatible(f, basis);
  return reduce_fully(f, basis);
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> basis,
                          const MonomialOrder& order) {
  auto ring = with_order(f.ring_ptr(), order);
  auto moved = moved_to(basis, ring);
  return normal_form(f.in_ring(ring), std::span<const Polynomial<F>>(moved));
}

template <class F>
std::vector<Polynomial<F>> buchberger(std::span<const Polynomial<F>> gens) {
  std::vector<Polynomial<F>> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(g);
  if (input.empty()) return {};
  for (const auto& g : input) {
    if (!g.ring().compatible(input.front().ring()))
      throw std::invalid_argument("buchberger: generators live in different rings");
    if (g.is_constant())
      return {Polynomial<F>::constant(input.front().ring_ptr(), g.field().one())};
  }
  const MonomialOrder& order = input.front().ring().order();

  std::vector<Polynomial<F>> basis;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  bool unit = false;

  auto add = [&](Polynomial<F> h) {
    if (h.is_constant()) {
      unit = true;
      return;
    }
    h = h.monic();
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back(Pair{i, k, basis[i].leading_monomial().lcm(h.leading_monomial())});
      pending_keys.emplace(i, k);
    }
    basis.push_back(std::move(h));
  };

  for (const auto& g : input) {
    auto h = reduce_fully(g, std::span<const Polynomial<F>>(basis));
    if (!h.is_zero()) add(std::move(h));
    if (unit) break;
  }

  auto chain_criterion = [&](const Pair& p) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading_monomial().divides(p.lcm)) continue;
      auto key_ik = std::minmax(p.i, k);
      auto key_jk = std::minmax(p.j, k);
      if (!pending_keys.count({key_ik.first, key_ik.second}) &&
          !pending_keys.count({key_jk.first, key_jk.second}))
        return true;
    }
    return false;
  };

  while (!unit && !pending.empty()) {
    // Normal strategy: smallest lcm degree, then smallest lcm, then oldest pair.
    std::size_t best = 0;
    for (std::size_t t = 1; t < pending.size(); ++t) {
      const Pair& a = pending[t];
      const Pair& b = pending[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = t;
        continue;
      }
      int c = order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = t;
    }
    Pair pair = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    pending_keys.erase({pair.i, pair.j});

    const auto& fi = basis[pair.i];
    const auto& fj = basis[pair.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) continue;
    if (chain_criterion(pair)) continue;

    auto h = reduce_fully(s_polynomial(fi, fj), std::span<const Polynomial<F>>(basis));
    if (!h.is_zero()) add(std::move(h));
  }

  if (unit) return {Polynomial<F>::constant(input.front().ring_ptr(), input.front().field().one())};

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce tails.
  std::vector<Polynomial<F>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(j < i ? reduced[j] : minimal[j]);
    const auto& g = minimal[i];
    auto tail = g - Polynomial<F>::monomial(g.ring_ptr(), g.leading_monomial(), g.leading_coeff());
    auto tail_nf = reduce_fully(tail, std::span<const Polynomial<F>>(others));
    reduced.push_back((Polynomial<F>::monomial(g.ring_ptr(), g.leading_monomial(), g.leading_coeff()) +
                       tail_nf)
                          .monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

template <class F>
std::vector<Polynomial<F>> buchberger(std::span<const Polynomial<F>> gens, const MonomialOrder& order) {
  if (gens.empty()) return {};
  auto ring = with_order(gens.front().ring_ptr(), order);
  auto moved = moved_to(gens, ring);
  return buchberger(std::span<const Polynomial<F>>(moved));
}

template <class F>
bool is_reduced_groebner_basis(std::span<const Polynomial<F>> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& g = basis[i];
    if (g.is_zero() || !g.field().is_one(g.leading_coeff())) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[j].terms())
        if (g.leading_monomial().divides(t.mono)) return false;
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce_fully(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

#define HYPERRES_INSTANTIATE(F)                                                                   \
  template Polynomial<F> normal_form(const Polynomial<F>&, std::span<const Polynomial<F>>);      \
  template Polynomial<F> normal_form(const Polynomial<F>&, std::span<const Polynomial<F>>,       \
                                     const MonomialOrder&);                                      \
  template std::vector<Polynomial<F>> buchberger(std::span<const Polynomial<F>>);                \
  template std::vector<Polynomial<F>> buchberger(std::span<const Polynomial<F>>,                 \
                                                 const MonomialOrder&);                          \
  template bool is_reduced_groebner_basis(std::span<const Polynomial<F>>);

HYPERRES_INSTANTIATE(PrimeField)
HYPERRES_INSTANTIATE(RationalField)

}  // namespace hyperres
