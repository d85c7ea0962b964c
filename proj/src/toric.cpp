#include "hyperres/toric.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperres {

std::string to_string(ToricKind kind) {
  switch (kind) {
    case ToricKind::segre:
      return "segre";
    case ToricKind::veronese:
      return "veronese";
    case ToricKind::segre_veronese:
      return "segre-veronese";
    case ToricKind::chain:
      return "chain";
    case ToricKind::fiber_cone:
      return "fiber-cone";
  }
  return "?";
}

std::string to_string(StructuredVariant variant) {
  switch (variant) {
    case StructuredVariant::segre_product:
      return "segre-product";
    case StructuredVariant::veronese_power:
      return "veronese-power";
    case StructuredVariant::segre_veronese:
      return "segre-veronese";
    case StructuredVariant::chain_partial_sums:
      return "chain-partial-sums";
  }
  return "?";
}

StructuredVariant parse_structured_variant(const std::string& text) {
  for (auto v : {StructuredVariant::segre_product, StructuredVariant::veronese_power,
                 StructuredVariant::segre_veronese, StructuredVariant::chain_partial_sums})
    if (to_string(v) == text) return v;
  throw std::invalid_argument("unknown structured variant '" + text + "'");
}

template <class F>
StructuredVariant ToricPresentation<F>::natural_variant() const {
  switch (kind) {
    case ToricKind::segre:
      return StructuredVariant::segre_product;
    case ToricKind::veronese:
      return StructuredVariant::veronese_power;
    case ToricKind::segre_veronese:
      return StructuredVariant::segre_veronese;
    case ToricKind::chain:
      return StructuredVariant::chain_partial_sums;
    case ToricKind::fiber_cone:
      break;
  }
  throw std::invalid_argument("fiber cone presentations carry no structured forms");
}

namespace {

bool descending_lex(const Monomial& a, const Monomial& b) {
  return MonomialOrder::lex().compare(a, b) > 0;
}

std::string index_label(const std::string& prefix, const std::vector<std::size_t>& indices) {
  const bool compact = std::all_of(indices.begin(), indices.end(), [](std::size_t i) { return i < 10; });
  std::string out = prefix;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (!compact) out += '_';
    out += std::to_string(indices[k]);
  }
  return out;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

template <class F>
ToricPresentation<F> assemble(const F& field, ToricKind kind, std::vector<std::size_t> block_sizes,
                              std::vector<unsigned> block_degrees, std::size_t source_vars,
                              std::vector<Monomial> images, std::vector<std::string> names) {
  auto ring = make_ring(field, images.size(), MonomialOrder::grevlex(), std::move(names));
  auto kernel = kernel_of_monomial_map(ring, source_vars, std::span<const Monomial>(images));
  return ToricPresentation<F>{kind,   std::move(block_sizes), std::move(block_degrees), source_vars,
                              std::move(images), ring, std::move(kernel)};
}

}  // namespace

template <class F>
ToricPresentation<F> segre_veronese(const F& field, const std::vector<std::size_t>& sizes,
                                    const std::vector<unsigned>& degrees) {
  if (sizes.empty() || sizes.size() != degrees.size())
    throw std::invalid_argument("segre_veronese: need one degree per block");
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] == 0 || degrees[i] == 0)
      throw std::invalid_argument("segre_veronese: block sizes and degrees must be positive");

  std::size_t source_vars = 0;
  for (auto n : sizes) source_vars += n;

  // Cartesian product of per-block monomials, first block outermost: this is
  // descending lex on the concatenated exponent vector.
  std::vector<std::vector<unsigned>> partial{{}};
  std::vector<std::vector<std::size_t>> labels{{}};
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    auto block = monomials_of_degree(sizes[i], degrees[i]);
    std::vector<std::vector<unsigned>> next;
    std::vector<std::vector<std::size_t>> next_labels;
    for (std::size_t p = 0; p < partial.size(); ++p) {
      for (std::size_t b = 0; b < block.size(); ++b) {
        auto e = partial[p];
        auto exps = block[b].exponents();
        e.insert(e.end(), exps.begin(), exps.end());
        next.push_back(std::move(e));
        auto l = labels[p];
        // Index of the first variable of a degree-one block, used in Segre names.
        std::size_t first = 0;
        while (first < exps.size() && exps[first] == 0) ++first;
        l.push_back(first + 1);
        next_labels.push_back(std::move(l));
      }
    }
    partial = std::move(next);
    labels = std::move(next_labels);
  }
  std::vector<Monomial> images;
  for (const auto& e : partial) images.emplace_back(e);

  const bool all_linear = std::all_of(degrees.begin(), degrees.end(), [](unsigned b) { return b == 1; });
  std::vector<std::string> names;
  if (all_linear && sizes.size() > 1) {
    for (const auto& l : labels) names.push_back(index_label("T", l));
  } else {
    names = numbered("Z", images.size());
  }
  return assemble(field, ToricKind::segre_veronese, sizes, degrees, source_vars, std::move(images),
                  std::move(names));
}

template <class F>
ToricPresentation<F> segre(const F& field, const std::vector<std::size_t>& sizes) {
  auto t = segre_veronese(field, sizes, std::vector<unsigned>(sizes.size(), 1));
  t.kind = ToricKind::segre;
  return t;
}

template <class F>
ToricPresentation<F> veronese(const F& field, std::size_t num_source_vars, unsigned degree) {
  auto t = segre_veronese(field, {num_source_vars}, {degree});
  t.kind = ToricKind::veronese;
  return t;
}

template <class F>
ToricPresentation<F> chain_toric(const F& field, const std::vector<std::size_t>& bounds) {
  if (bounds.empty()) throw std::invalid_argument("chain_toric: need at least one factor");
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    if (bounds[j] == 0) throw std::invalid_argument("chain_toric: bounds must be positive");
    if (j > 0 && bounds[j] < bounds[j - 1])
      throw std::invalid_argument("chain_toric: bounds must be nondecreasing");
  }
  const std::size_t s = bounds.size();
  const std::size_t n = bounds.back();

  // Nondecreasing tuples i_1 <= ... <= i_s with i_j <= n_j; one per distinct monomial.
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> tuple(s, 1);
  auto extend = [&](auto&& self, std::size_t pos, std::size_t low) -> void {
    if (pos == s) {
      tuples.push_back(tuple);
      return;
    }
    for (std::size_t v = low; v <= bounds[pos]; ++v) {
      tuple[pos] = v;
      self(self, pos + 1, v);
    }
  };
  extend(extend, 0, 1);

  std::vector<std::pair<Monomial, std::vector<std::size_t>>> entries;
  for (const auto& t : tuples) {
    Monomial m(n);
    for (auto idx : t) m.set(idx - 1, m[idx - 1] + 1);
    entries.emplace_back(std::move(m), t);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return descending_lex(a.first, b.first); });
  std::vector<Monomial> images;
  std::vector<std::string> names;
  for (auto& [m, t] : entries) {
    images.push_back(m);
    names.push_back(index_label("T", t));
  }
  return assemble(field, ToricKind::chain, bounds, std::vector<unsigned>(s, 1), n, std::move(images),
                  std::move(names));
}

template <class F>
ToricPresentation<F> fiber_cone(const F& field, const std::vector<Monomial>& generators) {
  if (generators.empty()) throw std::invalid_argument("fiber_cone: need at least one generator");
  const std::size_t n = generators.front().num_vars();
  const unsigned degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.num_vars() != n) throw std::invalid_argument("fiber_cone: generators in different rings");
    if (g.degree() != degree)
      throw std::invalid_argument("fiber_cone: generators must share one degree (equigenerated)");
  }
  std::vector<Monomial> images = generators;
  std::sort(images.begin(), images.end(), descending_lex);
  for (std::size_t i = 1; i < images.size(); ++i)
    if (images[i] == images[i - 1]) throw std::invalid_argument("fiber_cone: repeated generator");
  auto names = numbered("Z", images.size());
  return assemble(field, ToricKind::fiber_cone, {n}, {degree}, n, std::move(images), std::move(names));
}

template <class F>
LinearForm<F> structured_form(const ToricPresentation<F>& toric,
                              const std::vector<std::vector<typename F::Element>>& underlying,
                              StructuredVariant variant) {
  const F& field = toric.ring->field();
  const auto& sizes = toric.block_sizes;
  const auto& degrees = toric.block_degrees;
  const bool chain = toric.kind == ToricKind::chain;

  switch (variant) {
    case StructuredVariant::segre_product:
      if (chain || toric.kind == ToricKind::fiber_cone ||
          std::any_of(degrees.begin(), degrees.end(), [](unsigned b) { return b != 1; }))
        throw std::invalid_argument("segre-product forms need a Segre presentation");
      break;
    case StructuredVariant::veronese_power:
      if (chain || toric.kind == ToricKind::fiber_cone || sizes.size() != 1)
        throw std::invalid_argument("veronese-power forms need a single-block Veronese presentation");
      break;
    case StructuredVariant::segre_veronese:
      if (chain || toric.kind == ToricKind::fiber_cone)
        throw std::invalid_argument("segre-veronese forms need a block presentation");
      break;
    case StructuredVariant::chain_partial_sums:
      if (!chain) throw std::invalid_argument("chain-partial-sums forms need a chain presentation");
      break;
  }
  if (underlying.size() != sizes.size())
    throw std::invalid_argument("structured_form: expected " + std::to_string(sizes.size()) +
                                " underlying forms");
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (underlying[i].size() != sizes[i])
      throw std::invalid_argument("structured_form: factor " + std::to_string(i + 1) + " needs " +
                                  std::to_string(sizes[i]) + " coefficients");

  auto source = make_ring(field, toric.source_vars);
  auto factor_form = [&](std::size_t i, std::size_t offset) {
    std::vector<typename F::Element> coeffs(toric.source_vars, field.zero());
    for (std::size_t j = 0; j < sizes[i]; ++j) coeffs[offset + j] = underlying[i][j];
    return Polynomial<F>::linear(source, coeffs);
  };

  auto product = Polynomial<F>::constant(source, field.one());
  if (chain) {
    auto partial = Polynomial<F>(source);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      partial = partial + factor_form(i, 0);
      product = product * partial;
    }
  } else {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      product = product * factor_form(i, offset).pow(degrees[i]);
      offset += sizes[i];
    }
  }

  LinearForm<F> out{std::vector<typename F::Element>(toric.num_vars(), field.zero())};
  std::size_t matched = 0;
  for (std::size_t k = 0; k < toric.images.size(); ++k) {
    out.coeffs[k] = product.coefficient(toric.images[k]);
    if (!field.is_zero(out.coeffs[k])) ++matched;
  }
  if (matched != product.size())
    throw std::logic_error("structured_form: product left the span of the generating monomials");
  return out;
}

template <class F>
LinearForm<F> sample_structured_form(const ToricPresentation<F>& toric, StructuredVariant variant,
                                     Rng& rng) {
  const F& field = toric.ring->field();
  std::vector<std::vector<typename F::Element>> underlying;
  for (auto n : toric.block_sizes) {
    std::vector<typename F::Element> coeffs;
    for (std::size_t j = 0; j < n; ++j) coeffs.push_back(field.random(rng));
    underlying.push_back(std::move(coeffs));
  }
  return structured_form(toric, underlying, variant);
}

template <class F>
bool kernel_vanishes(const ToricPresentation<F>& toric) {
  auto source = make_ring(toric.ring->field(), toric.source_vars);
  for (const auto& g : toric.presentation_ideal.generators()) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m(toric.source_vars);
      for (std::size_t i = 0; i < toric.num_vars(); ++i)
        for (unsigned e = 0; e < t.mono[i]; ++e) m = m * toric.images[i];
      terms.push_back({std::move(m), t.coeff});
    }
    if (!Polynomial<F>(source, std::move(terms)).is_zero()) return false;
  }
  return true;
}

#define HYPERRES_INSTANTIATE(F)                                                                        \
  template struct ToricPresentation<F>;                                                               \
  template ToricPresentation<F> segre(const F&, const std::vector<std::size_t>&);                     \
  template ToricPresentation<F> veronese(const F&, std::size_t, unsigned);                            \
  template ToricPresentation<F> segre_veronese(const F&, const std::vector<std::size_t>&,             \
                                               const std::vector<unsigned>&);                         \
  template ToricPresentation<F> chain_toric(const F&, const std::vector<std::size_t>&);               \
  template ToricPresentation<F> fiber_cone(const F&, const std::vector<Monomial>&);                   \
  template LinearForm<F> structured_form(const ToricPresentation<F>&,                                 \
                                         const std::vector<std::vector<typename F::Element>>&,        \
                                         StructuredVariant);                                          \
  template LinearForm<F> sample_structured_form(const ToricPresentation<F>&, StructuredVariant, Rng&); \
  template bool kernel_vanishes(const ToricPresentation<F>&);

HYPERRES_INSTANTIATE(PrimeField)
HYPERRES_INSTANTIATE(RationalField)

}  // namespace hyperres
