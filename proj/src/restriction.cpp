#include "hyperres/restriction.hpp"

#include <algorithm>
#include <numeric>

#include "hyperres/lexmachine.hpp"
#include "hyperres/macaulay.hpp"

namespace hyperres {

template <class F>
bool LinearForm<F>::is_zero(const F& field) const {
  return std::all_of(coeffs.begin(), coeffs.end(), [&](const auto& c) { return field.is_zero(c); });
}

template <class F>
Polynomial<F> LinearForm<F>::to_polynomial(const RingPtr<F>& ring) const {
  return Polynomial<F>::linear(ring, coeffs);
}

template <class F>
LinearForm<F> LinearForm<F>::from_polynomial(const Polynomial<F>& p) {
  const std::size_t n = p.ring().num_vars();
  LinearForm out{std::vector<typename F::Element>(n, p.field().zero())};
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != 1) throw std::invalid_argument("not a linear form: " + p.to_string());
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i] == 1) out.coeffs[i] = t.coeff;
  }
  return out;
}

template <class F>
LinearForm<F> sample_linear_form(std::size_t num_vars, const F& field, Rng& rng) {
  LinearForm<F> out;
  out.coeffs.reserve(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) out.coeffs.push_back(field.random(rng));
  return out;
}

OpWord::OpWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'c' && c != 's') throw std::invalid_argument("op word letters must be 'c' or 's'");
}

std::size_t OpWord::colons() const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'c'));
}

std::strong_ordering OpWord::operator<=>(const OpWord& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return letters_ <=> other.letters_;
}

std::vector<OpWord> OpWord::all_up_to(std::size_t max_length) {
  std::vector<OpWord> out{OpWord()};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      out.push_back(out[i].then(Op::colon));
      out.push_back(out[i].then(Op::sum));
    }
    level_start = level_end;
  }
  return out;
}

template <class F>
Ideal<F> ladder_step(const Ideal<F>& ideal, Op op, const Polynomial<F>& form) {
  if (op == Op::sum) {
    if (form.is_zero()) return ideal;
    return ideal_sum(ideal, std::span<const Polynomial<F>>(&form, 1));
  }
  if (form.is_zero()) return Ideal<F>::unit(ideal.ring_ptr());
  return ideal_colon_element(ideal, form);
}

template <class F>
Ladder<F>::Ladder(GradedQuotient<F> algebra, std::vector<LinearForm<F>> forms)
    : algebra_(std::move(algebra)) {
  for (const auto& l : forms) {
    if (l.num_vars() != algebra_.num_vars())
      throw std::invalid_argument("ladder: linear form has the wrong number of variables");
    forms_.push_back(l.to_polynomial(algebra_.ring_ptr()));
  }
  memo_.emplace("", algebra_.defining_ideal());
}

template <class F>
const Ideal<F>& Ladder<F>::ideal(const OpWord& word) {
  if (word.size() > forms_.size())
    throw std::invalid_argument("ladder: word '" + word.str() + "' is longer than the form list");
  if (auto it = memo_.find(word.str()); it != memo_.end()) return it->second;
  const std::size_t i = word.size() - 1;
  Ideal<F> parent = ideal(word.prefix(i));
  auto next = ladder_step(parent, word[i], forms_[i]);
  return memo_.emplace(word.str(), std::move(next)).first->second;
}

template <class F>
Ideal<F> ladder_ideal(const GradedQuotient<F>& algebra, std::span<const LinearForm<F>> forms,
                      const OpWord& word) {
  if (word.size() > forms.size())
    throw std::invalid_argument("ladder_ideal: word '" + word.str() + "' is longer than the form list");
  Ideal<F> current = algebra.defining_ideal();
  for (std::size_t i = 0; i < word.size(); ++i)
    current = ladder_step(current, word[i], forms[i].to_polynomial(algebra.ring_ptr()));
  return current;
}

template <class F>
GrdReport verify_grd(const GradedQuotient<F>& algebra, std::span<const LinearForm<F>> forms, int degree,
                     bool check_stronger) {
  if (degree < 1) throw std::invalid_argument("verify_grd: degree must be positive");
  if (forms.empty()) throw std::invalid_argument("verify_grd: need at least one linear form");
  const std::size_t r = forms.size();
  if (r > kMaxGrdForms)
    throw BudgetError("verify_grd: " + std::to_string(r) + " forms exceed the limit of " +
                      std::to_string(kMaxGrdForms));

  Ladder<F> ladder(algebra, std::vector<LinearForm<F>>(forms.begin(), forms.end()));
  GrdReport report;
  auto violate = [&](int condition, const OpWord& word, std::string detail) {
    report.violations.push_back(GrdViolation{condition, word, std::move(detail)});
    if (condition <= 3) report.passed = false;
  };
  auto label = [](const OpWord& w) { return w.empty() ? std::string("()") : w.str(); };

  for (const OpWord& word : OpWord::all_up_to(r)) {
    const Ideal<F> current = ladder.ideal(word);
    const std::size_t i = word.size();
    for (int j = 0; j <= degree; ++j) report.ladder_dims[{word, j}] = algebra.ideal_dim(current, j);

    const bool has_maximal = contains_maximal_ideal(current);
    if (i < r && !has_maximal && current.contains(ladder.form(i)))
      violate(1, word,
              "l_" + std::to_string(i + 1) + " lies in I_" + label(word) + " while m does not");
    if (i == r && static_cast<int>(word.colons()) < degree && !has_maximal)
      violate(2, word, "m is not contained in I_" + label(word));

    const int e = degree - static_cast<int>(word.colons()) - 1;
    if (i + 2 <= r && e >= 0) {
      const auto cs = algebra.ideal_dim(ladder.ideal(word.then(Op::colon).then(Op::sum)), e);
      const auto sc = algebra.ideal_dim(ladder.ideal(word.then(Op::sum).then(Op::colon)), e);
      if (cs > sc)
        violate(3, word,
                "dim (I_" + word.str() + "cs)_" + std::to_string(e) + " = " + std::to_string(cs) +
                    " > dim (I_" + word.str() + "sc)_" + std::to_string(e) + " = " + std::to_string(sc));
      if (check_stronger) {
        const auto& next = ladder.form(i);
        const auto& after = ladder.form(i + 1);
        auto mixed = ladder_step(ladder_step(current, Op::colon, after), Op::sum, next);
        const auto m = algebra.ideal_dim(mixed, e);
        if (cs != m)
          violate(4, word,
                  "dim (I_" + word.str() + "cs)_" + std::to_string(e) + " = " + std::to_string(cs) +
                      " != dim ((I_" + label(word) + " : l_" + std::to_string(i + 2) + ") + l_" +
                      std::to_string(i + 1) + ")_" + std::to_string(e) + " = " + std::to_string(m));
      }
    }
  }
  return report;
}

template <class F>
BoundCheck check_green_bound(const GradedQuotient<F>& algebra, const LinearForm<F>& form, int degree) {
  if (degree < 1) throw std::invalid_argument("check_green_bound: degree must be positive");
  const auto l = form.to_polynomial(algebra.ring_ptr());
  const auto restricted = algebra.quotient_by(std::span<const Polynomial<F>>(&l, 1));
  BoundCheck out;
  out.lhs = restricted.hilbert_dim(degree);
  const BigInt c(static_cast<unsigned long>(algebra.hilbert_dim(degree)));
  out.rhs = macaulay_lower(c, static_cast<unsigned>(degree)).get_ui();
  out.holds = out.lhs <= out.rhs;
  return out;
}

template <class F>
BoundCheck check_iterated_bound(const GradedQuotient<F>& algebra, std::span<const LinearForm<F>> forms,
                                int degree) {
  if (degree < 1) throw std::invalid_argument("check_iterated_bound: degree must be positive");
  std::vector<Polynomial<F>> polys;
  for (const auto& l : forms) polys.push_back(l.to_polynomial(algebra.ring_ptr()));
  BoundCheck out;
  out.lhs = algebra.quotient_by(polys).hilbert_dim(degree);
  const BigInt c(static_cast<unsigned long>(algebra.hilbert_dim(degree)));
  out.rhs = shifted_bound(c, static_cast<unsigned>(degree), forms.size()).get_ui();
  out.holds = out.lhs <= out.rhs;
  return out;
}

template <class F>
BoundCheck check_gasharov_bound(const GradedQuotient<F>& algebra, const Polynomial<F>& f, int degree,
                                std::optional<int> form_degree) {
  if (degree < 1) throw std::invalid_argument("check_gasharov_bound: degree must be positive");
  int c = 0;
  if (f.is_zero()) {
    if (!form_degree) throw std::invalid_argument("check_gasharov_bound: f = 0 needs an explicit degree");
    c = *form_degree;
  } else {
    if (!f.is_homogeneous()) throw std::invalid_argument("check_gasharov_bound: f must be homogeneous");
    c = f.degree();
    if (form_degree && *form_degree != c)
      throw std::invalid_argument("check_gasharov_bound: stated degree does not match f");
  }
  if (c < 1) throw std::invalid_argument("check_gasharov_bound: f must have positive degree");

  BoundCheck out;
  const auto g = f.in_ring(algebra.ring_ptr());
  out.lhs = algebra.quotient_by(std::span<const Polynomial<F>>(&g, 1)).hilbert_dim(degree);

  const std::size_t n = algebra.num_vars();
  HilbertFunction hf(n, algebra.hilbert_function(degree));
  auto lex = lex_segment_ideal(algebra.ring_ptr(), hf);
  Monomial power(n);
  power.set(n - 1, static_cast<unsigned>(c));
  auto xn_c = Polynomial<F>::monomial(algebra.ring_ptr(), power, algebra.field().one());
  out.rhs = hilbert_dim(ideal_sum(lex, std::span<const Polynomial<F>>(&xn_c, 1)), degree);
  out.holds = out.lhs <= out.rhs;
  return out;
}

namespace {

template <class F>
class PermutedLadders {
 public:
  PermutedLadders(const GradedQuotient<F>& algebra, std::vector<Polynomial<F>> forms)
      : algebra_(algebra), forms_(std::move(forms)) {}

  // I_o for the sequence forms[order[0]], forms[order[1]], ...
  const Ideal<F>& ideal(const OpWord& word, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> used(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(word.size()));
    auto key = std::make_pair(word.str(), used);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (word.empty()) return memo_.emplace(key, algebra_.defining_ideal()).first->second;
    const std::size_t i = word.size() - 1;
    Ideal<F> parent = ideal(word.prefix(i), order);
    auto next = ladder_step(parent, word[i], forms_[order[i]]);
    return memo_.emplace(std::move(key), std::move(next)).first->second;
  }

 private:
  const GradedQuotient<F>& algebra_;
  std::vector<Polynomial<F>> forms_;
  std::map<std::pair<std::string, std::vector<std::size_t>>, Ideal<F>> memo_;
};

}  // namespace

template <class F>
bool check_order_independence(const GradedQuotient<F>& algebra, std::span<const LinearForm<F>> forms,
                              int degree) {
  if (forms.empty()) throw std::invalid_argument("check_order_independence: need at least one form");
  const std::size_t r = forms.size();
  std::vector<Polynomial<F>> polys;
  for (const auto& l : forms) polys.push_back(l.to_polynomial(algebra.ring_ptr()));

  std::vector<std::size_t> identity(r);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<std::size_t>> orders;
  if (r <= 6) {
    auto perm = identity;
    while (std::next_permutation(perm.begin(), perm.end())) orders.push_back(perm);
  } else {
    Rng rng(0x0bde5eedULL);
    for (int k = 0; k < 50; ++k) {
      auto perm = identity;
      std::shuffle(perm.begin(), perm.end(), rng);
      orders.push_back(std::move(perm));
    }
  }

  // Only words with |o|_c < d have degrees to compare, and colons never decrease
  // along extensions, so the enumeration stops there.
  std::vector<OpWord> words;
  for (const auto& w : OpWord::all_up_to(r))
    if (static_cast<int>(w.colons()) < degree) words.push_back(w);

  PermutedLadders<F> ladders(algebra, std::move(polys));
  std::map<std::pair<std::string, int>, std::uint64_t> baseline;
  for (const auto& w : words) {
    const auto& ideal = ladders.ideal(w, identity);
    for (int j = 0; j <= degree - static_cast<int>(w.colons()) - 1; ++j)
      baseline[{w.str(), j}] = algebra.ideal_dim(ideal, j);
  }
  for (const auto& order : orders) {
    for (const auto& w : words) {
      const auto& ideal = ladders.ideal(w, order);
      for (int j = 0; j <= degree - static_cast<int>(w.colons()) - 1; ++j)
        if (algebra.ideal_dim(ideal, j) != baseline[{w.str(), j}]) return false;
    }
  }
  return true;
}

#define HYPERRES_INSTANTIATE(F)                                                                      \
  template struct LinearForm<F>;                                                                    \
  template class Ladder<F>;                                                                         \
  template LinearForm<F> sample_linear_form(std::size_t, const F&, Rng&);                           \
  template Ideal<F> ladder_step(const Ideal<F>&, Op, const Polynomial<F>&);                         \
  template Ideal<F> ladder_ideal(const GradedQuotient<F>&, std::span<const LinearForm<F>>,          \
                                 const OpWord&);                                                    \
  template GrdReport verify_grd(const GradedQuotient<F>&, std::span<const LinearForm<F>>, int, bool); \
  template BoundCheck check_green_bound(const GradedQuotient<F>&, const LinearForm<F>&, int);       \
  template BoundCheck check_iterated_bound(const GradedQuotient<F>&, std::span<const LinearForm<F>>, \
                                           int);                                                    \
  template BoundCheck check_gasharov_bound(const GradedQuotient<F>&, const Polynomial<F>&, int,     \
                                           std::optional<int>);                                     \
  template bool check_order_independence(const GradedQuotient<F>&, std::span<const LinearForm<F>>, \
                                         int);

HYPERRES_INSTANTIATE(PrimeField)
HYPERRES_INSTANTIATE(RationalField)

}  // namespace hyperres
