// Hyperplane restriction: the colon/sum ladder of a sequence of linear forms,
// the (Gr,d) property, and the Green / iterated / Gasharov bound checks.
//
// Ideals of R = A/I are always carried as their pre-images in A (so every
// ladder ideal contains I), which lets a single Groebner engine read off the
// dimensions of both the ideals and the quotients.

#ifndef HYPERRES_RESTRICTION_HPP
#define HYPERRES_RESTRICTION_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperres/ideal.hpp"
#include "hyperres/random.hpp"

namespace hyperres {

/// sum_i coeffs[i] * x_i. The zero form is a legitimate value.
template <class F>
struct LinearForm {
  std::vector<typename F::Element> coeffs;

  std::size_t num_vars() const { return coeffs.size(); }
  bool is_zero(const F& field) const;
  Polynomial<F> to_polynomial(const RingPtr<F>& ring) const;
  /// Throws std::invalid_argument unless `p` is zero or a linear form.
  static LinearForm from_polynomial(const Polynomial<F>& p);
};

/// Uniform independent coefficients; deterministic for a given generator state.
template <class F>
LinearForm<F> sample_linear_form(std::size_t num_vars, const F& field, Rng& rng);

enum class Op : char { colon = 'c', sum = 's' };

/// A word over {c, s} selecting colon or sum at each rung of the ladder.
class OpWord {
 public:
  OpWord() = default;
  /// Throws std::invalid_argument on letters other than 'c' and 's'.
  explicit OpWord(std::string letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Op operator[](std::size_t i) const { return static_cast<Op>(letters_[i]); }
  std::size_t colons() const;
  std::size_t sums() const { return size() - colons(); }
  OpWord then(Op op) const { return OpWord(letters_ + static_cast<char>(op)); }
  OpWord prefix(std::size_t n) const { return OpWord(letters_.substr(0, n)); }
  const std::string& str() const { return letters_; }

  /// Shorter words first, then lexicographic with c < s.
  std::strong_ordering operator<=>(const OpWord& other) const;
  bool operator==(const OpWord& other) const = default;

  /// Every word of length 0..max_length in the order above.
  static std::vector<OpWord> all_up_to(std::size_t max_length);

 private:
  std::string letters_;
};

/// Enumerating (Gr,d) visits 2^(r+1) - 1 ladder ideals; r is capped here.
inline constexpr std::size_t kMaxGrdForms = 12;

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The ideals I_o of a fixed form sequence, memoized by word.
template <class F>
class Ladder {
 public:
  Ladder(GradedQuotient<F> algebra, std::vector<LinearForm<F>> forms);

  const GradedQuotient<F>& algebra() const { return algebra_; }
  std::size_t length() const { return forms_.size(); }
  const Polynomial<F>& form(std::size_t i) const { return forms_[i]; }

  /// Throws std::invalid_argument when the word is longer than the form list.
  const Ideal<F>& ideal(const OpWord& word);

 private:
  GradedQuotient<F> algebra_;
  std::vector<Polynomial<F>> forms_;
  std::map<std::string, Ideal<F>> memo_;
};

/// One rung: I : l (the unit ideal when l = 0) or I + (l).
template <class F>
Ideal<F> ladder_step(const Ideal<F>& ideal, Op op, const Polynomial<F>& form);

template <class F>
Ideal<F> ladder_ideal(const GradedQuotient<F>& algebra, std::span<const LinearForm<F>> forms,
                      const OpWord& word);

struct GrdViolation {
  int condition = 0;
  OpWord word;
  std::string detail;
};

struct GrdReport {
  bool passed = true;
  std::vector<GrdViolation> violations;
  /// dim_K (I_o)_j of the R-ideal, for every enumerated word and j = 0..d.
  std::map<std::pair<OpWord, int>, std::uint64_t> ladder_dims;
};

/// Checks conditions (1)-(3), and (4) when `check_stronger`. Violations are
/// data; `passed` reflects conditions (1)-(3) only. Negative degrees make
/// (3)/(4) vacuous. Throws BudgetError for more than kMaxGrdForms forms.
template <class F>
GrdReport verify_grd(const GradedQuotient<F>& algebra, std::span<const LinearForm<F>> forms, int degree,
                     bool check_stronger = false);

struct BoundCheck {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
};

/// dim (R/lR)_d against (dim R_d)_<d>.
template <class F>
BoundCheck check_green_bound(const GradedQuotient<F>& algebra, const LinearForm<F>& form, int degree);

/// dim (R/(l_1..l_p))_d against binom(k_d - p, d) + ... + binom(k_1 - p, 1).
template <class F>
BoundCheck check_iterated_bound(const GradedQuotient<F>& algebra, std::span<const LinearForm<F>> forms,
                                int degree);

/// dim (A/(I + (f)))_d against dim (A/(I^lex + (x_n^c)))_d, c = deg f.
/// `form_degree` must be given when f = 0 and must match deg f otherwise.
template <class F>
BoundCheck check_gasharov_bound(const GradedQuotient<F>& algebra, const Polynomial<F>& f, int degree,
                                std::optional<int> form_degree = std::nullopt);

/// Whether every dim_K (I_o)_j, |o| <= r and 0 <= j <= d - |o|_c - 1, is the
/// same for the permuted form sequences (all r! orders for r <= 6, otherwise
/// 50 fixed-seed samples).
template <class F>
bool check_order_independence(const GradedQuotient<F>& algebra, std::span<const LinearForm<F>> forms,
                              int degree);

}  // namespace hyperres

#endif  // HYPERRES_RESTRICTION_HPP
