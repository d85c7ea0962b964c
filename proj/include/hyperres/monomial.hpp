// Exponent vectors and monomial orders.

#ifndef HYPERRES_MONOMIAL_HPP
#define HYPERRES_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace hyperres {

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(const std::vector<unsigned>& exps);

  static Monomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  /// Coprime leading monomials give an S-pair that reduces to zero.
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  std::vector<unsigned> exponents() const { return {exps_.begin(), exps_.end()}; }
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  boost::container::small_vector<Exponent, 12> exps_;
  unsigned degree_ = 0;
};

/// A total order on monomials that refines divisibility.
///
/// `block` compares the first `split` variables by grevlex and breaks ties by
/// grevlex on the remaining variables; any monomial touching the first block
/// is larger than every monomial free of it, which is what elimination needs.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(std::size_t split) { return MonomialOrder(Kind::block, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;
  std::string to_string() const;

 private:
  MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}
  Kind kind_;
  std::size_t split_;
};

/// All monomials of total degree `degree` in `num_vars` variables, in
/// descending lex order (x_1 > x_2 > ... > x_n).
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

}  // namespace hyperres

#endif  // HYPERRES_MONOMIAL_HPP
