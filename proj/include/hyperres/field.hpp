// Coefficient fields: prime fields GF(p) and the rationals.
//
// Every algebraic type in the library is templated on one of the two field
// classes below. A field object carries whatever runtime data its arithmetic
// needs (the modulus for GF(p)) and is cheap to copy.

#ifndef HYPERRES_FIELD_HPP
#define HYPERRES_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace hyperres {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Default modulus for randomized experiments: the largest prime below 2^16.
inline constexpr std::uint32_t kDefaultPrime = 65521;

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Element zero() const { return 0; }
  Element one() const { return p_ == 1 ? 0 : 1; }
  Element from_int(long long v) const;
  /// Image of a rational; throws std::domain_error when p divides the denominator.
  Element from_rational(const BigRational& q) const;

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  /// Symmetric residues: p - 1 prints as -1.
  std::string to_string(Element a) const {
    return a > p_ / 2 ? "-" + std::to_string(p_ - a) : std::to_string(a);
  }

  /// Uniform element of GF(p).
  template <class Rng>
  Element random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    return dist(rng);
  }

  bool operator==(const PrimeField& other) const = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = BigRational;

  /// `sample_range` bounds the integers drawn by random(): [-range, range].
  explicit RationalField(std::int64_t sample_range = 100) : range_(sample_range) {}

  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }
  std::int64_t sample_range() const { return range_; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element from_rational(const BigRational& q) const { return q; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return a * inv(b); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  template <class Rng>
  Element random(Rng& rng) const {
    std::uniform_int_distribution<std::int64_t> dist(-range_, range_);
    return from_int(dist(rng));
  }

  // The sampling range does not change the field.
  bool operator==(const RationalField&) const { return true; }

 private:
  std::int64_t range_;
};

/// Runtime description of a field, as parsed from a command line or config.
struct FieldSpec {
  enum class Kind { prime, rationals };
  Kind kind = Kind::prime;
  std::uint32_t modulus = kDefaultPrime;

  /// Accepts "Q"/"QQ" or a prime number. Throws std::invalid_argument.
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;
};

/// Calls `fn` with the concrete field described by `spec`.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rationals) return fn(RationalField{});
  return fn(PrimeField{spec.modulus});
}

}  // namespace hyperres

#endif  // HYPERRES_FIELD_HPP
