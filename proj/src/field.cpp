#include "hyperres/field.hpp"

#include <stdexcept>

namespace hyperres {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime below 2^31, got " +
                                std::to_string(p));
}

std::string PrimeField::name() const { return "GF(" + std::to_string(p_) + ")"; }

PrimeField::Element PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const BigRational& q) const {
  BigInt mod(p_);
  BigInt num = q.get_num() % mod;
  BigInt den = q.get_den() % mod;
  if (num < 0) num += mod;
  if (den == 0) throw std::domain_error("denominator vanishes in " + name());
  return div(static_cast<Element>(num.get_ui()), static_cast<Element>(den.get_ui()));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in QQ");
  return 1 / a;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q" || text == "QQ" || text == "q")
    return FieldSpec{Kind::rationals, 0};
  std::size_t used = 0;
  unsigned long long p = 0;
  try {
    p = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("field must be Q or a prime, got '" + text + "'");
  }
  if (used != text.size() || p >= (1ull << 31) || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime below 2^31, got '" + text + "'");
  return FieldSpec{Kind::prime, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rationals ? "Q" : std::to_string(modulus);
}

}  // namespace hyperres
