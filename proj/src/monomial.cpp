#include "hyperres/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hyperres {

namespace {

Monomial::Exponent checked(unsigned e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max())
    throw std::overflow_error("monomial exponent overflow");
  return static_cast<Monomial::Exponent>(e);
}

// grevlex on the index range [lo, hi).
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  for (unsigned e : exps) {
    exps_.push_back(checked(e));
    degree_ += e;
  }
}

Monomial::Monomial(const std::vector<unsigned>& exps) {
  for (unsigned e : exps) {
    exps_.push_back(checked(e));
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index) {
  Monomial m(num_vars);
  m.set(index, 1);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = checked(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = checked(exps_[i] + other.exps_[i]);
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(*this);
  out.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.num_vars();
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_range(a, b, 0, n);
    case Kind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::block: {
      const std::size_t split = std::min(split_, n);
      if (int c = grevlex_range(a, b, 0, split); c != 0) return c;
      return grevlex_range(a, b, split, n);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  // Walk exponent vectors in descending lex order.
  std::vector<unsigned> e(num_vars, 0);
  e[0] = degree;
  while (true) {
    out.emplace_back(e);
    // Find the rightmost position before the last with a positive exponent.
    std::size_t i = num_vars - 1;
    std::size_t pivot = num_vars;
    for (std::size_t k = num_vars - 1; k-- > 0;) {
      if (e[k] > 0) {
        pivot = k;
        break;
      }
    }
    if (pivot == num_vars) break;
    unsigned tail = e[i];
    e[i] = 0;
    e[pivot] -= 1;
    e[pivot + 1] = tail + 1;
  }
  return out;
}

}  // namespace hyperres
