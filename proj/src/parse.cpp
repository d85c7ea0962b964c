#include "hyperres/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace hyperres {

namespace {

template <class F>
class Parser {
 public:
  Parser(const RingPtr<F>& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial<F> parse() {
    auto p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial<F> expr() {
    auto acc = term();
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial<F> term() {
    auto acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial<F> unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial<F> power() {
    auto base = atom();
    if (accept('^')) {
      auto e = digits();
      if (e.size() > 6) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Polynomial<F> atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigRational value{BigInt(digits())};
      if (accept('/')) {
        BigInt den(digits());
        if (den == 0) fail("zero denominator");
        value /= BigRational(den);
      }
      return Polynomial<F>::constant(ring_, ring_->field().from_rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& names = ring_->names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return Polynomial<F>::variable(ring_, i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }

  const RingPtr<F>& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')' && depth > 0) --depth;
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      std::string item(text.substr(start, i - start));
      auto first = item.find_first_not_of(" \t\n");
      auto last = item.find_last_not_of(" \t\n");
      if (first != std::string::npos) out.push_back(item.substr(first, last - first + 1));
      start = i + 1;
    }
  }
  return out;
}

template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text) {
  return Parser<F>(ring, text).parse();
}

template <class F>
std::vector<Polynomial<F>> parse_polynomial_list(const RingPtr<F>& ring, std::string_view text) {
  std::vector<Polynomial<F>> out;
  for (const auto& item : split_list(text)) out.push_back(parse_polynomial(ring, item));
  return out;
}

template Polynomial<PrimeField> parse_polynomial(const RingPtr<PrimeField>&, std::string_view);
template Polynomial<RationalField> parse_polynomial(const RingPtr<RationalField>&, std::string_view);
template std::vector<Polynomial<PrimeField>> parse_polynomial_list(const RingPtr<PrimeField>&,
                                                                   std::string_view);
template std::vector<Polynomial<RationalField>> parse_polynomial_list(const RingPtr<RationalField>&,
                                                                      std::string_view);

}  // namespace hyperres
