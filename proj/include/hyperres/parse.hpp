// Text input for polynomials: sums of products of variables, integer or
// rational constants, powers and parentheses, e.g. "x^2 - 3/2*y*z + (x+y)^3".

#ifndef HYPERRES_PARSE_HPP
#define HYPERRES_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hyperres/polynomial.hpp"

namespace hyperres {

/// Throws std::invalid_argument with the offending position on malformed
/// input or an unknown variable name.
template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text);

/// Comma-separated list; empty input yields an empty list.
template <class F>
std::vector<Polynomial<F>> parse_polynomial_list(const RingPtr<F>& ring, std::string_view text);

/// Splits on commas and trims whitespace; empty items are dropped.
std::vector<std::string> split_list(std::string_view text, char sep = ',');

}  // namespace hyperres

#endif  // HYPERRES_PARSE_HPP
