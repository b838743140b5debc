#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "stdbasis/poly.hpp"

namespace stdbasis {

// Polynomial syntax, ASCII only, whitespace insignificant:
//
//   poly    := ['-'] term (('+' | '-') term)*
//   term    := coeff ['*' varpow ('*' varpow)*] | varpow ('*' varpow)*
//   varpow  := 'X' index ['^' exponent]
//
// '*' may be omitted (juxtaposition), so "2X4^2X6^2" is one term. Indices
// are 1-based and must lie in [1, n]; coefficients are reduced mod p.
// Errors throw ParseError with the line and column of the offending token.
Polynomial parse_poly(std::string_view text, const Ring& ring);
Polynomial parse_poly(std::string_view text, std::size_t nvars, std::uint32_t p, OrderKind order);

// Canonical form: terms in descending order, coefficients in [1, p) with 1
// elided, "^1" elided, variables juxtaposed; zero prints as "0".
std::string print_poly(const Polynomial& f);
std::string print_monomial(const Monomial& m);

}  // namespace stdbasis
