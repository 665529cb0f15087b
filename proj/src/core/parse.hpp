#pragma once

#include <string>

#include "polynomial.hpp"

namespace ultk {

// Parses the polynomial grammar documented in docs/polynomial-grammar.md:
// +, -, *, ^, parentheses, integer and a/b coefficient literals, declared
// variable names, implicit multiplication between adjacent factors.
// Throws ParseError with 1-based line/column on malformed input.
Polynomial parse_polynomial(const std::string& text, const PolyContextPtr& ctx);

}  // namespace ultk
