#ifndef JNORM_PARSE_HPP
#define JNORM_PARSE_HPP

#include <string>

#include "jnorm/counting.hpp"
#include "jnorm/poly.hpp"

namespace jnorm {

// Polynomial expressions in n with +, -, *, ^, parentheses, integer and
// rational literals, and implicit multiplication: "2n(n-1)", "n^2+n-8",
// "-(n-2)", "1/2". Throws std::invalid_argument on malformed input.
RationalPoly parse_poly(const std::string& text);

// Term specs: an optional leading coefficient polynomial followed by a
// product of s(NAME,+) / s(NAME,-) factors, each with an optional ^k:
//   "s(K_1,+) s(K_2,-)"      "2(n-1) s(P_3,-)"      "s(K_1,+)^2"
// The empty product is legal (sum of 1 over vertices).
TermSpec parse_term_spec(const std::string& text);

}  // namespace jnorm

#endif
