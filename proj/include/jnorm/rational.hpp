#ifndef JNORM_RATIONAL_HPP
#define JNORM_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace jnorm {

// Exact arbitrary-precision rational. All arithmetic in this project is
// exact; there is no floating point anywhere in the pipeline.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Renders "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

}  // namespace jnorm

#endif
