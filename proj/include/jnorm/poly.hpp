#ifndef JNORM_POLY_HPP
#define JNORM_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "jnorm/rational.hpp"

namespace jnorm {

// Univariate polynomial in the ambient vertex count n, with exact rational
// coefficients. coeffs[k] is the coefficient of n^k; trailing zeros are
// trimmed, so the zero polynomial has an empty coefficient vector.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(const Rational& constant);
    explicit RationalPoly(std::vector<Rational> coeffs);
    RationalPoly(std::initializer_list<long> coeffs);

    static RationalPoly variable();                 // the polynomial n
    static RationalPoly constant(long c);
    static RationalPoly falling_factorial(int m);   // n(n-1)...(n-m+1), m >= 0

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int power) const;
    Rational leading_coefficient() const;

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator-() const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly scaled(const Rational& c) const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);

    bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RationalPoly& o) const { return !(*this == o); }

    Rational eval(const Integer& n) const;
    Rational eval(long n) const { return eval(Integer(n)); }

    // Exact change of basis to falling factorials: returns a with
    // p = sum_m a[m] * n^{_m}. Inverse of from_falling_basis.
    std::vector<Rational> to_falling_basis() const;
    static RationalPoly from_falling_basis(const std::vector<Rational>& a);

    // "3n^2 - 3n - 2" style rendering in the monomial basis.
    std::string to_string() const;
    // "n^{_2} + 2 n^{_1}" style rendering over falling factorials.
    std::string to_falling_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace jnorm

#endif
