#include "jnorm/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace jnorm {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

RationalPoly::RationalPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

RationalPoly::RationalPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

RationalPoly RationalPoly::variable() { return RationalPoly({0, 1}); }

RationalPoly RationalPoly::constant(long c) { return RationalPoly(Rational(c)); }

RationalPoly RationalPoly::falling_factorial(int m) {
    RationalPoly p = constant(1);
    for (int k = 0; k < m; ++k) p *= RationalPoly({-k, 1});
    return p;
}

Rational RationalPoly::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[power];
}

Rational RationalPoly::leading_coefficient() const {
    if (coeffs_.empty()) return Rational(0);
    return coeffs_.back();
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    RationalPoly r = *this;
    r += o;
    return r;
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    RationalPoly r = *this;
    r -= o;
    return r;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return RationalPoly();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    *this = *this * o;
    return *this;
}

RationalPoly RationalPoly::scaled(const Rational& c) const {
    if (c == 0) return RationalPoly();
    RationalPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Rational RationalPoly::eval(const Integer& n) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
    return acc;
}

std::vector<Rational> RationalPoly::to_falling_basis() const {
    // Falling factorials are monic of degree m, so peel from the top.
    std::vector<Rational> out(coeffs_.size(), Rational(0));
    RationalPoly rest = *this;
    while (!rest.is_zero()) {
        int d = rest.degree();
        Rational lead = rest.leading_coefficient();
        out[d] = lead;
        rest -= falling_factorial(d).scaled(lead);
    }
    return out;
}

RationalPoly RationalPoly::from_falling_basis(const std::vector<Rational>& a) {
    RationalPoly p;
    for (size_t m = 0; m < a.size(); ++m)
        p += falling_factorial(static_cast<int>(m)).scaled(a[m]);
    return p;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& c,
                 const std::string& sym, int power) {
    if (c == 0) return;
    Rational a = c;
    if (first) {
        if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
    } else {
        if (a < 0) {
            os << " - ";
            a = -a;
        } else {
            os << " + ";
        }
    }
    bool unit = (a == 1) && !sym.empty();
    if (!unit) os << to_string(a);
    if (!sym.empty()) {
        if (!unit && sym.size() > 1) os << " ";
        os << sym;
        if (power > 1) os << "^" << power;
    }
}

}  // namespace

std::string RationalPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d)
        append_term(os, first, coeffs_[d], d == 0 ? "" : "n", d);
    return os.str();
}

std::string RationalPoly::to_falling_string() const {
    if (is_zero()) return "0";
    auto a = to_falling_basis();
    std::ostringstream os;
    bool first = true;
    for (int m = static_cast<int>(a.size()) - 1; m >= 0; --m) {
        std::string sym = m == 0 ? "" : ("n^{_" + std::to_string(m) + "}");
        append_term(os, first, a[m], sym, 1);
    }
    return os.str();
}

}  // namespace jnorm
