#include "jnorm/parse.hpp"

#include <cctype>
#include <stdexcept>

#include "jnorm/names.hpp"

namespace jnorm {

namespace {

struct PolyParser {
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial \"" + s + "\": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool starts_factor() {
        char c = peek();
        return c == 'n' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    RationalPoly parse_sum() {
        RationalPoly acc;
        bool negate = false;
        if (peek() == '-') {
            ++pos;
            negate = true;
        } else if (peek() == '+') {
            ++pos;
        }
        acc = parse_product();
        if (negate) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc += parse_product();
            } else if (c == '-') {
                ++pos;
                acc -= parse_product();
            } else {
                break;
            }
        }
        return acc;
    }

    RationalPoly parse_product() {
        RationalPoly acc = parse_power();
        while (true) {
            if (peek() == '*') {
                ++pos;
                acc *= parse_power();
            } else if (starts_factor()) {
                acc *= parse_power();  // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    RationalPoly parse_power() {
        RationalPoly base = parse_atom();
        if (peek() == '^') {
            ++pos;
            long e = parse_integer();
            if (e < 0) fail("negative exponent");
            RationalPoly r = RationalPoly::constant(1);
            for (long i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }

    RationalPoly parse_atom() {
        char c = peek();
        if (c == 'n') {
            ++pos;
            return RationalPoly::variable();
        }
        if (c == '(') {
            ++pos;
            RationalPoly inner = parse_sum();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_integer();
            if (peek() == '/') {
                ++pos;
                long den = parse_integer();
                if (den == 0) fail("zero denominator");
                return RationalPoly(make_rational(num, den));
            }
            return RationalPoly::constant(num);
        }
        fail("unexpected character");
    }

    long parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    RationalPoly parse_all() {
        RationalPoly p = parse_sum();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return p;
    }
};

}  // namespace

RationalPoly parse_poly(const std::string& text) {
    PolyParser p{text};
    return p.parse_all();
}

TermSpec parse_term_spec(const std::string& text) {
    TermSpec term;
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    // Leading coefficient: everything before the first "s(" factor.
    size_t first_factor = std::string::npos;
    for (size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] == 's' && text[i + 1] == '(') {
            first_factor = i;
            break;
        }
    }
    std::string head = text.substr(0, first_factor);
    bool head_blank = head.find_first_not_of(" \t") == std::string::npos;
    if (!head_blank) term.coefficient = parse_poly(head);
    pos = first_factor == std::string::npos ? text.size() : first_factor;

    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text.compare(pos, 2, "s(") != 0)
            throw std::invalid_argument("term spec: expected s(NAME,SIDE) at \"" +
                                        text.substr(pos) + "\"");
        pos += 2;
        // NAME may contain parentheses and braces; split at the last
        // top-level comma before the matching ')'.
        int depth = 0;
        size_t start = pos;
        size_t comma = std::string::npos;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(' || c == '{') ++depth;
            else if (c == '}') --depth;
            else if (c == ')') {
                if (depth == 0) break;
                --depth;
            } else if (c == ',' && depth == 0) {
                comma = pos;
            }
            ++pos;
        }
        if (pos >= text.size() || comma == std::string::npos)
            throw std::invalid_argument("term spec: unterminated factor");
        std::string name = text.substr(start, comma - start);
        std::string side = text.substr(comma + 1, pos - comma - 1);
        ++pos;  // past ')'
        auto strip = [](std::string v) {
            while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.erase(0, 1);
            while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
            return v;
        };
        name = strip(name);
        side = strip(side);
        if (side != "+" && side != "-")
            throw std::invalid_argument("term spec: side must be + or -");

        int power = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            size_t expend = pos;
            while (expend < text.size() && std::isdigit(static_cast<unsigned char>(text[expend])))
                ++expend;
            if (expend == pos) throw std::invalid_argument("term spec: expected exponent");
            power = std::stoi(text.substr(pos, expend - pos));
            pos = expend;
        }

        SmallGraph g = named(name);
        for (int i = 0; i < power; ++i) {
            if (side == "+") term.plus_factors.push_back(g);
            else term.minus_factors.push_back(g);
        }
    }
    return term;
}

}  // namespace jnorm
