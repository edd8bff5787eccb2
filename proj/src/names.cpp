#include "jnorm/names.hpp"

#include <cctype>
#include <stdexcept>

namespace jnorm {

namespace {

struct NameParser {
    std::string s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("graph name \"" + s + "\": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    }

    // K_n | K_{n} | K_{a,b} | P_n | C_n | T_{n,k}
    SmallGraph parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        char kind = s[pos++];
        if (kind != 'K' && kind != 'P' && kind != 'C' && kind != 'T')
            fail(std::string("unknown graph family '") + kind + "'");
        if (!eat('_')) fail("expected '_' after family letter");
        bool braced = eat('{');
        int a = parse_int();
        int b = -1;
        if (braced) {
            if (eat(',')) b = parse_int();
            if (!eat('}')) fail("expected '}'");
        }
        switch (kind) {
            case 'K':
                if (b >= 0) return complete_bipartite(a, b);
                return complete(a);
            case 'P':
                if (b >= 0) fail("P takes one subscript");
                return path(a);
            case 'C':
                if (b >= 0) fail("C takes one subscript");
                return cycle(a);
            case 'T':
                if (b < 0) fail("T takes two subscripts");
                return tadpole(a, b);
        }
        fail("unreachable");
    }

    static SmallGraph complete(int n) {
        SmallGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    static SmallGraph path(int n) {
        SmallGraph g(n);
        for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        return g;
    }

    static SmallGraph cycle(int n) {
        if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        SmallGraph g = path(n);
        g.add_edge(n - 1, 0);
        return g;
    }

    static SmallGraph complete_bipartite(int a, int b) {
        SmallGraph g(a + b);
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
        return g;
    }

    // K_n plus an extra vertex adjacent to k of the old ones.
    static SmallGraph tadpole(int n, int k) {
        if (k > n) throw std::invalid_argument("T_{n,k} needs k <= n");
        SmallGraph g = complete(n).with_apex(full_mask(k));
        return g;
    }

    SmallGraph parse_primary() {
        skip_ws();
        if (peek() == '(') {
            eat('(');
            SmallGraph g = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return g;
        }
        int mult = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) mult = parse_int();
        SmallGraph base = peek() == '(' ? parse_primary() : parse_base();
        if (mult < 1) fail("multiplicity must be positive");
        SmallGraph g = base;
        for (int i = 1; i < mult; ++i) g = disjoint_union(g, base);
        return g;
    }

    static SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b) {
        SmallGraph g(a.n_vertices() + b.n_vertices());
        for (auto [u, v] : a.edges()) g.add_edge(u, v);
        int off = a.n_vertices();
        for (auto [u, v] : b.edges()) g.add_edge(off + u, off + v);
        return g;
    }

    SmallGraph parse_minus() {
        SmallGraph g = parse_primary();
        skip_ws();
        if (peek() == '-') {
            eat('-');
            SmallGraph h = parse_primary();
            // Minuend must be complete so that the placement of h on
            // distinct vertices is unique up to isomorphism.
            int n = g.n_vertices();
            if (g.edge_count() != n * (n - 1) / 2)
                fail("'-' requires a complete minuend");
            if (h.n_vertices() > n) fail("subtracted graph has too many vertices");
            for (auto [u, v] : h.edges()) {
                if (!g.has_edge(u, v)) fail("subtracted edges must be distinct");
                g.remove_edge(u, v);
            }
        }
        return g;
    }

    SmallGraph parse_plus() {
        SmallGraph g = parse_minus();
        skip_ws();
        if (peek() == '+') {
            eat('+');
            SmallGraph h = parse_minus();
            if (h.n_vertices() != 2 || h.edge_count() != 1)
                fail("'+' supports only adding K_2 (one edge)");
            g = plus_one_edge(g);
        }
        return g;
    }

    // Adds one edge between two nonadjacent vertices. Only well defined when
    // all candidate additions land in the same isomorphism class.
    static SmallGraph plus_one_edge(const SmallGraph& g) {
        SmallGraph result;
        CanonicalKey key;
        bool found = false;
        for (int u = 0; u < g.n_vertices(); ++u) {
            for (int v = u + 1; v < g.n_vertices(); ++v) {
                if (g.has_edge(u, v)) continue;
                SmallGraph cand = g;
                cand.add_edge(u, v);
                auto cf = canonical_form(cand);
                if (!found) {
                    result = cand;
                    key = cf.key;
                    found = true;
                } else if (cf.key != key) {
                    throw std::invalid_argument("'+K_2' is ambiguous for this graph");
                }
            }
        }
        if (!found) throw std::invalid_argument("'+K_2' needs a nonadjacent vertex pair");
        return result;
    }

    SmallGraph parse_expr() {
        SmallGraph g = parse_plus();
        while (true) {
            skip_ws();
            if (peek() == 'u' || peek() == 'U') {
                ++pos;
                g = disjoint_union(g, parse_plus());
            } else {
                break;
            }
        }
        return g;
    }

    SmallGraph parse_all() {
        SmallGraph g = parse_expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input at position " + std::to_string(pos));
        return g;
    }
};

}  // namespace

SmallGraph named(const std::string& spec) {
    NameParser p{spec};
    return p.parse_all();
}

}  // namespace jnorm
