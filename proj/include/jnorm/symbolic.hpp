#ifndef JNORM_SYMBOLIC_HPP
#define JNORM_SYMBOLIC_HPP

#include <map>
#include <string>

#include "jnorm/counting.hpp"
#include "jnorm/graph.hpp"
#include "jnorm/poly.hpp"

namespace jnorm {

// Formal linear combinations of graph isomorphism classes with RationalPoly
// coefficients in the ambient vertex count n. Keys are canonical
// representatives; zero coefficients are dropped on normalization.
//
// The ambient tag records the size of the underlying vertex set relative to
// n: 0 for sums over V(G) (JExpr), 1 for sums over V(G) minus a vertex
// (KExpr). Mixing ambients in a product is an error.

class JExpr {
public:
    using TermMap = std::map<SmallGraph, RationalPoly>;

    explicit JExpr(int ambient = 0) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Accumulates coeff on the isomorphism class of g.
    void add_term(const SmallGraph& g, const RationalPoly& coeff);
    RationalPoly coefficient(const SmallGraph& g) const;

    JExpr operator+(const JExpr& o) const;
    JExpr operator-(const JExpr& o) const;
    JExpr scaled(const Rational& c) const;
    JExpr scaled(const RationalPoly& p) const;

    bool operator==(const JExpr& o) const { return ambient_ == o.ambient_ && terms_ == o.terms_; }

private:
    int ambient_;
    TermMap terms_;
};

class KExpr {
public:
    using TermMap = std::map<ColoredGraph, RationalPoly>;

    explicit KExpr(int ambient = 1) : ambient_(ambient) {}

    // Multiplicative identity: the single term (empty graph, empty blue set)
    // with coefficient 1.
    static KExpr identity(int ambient = 1);

    int ambient() const { return ambient_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ColoredGraph& g, const RationalPoly& coeff);
    RationalPoly coefficient(const ColoredGraph& g) const;

    bool operator==(const KExpr& o) const { return ambient_ == o.ambient_ && terms_ == o.terms_; }

private:
    int ambient_;
    TermMap terms_;
};

// Gluing product: for each term pair, sums over subsets I of V(J_1) and
// injections of I into V(J_2) the graph obtained by identifying each v with
// its image; doubled edges cancel in pairs. Coefficients multiply.
JExpr j_mul(const JExpr& a, const JExpr& b);

// Same gluing for marked graphs; an identified vertex is blue iff exactly
// one of the two identified vertices was blue.
KExpr k_mul(const KExpr& a, const KExpr& b);

// Repeatedly removes isolated vertices, multiplying the term coefficient by
// (|S| - |V(J)| + 1), with |S| given as a polynomial in n.
JExpr reduce_isolated(const JExpr& e, const RationalPoly& ambient_size);
inline JExpr reduce_isolated(const JExpr& e) {
    return reduce_isolated(e, RationalPoly::variable());
}

// Neighborhood expansions: sum over vertex subsets V of J and edge subsets
// E of the complete graph on V(J) of
//   sign * (marked graph (V(J), E) with blue set V)
// divided by 2^(|E(K_J)| + |V(J)|) * Aut(J), where sign = (-1)^|E \ E(J)|
// for the inside expansion and (-1)^(|V| + |E \ E(J)|) for the outside one.
// Substituting the marks by adjacency to a vertex w recovers s(J, G_w^+)
// resp. s(J, G_w^-) exactly.
KExpr expand_plus(const SmallGraph& j);
KExpr expand_minus(const SmallGraph& j);

// Replaces each marked term (J, L) by J extended with a new vertex adjacent
// exactly to L, turning the vertex sum into a plain linear combination of
// graph classes over V(G).
JExpr apex_close(const KExpr& e);

// Full normal-form pipeline: expand the factors, multiply the marked
// expressions, close over the apex vertex, reduce isolated vertices, and
// scale by the term coefficient. The result r satisfies
// jexpr_eval(r, G) = term_eval(t, G) for every graph G.
JExpr expand_term(const TermSpec& t);

// Sum over terms of coefficient(|V(host)|) * j_count(term graph, host).
Rational jexpr_eval(const JExpr& e, const SmallGraph& host);

// JSON object mapping the graph6 string of each term graph to the
// coefficient's monomial-basis rational coefficient list, keys in
// lexicographic order.
std::string jexpr_to_json(const JExpr& e);
JExpr jexpr_from_json(const std::string& text);

}  // namespace jnorm

#endif
