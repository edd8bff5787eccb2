#ifndef JNORM_COUNTING_HPP
#define JNORM_COUNTING_HPP

#include <cstdint>
#include <vector>

#include "jnorm/graph.hpp"
#include "jnorm/poly.hpp"

namespace jnorm {

// Number of vertex subsets W of host with host[W] isomorphic to pattern.
// s(empty graph, G) = 1.
std::int64_t s_count(const SmallGraph& pattern, const SmallGraph& host);

// Signed injection count: sum over injections phi of V(pattern) into
// V(host) of (-1)^(number of pattern edges mapped to host non-edges).
// j(empty graph, G) = 1; zero when the pattern has more vertices than host.
std::int64_t j_count(const SmallGraph& pattern, const SmallGraph& host);

// One summand c(n) * prod s(J_i, G_v^-) * prod s(J'_j, G_v^+) of an
// identity's left-hand side.
struct TermSpec {
    RationalPoly coefficient = RationalPoly::constant(1);
    std::vector<SmallGraph> minus_factors;
    std::vector<SmallGraph> plus_factors;

    // 1 + total factor vertices; expansion graphs have at most this many
    // vertices.
    int vertex_budget() const;
};

// coefficient(n) * sum_v prod s(J_i, G_v^-) * prod s(J'_j, G_v^+),
// with n = |V(host)|, evaluated by brute force.
Rational term_eval(const TermSpec& term, const SmallGraph& host);

// Brute-force left-hand side of an identity given as a list of terms; the
// symbolic engine is never consulted.
Rational identity_lhs_eval(const SmallGraph& host, const std::vector<TermSpec>& terms);

}  // namespace jnorm

#endif
