#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "jnorm/counting.hpp"
#include "jnorm/names.hpp"
#include "jnorm/parse.hpp"

using namespace jnorm;

namespace {

// Second, independent route to the signed injection count: choose the image
// subset first, then run over its permutations.
std::int64_t j_count_by_subsets(const SmallGraph& pattern, const SmallGraph& host) {
    int p = pattern.n_vertices();
    int n = host.n_vertices();
    if (p > n) return 0;
    auto pedges = pattern.edges();
    std::vector<int> chosen(p);
    std::int64_t total = 0;
    auto walk_subsets = [&](auto&& self, int next, int start) -> void {
        if (next == p) {
            std::array<int, kMaxVertices> image{};
            std::vector<int> order(p);
            for (int i = 0; i < p; ++i) order[i] = i;
            do {
                for (int i = 0; i < p; ++i) image[i] = chosen[order[i]];
                int sign = 1;
                for (auto [a, b] : pedges)
                    if (!host.has_edge(image[a], image[b])) sign = -sign;
                total += sign;
            } while (std::next_permutation(order.begin(), order.end()));
            return;
        }
        for (int v = start; v < n; ++v) {
            chosen[next] = v;
            self(self, next + 1, v + 1);
        }
    };
    walk_subsets(walk_subsets, 0, 0);
    return total;
}

// Injections that place the pattern exactly onto an induced copy.
std::int64_t strong_injection_count(const SmallGraph& pattern, const SmallGraph& host) {
    int p = pattern.n_vertices();
    int n = host.n_vertices();
    std::array<int, kMaxVertices> image{};
    VertexMask used = 0;
    std::int64_t total = 0;
    auto rec = [&](auto&& self, int level) -> void {
        if (level == p) {
            ++total;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & bit(v)) continue;
            bool ok = true;
            for (int prev = 0; prev < level && ok; ++prev)
                if (pattern.has_edge(prev, level) != host.has_edge(image[prev], v)) ok = false;
            if (!ok) continue;
            image[level] = v;
            used |= bit(v);
            self(self, level + 1);
            used &= static_cast<VertexMask>(~bit(v));
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace

TEST_CASE("s counts") {
    CHECK(s_count(named("K_2"), named("K_3")) == 3);
    CHECK(s_count(named("P_3"), named("K_{1,3}")) == 3);
    CHECK(s_count(named("C_4"), named("K_{2,3}")) == 3);
    CHECK(s_count(SmallGraph(0), named("C_5")) == 1);
    CHECK(s_count(named("K_3"), named("C_5")) == 0);
    CHECK(s_count(named("C_5"), named("P_3")) == 0);  // pattern larger than host
}

TEST_CASE("j counts") {
    for (const auto& host : enumerate_graphs(5)) {
        int n = host.n_vertices();
        long e = host.edge_count();
        CHECK(j_count(named("K_1"), host) == n);
        CHECK(j_count(named("K_2"), host) == 4 * e - n * (n - 1));
        CHECK(j_count(SmallGraph(0), host) == 1);
    }
    // Every injection into a complete host keeps sign +1.
    for (const auto& pattern : enumerate_graphs(3)) {
        CHECK(j_count(pattern, named("K_5")) == 5 * 4 * 3);
        CHECK(j_count(pattern, named("K_4")) == 4 * 3 * 2);
    }
    // Empty host: every pattern edge lands on a non-edge.
    for (const auto& pattern : enumerate_graphs(4)) {
        int sign = pattern.edge_count() % 2 == 0 ? 1 : -1;
        CHECK(j_count(pattern, SmallGraph(6)) == sign * 6 * 5 * 4 * 3);
    }
}

TEST_CASE("j count agrees with the subset-then-permutation route") {
    std::mt19937_64 rng(3);
    std::vector<SmallGraph> patterns;
    for (int p = 0; p <= 5; ++p) {
        auto classes = enumerate_graphs(p);
        for (int i = 0; i < 3 && i < static_cast<int>(classes.size()); ++i)
            patterns.push_back(classes[rng() % classes.size()]);
    }
    std::vector<SmallGraph> hosts;
    auto sixes = enumerate_graphs(6);
    for (int i = 0; i < 12; ++i) hosts.push_back(sixes[rng() % sixes.size()]);
    for (const auto& pattern : patterns)
        for (const auto& host : hosts)
            CHECK(j_count(pattern, host) == j_count_by_subsets(pattern, host));
}

TEST_CASE("s relates to strong injections through the automorphism count") {
    std::mt19937_64 rng(8);
    auto hosts = enumerate_graphs(6);
    for (int p = 1; p <= 4; ++p) {
        for (const auto& pattern : enumerate_graphs(p)) {
            const auto& host = hosts[rng() % hosts.size()];
            CHECK(s_count(pattern, host) * static_cast<std::int64_t>(automorphism_count(pattern)) ==
                  strong_injection_count(pattern, host));
        }
    }
}

TEST_CASE("term evaluation") {
    TermSpec degree_sum;
    degree_sum.plus_factors.push_back(named("K_1"));
    CHECK(term_eval(degree_sum, named("C_5")) == 10);

    TermSpec edge_in_nbhd;
    edge_in_nbhd.plus_factors.push_back(named("K_2"));
    CHECK(term_eval(edge_in_nbhd, named("K_3")) == 3);

    TermSpec empty;
    CHECK(term_eval(empty, named("C_5")) == 5);
    CHECK(term_eval(empty, SmallGraph(0)) == 0);

    TermSpec scaled = parse_term_spec("2(n-1) s(K_1,+)");
    CHECK(term_eval(scaled, named("C_5")) == 2 * 4 * 10);

    CHECK(degree_sum.vertex_budget() == 2);
    CHECK(parse_term_spec("s(K_1,+)^2 s(K_2,-)").vertex_budget() == 5);
}

TEST_CASE("term spec parsing") {
    TermSpec t = parse_term_spec("s(K_1,+) s(K_2,-)^2");
    CHECK(t.plus_factors.size() == 1);
    CHECK(t.minus_factors.size() == 2);
    CHECK(t.coefficient == RationalPoly::constant(1));

    TermSpec named_comma = parse_term_spec("s(K_{2,3},+)");
    CHECK(named_comma.plus_factors.at(0).n_vertices() == 5);

    TermSpec nested = parse_term_spec("s(K_5-(P_3 u K_2),-)");
    CHECK(nested.minus_factors.at(0).edge_count() == 7);

    CHECK(parse_term_spec("").plus_factors.empty());
    CHECK_THROWS_AS(parse_term_spec("s(K_1,*)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_term_spec("s(K_1"), std::invalid_argument);
}
