#include "jnorm/counting.hpp"

#include <bit>
#include <map>

namespace jnorm {

namespace {

// Iterates size-k subsets of {0..n-1} as masks in increasing value.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
    if (k > n) return;
    VertexMask mask = full_mask(k);
    VertexMask limit = full_mask(n);
    while (true) {
        f(mask);
        if (k == 0) return;
        // Gosper's hack: next mask with the same popcount.
        VertexMask c = static_cast<VertexMask>(mask & -mask);
        VertexMask r = static_cast<VertexMask>(mask + c);
        if (r > limit || r == 0) return;
        mask = static_cast<VertexMask>(r | (((mask ^ r) >> 2) / c));
    }
}

}  // namespace

std::int64_t s_count(const SmallGraph& pattern, const SmallGraph& host) {
    int p = pattern.n_vertices();
    if (p > host.n_vertices()) return 0;
    CanonicalKey want = canonical_form(pattern).key;
    std::int64_t total = 0;
    for_each_subset(host.n_vertices(), p, [&](VertexMask mask) {
        if (canonical_form(host.induced(mask)).key == want) ++total;
    });
    return total;
}

std::int64_t j_count(const SmallGraph& pattern, const SmallGraph& host) {
    int p = pattern.n_vertices();
    int n = host.n_vertices();
    if (p > n) return 0;
    auto pedges = pattern.edges();
    std::array<int, kMaxVertices> image{};
    VertexMask used = 0;
    std::int64_t total = 0;
    // Depth-first over injections, tracking the sign incrementally: each
    // pattern edge whose endpoints are both placed flips the sign when it
    // lands on a host non-edge.
    auto rec = [&](auto&& self, int level, int sign) -> void {
        if (level == p) {
            total += sign;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & bit(v)) continue;
            int s = sign;
            for (auto [a, b] : pedges) {
                int other = -1;
                if (a == level && b < level) other = b;
                else if (b == level && a < level) other = a;
                if (other >= 0 && !host.has_edge(image[other], v)) s = -s;
            }
            image[level] = v;
            used |= bit(v);
            self(self, level + 1, s);
            used &= static_cast<VertexMask>(~bit(v));
        }
    };
    rec(rec, 0, 1);
    return total;
}

int TermSpec::vertex_budget() const {
    int total = 1;
    for (const auto& g : minus_factors) total += g.n_vertices();
    for (const auto& g : plus_factors) total += g.n_vertices();
    return total;
}

namespace {

// Per-host scratch: s-counts keyed by (side, pattern class), so repeated
// factors across terms are counted once.
struct NeighborhoodCounts {
    const SmallGraph* host;
    int v;
    SmallGraph plus, minus;
    std::map<CanonicalKey, std::int64_t> cache_plus, cache_minus;

    NeighborhoodCounts(const SmallGraph& h, int vertex)
        : host(&h),
          v(vertex),
          plus(neighborhood(h, vertex, Side::plus)),
          minus(neighborhood(h, vertex, Side::minus)) {}

    std::int64_t count(const SmallGraph& pattern, Side side) {
        auto& cache = side == Side::plus ? cache_plus : cache_minus;
        CanonicalKey key = canonical_form(pattern).key;
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::int64_t c = s_count(pattern, side == Side::plus ? plus : minus);
        cache.emplace(std::move(key), c);
        return c;
    }
};

Integer term_vertex_sum(const TermSpec& term, const SmallGraph& host,
                        std::vector<NeighborhoodCounts>& scratch) {
    Integer sum = 0;
    for (auto& nc : scratch) {
        Integer prod = 1;
        for (const auto& j : term.minus_factors) {
            prod *= nc.count(j, Side::minus);
            if (prod == 0) break;
        }
        if (prod != 0) {
            for (const auto& j : term.plus_factors) {
                prod *= nc.count(j, Side::plus);
                if (prod == 0) break;
            }
        }
        sum += prod;
    }
    return sum;
}

}  // namespace

Rational term_eval(const TermSpec& term, const SmallGraph& host) {
    std::vector<NeighborhoodCounts> scratch;
    scratch.reserve(host.n_vertices());
    for (int v = 0; v < host.n_vertices(); ++v) scratch.emplace_back(host, v);
    return term.coefficient.eval(host.n_vertices()) * term_vertex_sum(term, host, scratch);
}

Rational identity_lhs_eval(const SmallGraph& host, const std::vector<TermSpec>& terms) {
    std::vector<NeighborhoodCounts> scratch;
    scratch.reserve(host.n_vertices());
    for (int v = 0; v < host.n_vertices(); ++v) scratch.emplace_back(host, v);
    Rational total(0);
    Integer n(host.n_vertices());
    for (const auto& term : terms)
        total += term.coefficient.eval(n) * term_vertex_sum(term, host, scratch);
    return total;
}

}  // namespace jnorm
