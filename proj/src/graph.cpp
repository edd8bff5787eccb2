#include "jnorm/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace jnorm {

SmallGraph::SmallGraph(int n) : n_(n), rows_{} {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
}

SmallGraph::SmallGraph(int n, const std::vector<std::pair<int, int>>& edges) : SmallGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void SmallGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
}

void SmallGraph::remove_edge(int u, int v) {
    rows_[u] &= static_cast<VertexMask>(~bit(v));
    rows_[v] &= static_cast<VertexMask>(~bit(u));
}

void SmallGraph::toggle_edge(int u, int v) {
    rows_[u] ^= bit(v);
    rows_[v] ^= bit(u);
}

int SmallGraph::degree(int v) const { return std::popcount(rows_[v]); }

int SmallGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool SmallGraph::has_isolated_vertex() const { return first_isolated_vertex() >= 0; }

int SmallGraph::first_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
        if (rows_[v] == 0) return v;
    return -1;
}

SmallGraph SmallGraph::induced(VertexMask mask) const {
    std::array<int, kMaxVertices> pos{};
    int k = 0;
    for (int v = 0; v < n_; ++v)
        if (mask & bit(v)) pos[v] = k++;
    SmallGraph out(k);
    for (int u = 0; u < n_; ++u) {
        if (!(mask & bit(u))) continue;
        VertexMask nb = static_cast<VertexMask>(rows_[u] & mask);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= static_cast<VertexMask>(nb - 1);
            if (v > u) out.add_edge(pos[u], pos[v]);
        }
    }
    return out;
}

SmallGraph SmallGraph::without_vertex(int v) const {
    return induced(static_cast<VertexMask>(full_mask(n_) & ~bit(v)));
}

SmallGraph SmallGraph::with_apex(VertexMask mask) const {
    SmallGraph out(n_ + 1);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.add_edge(u, v);
    for (int u = 0; u < n_; ++u)
        if (mask & bit(u)) out.add_edge(u, n_);
    return out;
}

SmallGraph SmallGraph::relabeled(const std::array<int, kMaxVertices>& perm) const {
    // perm[i] = old vertex placed at new position i.
    SmallGraph out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(perm[i], perm[j])) out.add_edge(i, j);
    return out;
}

ColoredGraph::ColoredGraph(SmallGraph g, VertexMask b) : graph(std::move(g)), blue(b) {
    if (blue & ~full_mask(graph.n_vertices()))
        throw std::invalid_argument("blue set not contained in vertex set");
}

namespace {

// Canonical search over all permutations. Position i's level value combines
// the color bit (compared first) with the adjacency bits toward positions
// 0..i-1. Branches whose level value exceeds the best are pruned; a strictly
// smaller value resets the best and the attainment count. At the end the
// count equals the number of permutations attaining the minimum, i.e. |Aut|.
struct CanonSearch {
    int n;
    const SmallGraph* g;
    VertexMask blue;
    std::array<std::uint32_t, kMaxVertices> best{};
    std::array<int, kMaxVertices> perm{}, best_perm{};
    std::uint64_t count = 0;
    static constexpr std::uint32_t kUnset = 0xffffffffu;

    void run() {
        best.fill(kUnset);
        VertexMask used = 0;
        descend(0, used);
    }

    void descend(int level, VertexMask& used) {
        if (level == n) {
            ++count;
            best_perm = perm;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & bit(v)) continue;
            std::uint32_t value = (blue & bit(v)) ? (1u << kMaxVertices) : 0u;
            VertexMask r = g->row(v);
            for (int i = 0; i < level; ++i)
                if (r & bit(perm[i])) value |= (1u << i);
            if (value > best[level]) continue;
            if (value < best[level]) {
                best[level] = value;
                for (int k = level + 1; k < n; ++k) best[k] = kUnset;
                count = 0;
            }
            perm[level] = v;
            used |= bit(v);
            descend(level + 1, used);
            used &= static_cast<VertexMask>(~bit(v));
        }
    }

    // Key bytes: vertex count, blue count, then per-level (color, row) values
    // packed as the canonical blue mask plus the triangle bit string.
    CanonicalKey key(bool colored) const {
        std::string bytes;
        bytes.push_back(static_cast<char>(n));
        if (colored) {
            VertexMask cblue = 0;
            for (int i = 0; i < n; ++i)
                if (best[i] & (1u << kMaxVertices)) cblue |= bit(i);
            bytes.push_back(static_cast<char>(cblue & 0xff));
            bytes.push_back(static_cast<char>(cblue >> 8));
        }
        int bitpos = 0;
        char cur = 0;
        auto push_bit = [&](bool b) {
            cur = static_cast<char>(cur | ((b ? 1 : 0) << bitpos));
            if (++bitpos == 8) {
                bytes.push_back(cur);
                cur = 0;
                bitpos = 0;
            }
        };
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) push_bit((best[j] >> i) & 1u);
        if (bitpos) bytes.push_back(cur);
        return CanonicalKey{std::move(bytes)};
    }
};

CanonSearch search(const SmallGraph& g, VertexMask blue) {
    if (g.n_vertices() > kMaxVertices)
        throw std::invalid_argument("graph too large for canonical search");
    CanonSearch s;
    s.n = g.n_vertices();
    s.g = &g;
    s.blue = blue;
    s.run();
    return s;
}

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
    CanonSearch s = search(g, 0);
    return CanonicalForm{s.key(false), s.count};
}

CanonicalForm canonical_form(const ColoredGraph& g) {
    CanonSearch s = search(g.graph, g.blue);
    return CanonicalForm{s.key(true), s.count};
}

SmallGraph canonical_representative(const SmallGraph& g) {
    CanonSearch s = search(g, 0);
    std::array<int, kMaxVertices> perm{};
    for (int i = 0; i < s.n; ++i) perm[i] = s.best_perm[i];
    return g.relabeled(perm);
}

ColoredGraph canonical_representative(const ColoredGraph& g) {
    CanonSearch s = search(g.graph, g.blue);
    std::array<int, kMaxVertices> perm{};
    VertexMask cblue = 0;
    for (int i = 0; i < s.n; ++i) {
        perm[i] = s.best_perm[i];
        if (g.blue & bit(s.best_perm[i])) cblue |= bit(i);
    }
    return ColoredGraph(g.graph.relabeled(perm), cblue);
}

std::uint64_t automorphism_count(const SmallGraph& g) { return canonical_form(g).automorphism_count; }

std::uint64_t automorphism_count(const ColoredGraph& g) { return canonical_form(g).automorphism_count; }

SmallGraph neighborhood(const SmallGraph& g, int v, Side side) {
    if (v < 0 || v >= g.n_vertices()) throw std::invalid_argument("vertex out of range");
    VertexMask mask;
    if (side == Side::plus) {
        mask = g.row(v);
    } else {
        mask = static_cast<VertexMask>(full_mask(g.n_vertices()) & ~(g.row(v) | bit(v)));
    }
    return g.induced(mask);
}

std::string emit_graph6(const SmallGraph& g) {
    int n = g.n_vertices();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

SmallGraph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty graph6 line");
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6 byte out of range 63..126");
    int n = s[0] - 63;
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6 vertex count over bound: " + std::to_string(n));
    int nbits = n * (n - 1) / 2;
    int ngroups = (nbits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + ngroups)
        throw std::invalid_argument("graph6 line has wrong length");
    SmallGraph g(n);
    int pos = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            int group = s[1 + pos / 6] - 63;
            int b = (group >> (5 - pos % 6)) & 1;
            if (b) g.add_edge(i, j);
            ++pos;
        }
    }
    // Padding bits must be zero.
    for (int p = nbits; p < 6 * ngroups; ++p) {
        int group = s[1 + p / 6] - 63;
        if ((group >> (5 - p % 6)) & 1)
            throw std::invalid_argument("graph6 nonzero padding bits");
    }
    return g;
}

std::vector<SmallGraph> enumerate_graphs(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("enumeration bound is 8 vertices");
    if (n <= 6) {
        std::map<CanonicalKey, SmallGraph> classes;
        int slots = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
            SmallGraph g(n);
            for (int s = 0; s < slots; ++s)
                if ((mask >> s) & 1u) g.add_edge(pairs[s].first, pairs[s].second);
            auto cf = canonical_form(g);
            classes.emplace(cf.key, canonical_representative(g));
        }
        std::vector<SmallGraph> out;
        out.reserve(classes.size());
        for (auto& [k, g] : classes) out.push_back(g);
        return out;
    }
    // Extend every class on n-1 vertices by one vertex with every possible
    // neighborhood, then dedup.
    std::vector<SmallGraph> smaller = enumerate_graphs(n - 1);
    std::map<CanonicalKey, SmallGraph> classes;
    for (const SmallGraph& g : smaller) {
        for (VertexMask nb = 0; nb <= full_mask(n - 1); ++nb) {
            SmallGraph ext = g.with_apex(nb);
            auto cf = canonical_form(ext);
            classes.emplace(cf.key, canonical_representative(ext));
        }
    }
    std::vector<SmallGraph> out;
    out.reserve(classes.size());
    for (auto& [k, g] : classes) out.push_back(g);
    return out;
}

}  // namespace jnorm
