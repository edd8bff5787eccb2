#ifndef JNORM_GRAPH_HPP
#define JNORM_GRAPH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace jnorm {

// Hard cap on vertex counts. Expansion graphs stay at <= 6 vertices; test
// hosts go up to 12, where brute-force counting is still fine.
inline constexpr int kMaxVertices = 12;

using VertexMask = std::uint16_t;

inline VertexMask bit(int v) { return static_cast<VertexMask>(1u << v); }
inline VertexMask full_mask(int n) { return static_cast<VertexMask>((1u << n) - 1u); }

// Labeled undirected graph on at most kMaxVertices vertices, no self-loops.
// Adjacency is stored as one bit row per vertex; rows stay symmetric.
// Immutable in spirit: operations return new graphs.
class SmallGraph {
public:
    SmallGraph() : n_(0), rows_{} {}
    explicit SmallGraph(int n);
    SmallGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int n_vertices() const { return n_; }
    bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1u; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);
    VertexMask row(int v) const { return rows_[v]; }
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool has_isolated_vertex() const;
    int first_isolated_vertex() const;  // -1 if none

    // Subgraph induced by the vertices in mask, relabeled 0..k-1 in
    // ascending original label order.
    SmallGraph induced(VertexMask mask) const;
    // Graph with vertex v deleted, remaining labels compacted.
    SmallGraph without_vertex(int v) const;
    // Graph extended by one vertex adjacent exactly to the vertices in mask.
    SmallGraph with_apex(VertexMask mask) const;

    SmallGraph relabeled(const std::array<int, kMaxVertices>& perm) const;

    // Total order on labeled graphs (vertex count, then rows); used for maps.
    auto operator<=>(const SmallGraph& o) const = default;

private:
    int n_;
    std::array<VertexMask, kMaxVertices> rows_;
};

// SmallGraph with a distinguished "blue" vertex subset. Isomorphism is
// color-preserving.
struct ColoredGraph {
    SmallGraph graph;
    VertexMask blue = 0;

    ColoredGraph() = default;
    ColoredGraph(SmallGraph g, VertexMask b);

    auto operator<=>(const ColoredGraph& o) const = default;
};

// Byte sequence identifying an isomorphism class; equal keys iff isomorphic
// (color-preserving for colored graphs).
struct CanonicalKey {
    std::string bytes;
    auto operator<=>(const CanonicalKey& o) const = default;
};

struct CanonicalForm {
    CanonicalKey key;
    std::uint64_t automorphism_count = 0;
};

// Lexicographically least relabeling over all n! permutations (color bits
// compared before adjacency bits for colored graphs), found by prefix-pruned
// search; automorphism_count is the number of permutations attaining it,
// which by orbit-stabilizer equals |Aut|.
CanonicalForm canonical_form(const SmallGraph& g);
CanonicalForm canonical_form(const ColoredGraph& g);

// The canonical representative itself (relabeled graph attaining the key).
SmallGraph canonical_representative(const SmallGraph& g);
ColoredGraph canonical_representative(const ColoredGraph& g);

std::uint64_t automorphism_count(const SmallGraph& g);
std::uint64_t automorphism_count(const ColoredGraph& g);

enum class Side { plus, minus };

// G_v^+ : subgraph induced by the neighbors of v.
// G_v^- : subgraph induced by the vertices other than v not adjacent to v.
SmallGraph neighborhood(const SmallGraph& g, int v, Side side);

// graph6 line format: byte 63+n, then the upper triangle read column by
// column (x(1,0), x(2,0), x(2,1), x(3,0), ...) as a bit string padded with
// zeros to a multiple of 6, each 6-bit group encoded as value+63.
std::string emit_graph6(const SmallGraph& g);
SmallGraph parse_graph6(const std::string& line);

// One canonical representative per isomorphism class, sorted by canonical
// key. n <= 8: edge-subset sweep through n = 6, vertex extension above.
std::vector<SmallGraph> enumerate_graphs(int n);

}  // namespace jnorm

#endif
