#include "jnorm/symbolic.hpp"

#include <bit>
#include <stdexcept>

#include <json.hpp>

namespace jnorm {

void JExpr::add_term(const SmallGraph& g, const RationalPoly& coeff) {
    if (coeff.is_zero()) return;
    SmallGraph rep = canonical_representative(g);
    auto [it, inserted] = terms_.try_emplace(std::move(rep), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RationalPoly JExpr::coefficient(const SmallGraph& g) const {
    auto it = terms_.find(canonical_representative(g));
    return it == terms_.end() ? RationalPoly() : it->second;
}

JExpr JExpr::operator+(const JExpr& o) const {
    if (ambient_ != o.ambient_) throw std::invalid_argument("ambient mismatch");
    JExpr out = *this;
    for (const auto& [g, c] : o.terms_) out.add_term(g, c);
    return out;
}

JExpr JExpr::operator-(const JExpr& o) const { return *this + o.scaled(Rational(-1)); }

JExpr JExpr::scaled(const Rational& c) const { return scaled(RationalPoly(c)); }

JExpr JExpr::scaled(const RationalPoly& p) const {
    JExpr out(ambient_);
    if (p.is_zero()) return out;
    for (const auto& [g, c] : terms_) out.terms_.emplace(g, c * p);
    return out;
}

KExpr KExpr::identity(int ambient) {
    KExpr e(ambient);
    e.add_term(ColoredGraph(SmallGraph(0), 0), RationalPoly::constant(1));
    return e;
}

void KExpr::add_term(const ColoredGraph& g, const RationalPoly& coeff) {
    if (coeff.is_zero()) return;
    ColoredGraph rep = canonical_representative(g);
    auto [it, inserted] = terms_.try_emplace(std::move(rep), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RationalPoly KExpr::coefficient(const ColoredGraph& g) const {
    auto it = terms_.find(canonical_representative(g));
    return it == terms_.end() ? RationalPoly() : it->second;
}

namespace {

// Iterates size-k subsets of {0..n-1} in increasing value order.
template <typename F>
void subsets_of_size(int n, int k, F&& f) {
    if (k > n) return;
    VertexMask mask = full_mask(k);
    VertexMask limit = full_mask(n);
    while (true) {
        f(mask);
        if (k == 0) return;
        VertexMask c = static_cast<VertexMask>(mask & (~mask + 1u));
        VertexMask r = static_cast<VertexMask>(mask + c);
        if (r > limit || r == 0) return;
        mask = static_cast<VertexMask>(r | (((mask ^ r) >> 2) / c));
    }
}

// All gluings of (g1, blue1) with (g2, blue2): for each subset I of V(g1),
// each injection of I into V(g2), the identified graph with doubled edges
// cancelled and mark parity combined. Subsets run in increasing size,
// injections in lexicographic order.
template <typename Emit>
void glue_all(const SmallGraph& g1, VertexMask blue1, const SmallGraph& g2, VertexMask blue2,
              Emit&& emit) {
    int n1 = g1.n_vertices();
    int n2 = g2.n_vertices();
    auto edges1 = g1.edges();

    std::array<int, kMaxVertices> members{};   // vertices of I, ascending
    std::array<int, kMaxVertices> lambda{};    // image of members[i] in g2
    for (int k = 0; k <= std::min(n1, n2); ++k) {
        subsets_of_size(n1, k, [&](VertexMask imask) {
            int m = 0;
            for (int v = 0; v < n1; ++v)
                if (imask & bit(v)) members[m++] = v;

            std::array<int, kMaxVertices> pos{};  // g1 vertex -> glued position
            int fresh = n2;
            for (int v = 0; v < n1; ++v)
                if (!(imask & bit(v))) pos[v] = fresh++;

            VertexMask used = 0;
            auto rec = [&](auto&& self, int level) -> void {
                if (level == k) {
                    SmallGraph glued(n2 + n1 - k);
                    for (auto [u, v] : g2.edges()) glued.add_edge(u, v);
                    for (int i = 0; i < k; ++i) pos[members[i]] = lambda[i];
                    for (auto [u, v] : edges1) glued.toggle_edge(pos[u], pos[v]);
                    VertexMask nb = blue2;
                    for (int v = 0; v < n1; ++v)
                        if (blue1 & bit(v)) nb ^= bit(pos[v]);
                    emit(glued, nb);
                    return;
                }
                for (int t = 0; t < n2; ++t) {
                    if (used & bit(t)) continue;
                    lambda[level] = t;
                    used |= bit(t);
                    self(self, level + 1);
                    used &= static_cast<VertexMask>(~bit(t));
                }
            };
            rec(rec, 0);
        });
    }
}

}  // namespace

JExpr j_mul(const JExpr& a, const JExpr& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
    JExpr out(a.ambient());
    for (const auto& [g1, c1] : a.terms()) {
        for (const auto& [g2, c2] : b.terms()) {
            RationalPoly c = c1 * c2;
            glue_all(g1, 0, g2, 0,
                     [&](const SmallGraph& glued, VertexMask) { out.add_term(glued, c); });
        }
    }
    return out;
}

KExpr k_mul(const KExpr& a, const KExpr& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
    KExpr out(a.ambient());
    for (const auto& [g1, c1] : a.terms()) {
        for (const auto& [g2, c2] : b.terms()) {
            RationalPoly c = c1 * c2;
            glue_all(g1.graph, g1.blue, g2.graph, g2.blue,
                     [&](const SmallGraph& glued, VertexMask nb) {
                         out.add_term(ColoredGraph(glued, nb), c);
                     });
        }
    }
    return out;
}

JExpr reduce_isolated(const JExpr& e, const RationalPoly& ambient_size) {
    JExpr out(e.ambient());
    for (const auto& [g0, c0] : e.terms()) {
        SmallGraph g = g0;
        RationalPoly c = c0;
        for (int v = g.first_isolated_vertex(); v >= 0; v = g.first_isolated_vertex()) {
            c *= ambient_size - RationalPoly::constant(g.n_vertices() - 1);
            g = g.without_vertex(v);
        }
        out.add_term(g, c);
    }
    return out;
}

namespace {

KExpr expand_side(const SmallGraph& j, bool outside) {
    int p = j.n_vertices();
    if (p > 5) throw std::invalid_argument("expansion factor over the 5-vertex bound");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v) slots.emplace_back(u, v);
    int nslots = static_cast<int>(slots.size());

    Rational denom = Rational(1);
    for (int t = 0; t < nslots + p; ++t) denom *= 2;
    denom *= Rational(static_cast<long>(automorphism_count(j)));

    KExpr out;
    for (std::uint32_t emask = 0; emask < (1u << nslots); ++emask) {
        SmallGraph h(p);
        int extra = 0;  // edges chosen outside E(j)
        for (int t = 0; t < nslots; ++t) {
            if (!((emask >> t) & 1u)) continue;
            auto [u, v] = slots[t];
            h.add_edge(u, v);
            if (!j.has_edge(u, v)) ++extra;
        }
        for (VertexMask vmask = 0; vmask <= full_mask(p); ++vmask) {
            int sign = extra + (outside ? std::popcount(vmask) : 0);
            Rational coeff = (sign % 2 == 0 ? Rational(1) : Rational(-1)) / denom;
            out.add_term(ColoredGraph(h, vmask), RationalPoly(coeff));
            if (p == 0) break;
        }
    }
    return out;
}

}  // namespace

KExpr expand_plus(const SmallGraph& j) { return expand_side(j, false); }

KExpr expand_minus(const SmallGraph& j) { return expand_side(j, true); }

JExpr apex_close(const KExpr& e) {
    JExpr out(e.ambient() - 1);
    for (const auto& [g, c] : e.terms()) out.add_term(g.graph.with_apex(g.blue), c);
    return out;
}

JExpr expand_term(const TermSpec& t) {
    KExpr acc = KExpr::identity();
    for (const auto& f : t.minus_factors) acc = k_mul(acc, expand_minus(f));
    for (const auto& f : t.plus_factors) acc = k_mul(acc, expand_plus(f));
    JExpr closed = apex_close(acc);
    return reduce_isolated(closed).scaled(t.coefficient);
}

Rational jexpr_eval(const JExpr& e, const SmallGraph& host) {
    Rational total(0);
    Integer n(host.n_vertices());
    for (const auto& [g, c] : e.terms()) total += c.eval(n) * j_count(g, host);
    return total;
}

std::string jexpr_to_json(const JExpr& e) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [g, c] : e.terms()) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& x : c.coefficients()) coeffs.push_back(to_string(x));
        obj[emit_graph6(g)] = std::move(coeffs);
    }
    return obj.dump();
}

JExpr jexpr_from_json(const std::string& text) {
    nlohmann::json obj = nlohmann::json::parse(text);
    JExpr e;
    for (auto& [g6, coeffs] : obj.items()) {
        std::vector<Rational> c;
        for (const auto& item : coeffs) c.push_back(rational_from_string(item.get<std::string>()));
        e.add_term(parse_graph6(g6), RationalPoly(std::move(c)));
    }
    return e;
}

}  // namespace jnorm
