#include "jnorm/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "jnorm/linsolve.hpp"
#include "jnorm/names.hpp"

namespace jnorm {

const CatalogEntry* CatalogAssignment::find(int index) const {
    for (const auto& e : entries)
        if (e.index == index) return &e;
    return nullptr;
}

int CatalogAssignment::index_of(const SmallGraph& canonical_rep) const {
    for (const auto& e : entries)
        if (e.graph == canonical_rep) return e.index;
    return -1;
}

std::string CatalogAssignment::to_golden() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.index << '\t' << emit_graph6(e.graph) << '\t'
           << (e.provenance == Provenance::named_in_text ? "named-in-text"
                                                         : "resolved-by-matching")
           << '\t' << e.name << '\n';
    }
    return os.str();
}

CatalogAssignment CatalogAssignment::from_golden(const std::string& text) {
    CatalogAssignment out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        CatalogEntry e;
        std::string g6, prov;
        ls >> e.index >> g6 >> prov;
        std::getline(ls, e.name);
        if (!e.name.empty() && e.name.front() == '\t') e.name.erase(0, 1);
        while (!e.name.empty() && e.name.front() == ' ') e.name.erase(0, 1);
        e.graph = canonical_representative(parse_graph6(g6));
        e.provenance = prov == "named-in-text" ? Provenance::named_in_text
                                               : Provenance::resolved_by_matching;
        out.entries.push_back(std::move(e));
    }
    return out;
}

std::vector<SmallGraph> catalog_class_pool() {
    std::vector<SmallGraph> pool;
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : enumerate_graphs(n))
            if (!g.has_isolated_vertex()) pool.push_back(g);
    return pool;
}

namespace {

// Right-hand side of a table line as coefficients per canonical class,
// resolved through a partial index -> class map; unresolved indices are
// reported through `unresolved`.
struct LineExpansion {
    const TableLine* line;
    JExpr expansion;  // scale * expand_term(lhs)
};

std::vector<LineExpansion> expand_lines(const std::vector<TableLine>& lines) {
    std::vector<LineExpansion> out;
    out.reserve(lines.size());
    for (const auto& line : lines)
        out.push_back({&line, expand_term(line.lhs).scaled(Rational(line.scale))});
    return out;
}

std::string factor_text(const TermSpec& t) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::vector<SmallGraph>& fs, char side) {
        for (const auto& g : fs) {
            if (!first) os << " ";
            first = false;
            os << "s(" << emit_graph6(g) << "," << side << ")";
        }
    };
    emit(t.minus_factors, '-');
    emit(t.plus_factors, '+');
    if (first) os << "1";
    return os.str();
}

// Exhaustive search for perfect matchings in a small bipartite
// compatibility relation; stops once two are found.
void count_matchings(const std::vector<std::vector<int>>& candidates, size_t level,
                     std::vector<int>& pick, std::vector<bool>& used,
                     std::vector<std::vector<int>>& found) {
    if (found.size() >= 2) return;
    if (level == candidates.size()) {
        found.push_back(pick);
        return;
    }
    for (int c : candidates[level]) {
        if (used[c]) continue;
        used[c] = true;
        pick[level] = c;
        count_matchings(candidates, level + 1, pick, used, found);
        used[c] = false;
    }
}

}  // namespace

CatalogAssignment resolve_catalog(const std::vector<TableLine>& lines) {
    std::vector<SmallGraph> pool = catalog_class_pool();
    if (pool.size() != 33)
        throw std::runtime_error("catalog pool size is not 33");

    auto class_position = [&](const SmallGraph& rep) -> int {
        for (size_t i = 0; i < pool.size(); ++i)
            if (pool[i] == rep) return static_cast<int>(i);
        return -1;
    };

    // Trusted constructions first.
    std::map<int, int> index_to_pos;
    std::vector<bool> taken(pool.size(), false);
    for (const auto& [index, name] : catalog_named_entries()) {
        SmallGraph rep = canonical_representative(named(name));
        int pos = class_position(rep);
        if (pos < 0)
            throw std::runtime_error("named catalog graph outside the class pool: " + name);
        if (taken[pos])
            throw std::runtime_error("two catalog names give the same class: " + name);
        taken[pos] = true;
        index_to_pos[index] = pos;
    }

    // Remaining indices, including the two "+K_2" candidate names, are pinned
    // by matching against the computed expansions.
    std::vector<int> open_indices;
    for (int i = 2; i <= 34; ++i)
        if (!index_to_pos.count(i)) open_indices.push_back(i);
    std::vector<int> open_positions;
    for (size_t p = 0; p < pool.size(); ++p)
        if (!taken[p]) open_positions.push_back(static_cast<int>(p));
    if (open_indices.size() != open_positions.size())
        throw std::runtime_error("catalog bookkeeping mismatch");

    std::vector<LineExpansion> expansions = expand_lines(lines);

    // Sanity-check the trusted part while collecting constraints: a
    // mismatch there means a transcription error, best reported now.
    for (const auto& ex : expansions) {
        for (const auto& [index, want] : ex.line->coeffs) {
            auto it = index_to_pos.find(index);
            if (it == index_to_pos.end()) continue;
            if (ex.expansion.coefficient(pool[it->second]) != want) {
                std::ostringstream os;
                os << "line " << ex.line->id << ": computed coefficient of g_" << index
                   << " is " << ex.expansion.coefficient(pool[it->second]).to_string()
                   << ", table says " << want.to_string();
                throw std::runtime_error(os.str());
            }
        }
    }

    // candidates[k] = open class positions compatible with open_indices[k]
    // across every line.
    std::vector<std::vector<int>> candidates(open_indices.size());
    for (size_t k = 0; k < open_indices.size(); ++k) {
        int index = open_indices[k];
        for (int pos : open_positions) {
            bool ok = true;
            for (const auto& ex : expansions) {
                auto it = ex.line->coeffs.find(index);
                RationalPoly want = it == ex.line->coeffs.end() ? RationalPoly() : it->second;
                if (ex.expansion.coefficient(pool[pos]) != want) {
                    ok = false;
                    break;
                }
            }
            if (ok) candidates[k].push_back(pos);
        }
        if (candidates[k].empty()) {
            std::ostringstream os;
            os << "no class is consistent with catalog index " << index
               << " (transcription error?)";
            throw std::runtime_error(os.str());
        }
    }

    std::vector<int> pick(open_indices.size());
    std::vector<bool> used(pool.size(), false);
    std::vector<std::vector<int>> found;
    count_matchings(candidates, 0, pick, used, found);
    if (found.empty()) throw std::runtime_error("no consistent catalog assignment");
    if (found.size() > 1) throw std::runtime_error("catalog assignment is not unique");

    for (size_t k = 0; k < open_indices.size(); ++k)
        index_to_pos[open_indices[k]] = found[0][k];

    // The two "+K_2" names must agree with their candidate readings.
    for (const auto& [index, name] : catalog_candidate_entries()) {
        SmallGraph rep = canonical_representative(named(name));
        if (pool[index_to_pos[index]] != rep)
            throw std::runtime_error("matched class for index " + std::to_string(index) +
                                     " contradicts the reading of " + name);
    }

    CatalogAssignment out;
    for (const auto& [index, pos] : index_to_pos) {
        CatalogEntry e;
        e.index = index;
        e.graph = pool[pos];
        auto named_it = catalog_named_entries().find(index);
        auto cand_it = catalog_candidate_entries().find(index);
        if (named_it != catalog_named_entries().end()) {
            e.name = named_it->second;
            e.provenance = Provenance::named_in_text;
        } else if (cand_it != catalog_candidate_entries().end()) {
            e.name = cand_it->second;
            e.provenance = Provenance::named_in_text;
        } else {
            e.provenance = Provenance::resolved_by_matching;
        }
        out.entries.push_back(std::move(e));
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.index < b.index; });
    return out;
}

std::vector<LineReport> verify_table(const std::vector<TableLine>& lines,
                                     const CatalogAssignment& assignment) {
    std::vector<LineReport> reports;
    for (const auto& line : lines) {
        LineReport rep;
        rep.id = line.id;
        rep.lhs_text = factor_text(line.lhs);

        JExpr rhs;
        rhs.add_term(SmallGraph(0), line.constant);
        bool resolved = true;
        for (const auto& [index, coeff] : line.coeffs) {
            const CatalogEntry* e = assignment.find(index);
            if (e == nullptr) {
                rep.detail = "unassigned catalog index " + std::to_string(index);
                resolved = false;
                break;
            }
            rhs.add_term(e->graph, coeff);
        }
        if (!resolved) {
            rep.pass = false;
            reports.push_back(std::move(rep));
            continue;
        }

        JExpr lhs = expand_term(line.lhs).scaled(Rational(line.scale));
        rep.pass = lhs == rhs;
        if (!rep.pass) {
            std::ostringstream os;
            JExpr diff = lhs - rhs;
            os << "difference (computed - table): ";
            for (const auto& [g, c] : diff.terms())
                os << "[" << emit_graph6(g) << "] " << c.to_string() << "; ";
            rep.detail = os.str();
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

JExpr verify_identity_symbolic(const IdentitySpec& identity) {
    JExpr total;
    for (const auto& term : identity) total = total + expand_term(term);
    return total;
}

SmallGraph random_graph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1u) g.add_edge(u, v);
    return g;
}

NumericReport verify_identity_numeric(const IdentitySpec& identity, int max_n,
                                      int random_count, std::uint64_t seed, int jobs) {
    std::vector<SmallGraph> hosts;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& g : enumerate_graphs(n)) hosts.push_back(g);
    for (int i = 0; i < random_count; ++i)
        hosts.push_back(random_graph(kMaxVertices, seed + static_cast<std::uint64_t>(i)));

    NumericReport report;
    report.hosts_checked = static_cast<long>(hosts.size());
    if (jobs < 1) jobs = 1;
    std::vector<std::vector<std::string>> failures(jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            for (size_t i = w; i < hosts.size(); i += static_cast<size_t>(jobs)) {
                if (identity_lhs_eval(hosts[i], identity) != 0)
                    failures[w].push_back(emit_graph6(hosts[i]));
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& fs : failures)
        report.failures.insert(report.failures.end(), fs.begin(), fs.end());
    std::sort(report.failures.begin(), report.failures.end());
    report.nonzero = static_cast<long>(report.failures.size());
    return report;
}

JExpr fit_coefficients(const TermSpec& t, int max_graph_size, int degree_bound,
                       std::uint64_t seed) {
    const int budget = t.vertex_budget();

    // Unknowns: one coefficient per (isolated-vertex-free class on <= budget
    // vertices, power of n up to degree_bound).
    std::vector<SmallGraph> classes;
    classes.push_back(SmallGraph(0));
    for (int n = 2; n <= budget; ++n)
        for (const auto& g : enumerate_graphs(n))
            if (!g.has_isolated_vertex()) classes.push_back(g);

    const int degrees = degree_bound + 1;
    const int unknowns = static_cast<int>(classes.size()) * degrees;

    std::vector<SmallGraph> hosts;
    for (int n = 0; n <= max_graph_size; ++n)
        for (const auto& g : enumerate_graphs(n)) hosts.push_back(g);
    // Random hosts on 9..12 vertices over-determine the system; ten is the
    // floor, more are added when the unknown count calls for it.
    int random_hosts = std::max(10, unknowns - static_cast<int>(hosts.size()) + 25);
    for (int i = 0; i < random_hosts; ++i)
        hosts.push_back(random_graph(9 + i % 4, seed + static_cast<std::uint64_t>(i)));

    std::vector<std::vector<Integer>> a;
    std::vector<Rational> b;
    a.reserve(hosts.size());
    for (const auto& host : hosts) {
        std::vector<Integer> row;
        row.reserve(unknowns);
        Integer n(host.n_vertices());
        for (const auto& cls : classes) {
            Integer base(j_count(cls, host));
            Integer power(1);
            for (int d = 0; d < degrees; ++d) {
                row.push_back(base * power);
                power *= n;
            }
        }
        a.push_back(std::move(row));
        b.push_back(term_eval(t, host));
    }

    LinearSolveResult solved = solve_exact(a, b);
    if (solved.status == SolveStatus::underdetermined)
        throw std::runtime_error("fit system is underdetermined; increase max_graph_size");
    if (solved.status == SolveStatus::inconsistent)
        throw std::runtime_error("fit system is inconsistent (bug signal)");

    JExpr result;
    for (size_t c = 0; c < classes.size(); ++c) {
        std::vector<Rational> coeffs(solved.solution.begin() + c * degrees,
                                     solved.solution.begin() + (c + 1) * degrees);
        result.add_term(classes[c], RationalPoly(std::move(coeffs)));
    }

    // Residuals on held-out random graphs must vanish exactly.
    for (int i = 0; i < 20; ++i) {
        SmallGraph host = random_graph(9 + i % 4, seed + 1000 + static_cast<std::uint64_t>(i));
        if (jexpr_eval(result, host) != term_eval(t, host))
            throw std::runtime_error("fit residual nonzero on held-out graph");
    }
    return result;
}

}  // namespace jnorm
