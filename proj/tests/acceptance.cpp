// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected total runtime is a few minutes, dominated by the
// brute-force numeric sweep.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "jnorm/names.hpp"
#include "jnorm/parse.hpp"
#include "jnorm/verify.hpp"

using namespace jnorm;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& extra = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!extra.empty()) std::cout << " [" << extra << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::string elapsed() const {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1fs", static_cast<double>(ms) / 1000.0);
        return buf;
    }
};

std::vector<SmallGraph> hosts_up_to(int max_n) {
    std::vector<SmallGraph> hosts;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& g : enumerate_graphs(n)) hosts.push_back(g);
    return hosts;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::uint64_t labeled_copy_count(const SmallGraph& g) {
    int n = g.n_vertices();
    std::array<int, kMaxVertices> p{};
    for (int i = 0; i < n; ++i) p[i] = i;
    std::set<SmallGraph> seen;
    do {
        seen.insert(g.relabeled(p));
    } while (std::next_permutation(p.begin(), p.begin() + n));
    return seen.size();
}

}  // namespace

int main() {
    const std::string data_dir = default_data_dir();
    const std::vector<TableLine> table = load_table(data_dir + "/table.json");
    const IdentitySpec identity = load_identity(data_dir + "/identity.json");

    // Criterion 1: every tabulated expansion reproduced exactly.
    {
        Timer t;
        CatalogAssignment assignment = resolve_catalog(table);
        auto reports = verify_table(table, assignment);
        int bad = 0;
        for (const auto& rep : reports) {
            if (!rep.pass) {
                ++bad;
                std::cout << "  line " << rep.id << " FAILED: " << rep.detail << "\n";
            }
        }
        std::ostringstream os;
        os << (reports.size() - bad) << "/" << reports.size() << " lines, " << t.elapsed();
        report(1, "table reproduction, exact coefficient equality", bad == 0, os.str());
    }

    // Criterion 2: the identity cancels symbolically.
    {
        Timer t;
        JExpr total = verify_identity_symbolic(identity);
        report(2, "identity expansion sums to the empty expression", total.is_zero(),
               std::to_string(total.term_count()) + " residual terms, " + t.elapsed());
    }

    // Criterion 3: brute-force zero on every host with at most 7 vertices
    // plus 50 seeded random 12-vertex graphs; the symbolic engine is not
    // consulted anywhere on this path.
    {
        Timer t;
        NumericReport rep = verify_identity_numeric(identity, 7, 50, 20260809, 4);
        std::ostringstream os;
        os << rep.hosts_checked << " hosts, " << rep.nonzero << " nonzero, " << t.elapsed();
        report(3, "identity evaluates to zero by direct counting", rep.nonzero == 0, os.str());
    }

    // Criterion 4: oracle equivalence of the expansion engine against brute
    // force for every table term on every host with at most 6 vertices.
    {
        Timer t;
        auto hosts = hosts_up_to(6);
        // Signed injection counts are shared across lines.
        std::map<std::pair<std::string, int>, Rational> cache;
        bool ok = true;
        long checked = 0;
        for (const auto& line : table) {
            JExpr e = expand_term(line.lhs);
            for (size_t h = 0; h < hosts.size() && ok; ++h) {
                Rational lhs(0);
                Integer n(hosts[h].n_vertices());
                for (const auto& [g, c] : e.terms()) {
                    auto key = std::make_pair(emit_graph6(g), static_cast<int>(h));
                    auto it = cache.find(key);
                    if (it == cache.end())
                        it = cache.emplace(key, Rational(j_count(g, hosts[h]))).first;
                    lhs += c.eval(n) * it->second;
                }
                if (lhs != term_eval(line.lhs, hosts[h])) {
                    ok = false;
                    std::cout << "  line " << line.id << " disagrees on "
                              << emit_graph6(hosts[h]) << "\n";
                }
                ++checked;
            }
        }
        std::ostringstream os;
        os << checked << " (line, host) pairs, " << t.elapsed();
        report(4, "expansion agrees with brute force on all hosts up to 6 vertices", ok, os.str());
    }

    // Criterion 5: the linear-fitting route reproduces the expansion for the
    // three single-factor lines and one product line.
    {
        Timer t;
        bool ok = true;
        std::ostringstream os;
        for (const char* spec : {"s(K_1,+)", "s(K_2,+)", "s(P_3,-)", "s(K_1,+) s(K_2,-)"}) {
            TermSpec term = parse_term_spec(spec);
            try {
                bool agree = fit_coefficients(term, 6, 6) == expand_term(term);
                ok = ok && agree;
                if (!agree) std::cout << "  fit disagrees for " << spec << "\n";
            } catch (const std::exception& e) {
                ok = false;
                std::cout << "  fit failed for " << spec << ": " << e.what() << "\n";
            }
        }
        os << "4 term specs, " << t.elapsed();
        report(5, "exact linear fit matches the expansion engine", ok, os.str());
    }

    // Criterion 6: unique catalog resolution, byte-stable against the golden.
    {
        Timer t;
        bool ok = true;
        std::string detail;
        try {
            CatalogAssignment a = resolve_catalog(table);
            CatalogAssignment b = resolve_catalog(table);
            if (a.to_golden() != b.to_golden()) {
                ok = false;
                detail = "re-resolution differs";
            }
            std::ifstream in(std::string(JNORM_GOLDEN_DIR) + "/catalog.golden");
            std::stringstream buffer;
            buffer << in.rdbuf();
            if (!in.good() || buffer.str() != a.to_golden()) {
                ok = false;
                detail = "golden file missing or stale";
            }
            for (int i : {14, 17, 18, 19, 21, 22, 26})
                if (a.find(i) == nullptr || a.find(i)->provenance != Provenance::resolved_by_matching)
                    ok = false;
            if (a.find(15)->graph != canonical_representative(named("K_{1,4}+K_2"))) ok = false;
            if (a.find(28)->graph != canonical_representative(named("C_5+K_2"))) ok = false;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        report(6, "catalog resolution is unique and stable", ok,
               detail.empty() ? t.elapsed() : detail);
    }

    // Criterion 7: structural property suites.
    {
        Timer t;
        bool ok = true;

        // Product vertex bounds.
        for (int p1 = 1; p1 <= 3 && ok; ++p1) {
            for (int p2 = 1; p2 <= 3 && ok; ++p2) {
                for (const auto& g1 : enumerate_graphs(p1)) {
                    for (const auto& g2 : enumerate_graphs(p2)) {
                        JExpr a, b;
                        a.add_term(g1, RationalPoly::constant(1));
                        b.add_term(g2, RationalPoly::constant(1));
                        for (const auto& [g, c] : j_mul(a, b).terms())
                            if (g.n_vertices() > p1 + p2) ok = false;
                        KExpr ka, kb;
                        ka.add_term(ColoredGraph(g1, 1), RationalPoly::constant(1));
                        kb.add_term(ColoredGraph(g2, 0), RationalPoly::constant(1));
                        for (const auto& [g, c] : k_mul(ka, kb).terms())
                            if (g.graph.n_vertices() > p1 + p2) ok = false;
                    }
                }
            }
        }
        bool bounds_ok = ok;

        // Orbit-stabilizer on every class with at most 6 vertices.
        bool orbit_ok = true;
        for (int n = 1; n <= 6; ++n)
            for (const auto& g : enumerate_graphs(n))
                if (automorphism_count(g) * labeled_copy_count(g) != factorial(n)) orbit_ok = false;

        // graph6 round-trip across every class with at most 8 vertices.
        bool g6_ok = true;
        long g6_count = 0;
        for (int n = 0; n <= 8; ++n) {
            auto classes = enumerate_graphs(n);
            if (n == 8 && classes.size() != 12346) g6_ok = false;
            for (const auto& g : classes) {
                ++g6_count;
                if (parse_graph6(emit_graph6(g)) != g) g6_ok = false;
            }
        }

        // Polynomial ring axioms on random inputs.
        bool ring_ok = true;
        std::mt19937_64 rng(1009);
        auto random_poly = [&rng]() {
            std::vector<Rational> c;
            int deg = static_cast<int>(rng() % 7);
            for (int i = 0; i <= deg; ++i)
                c.emplace_back(static_cast<long>(rng() % 201) - 100);
            return RationalPoly(std::move(c));
        };
        for (int trial = 0; trial < 200; ++trial) {
            RationalPoly a = random_poly(), b = random_poly(), c = random_poly();
            if ((a + b) + c != a + (b + c)) ring_ok = false;
            if (a * b != b * a) ring_ok = false;
            if ((a * b) * c != a * (b * c)) ring_ok = false;
            if (a * (b + c) != a * b + a * c) ring_ok = false;
        }

        ok = bounds_ok && orbit_ok && g6_ok && ring_ok;
        std::ostringstream os;
        os << "bounds " << (bounds_ok ? "ok" : "BAD") << ", orbit-stabilizer "
           << (orbit_ok ? "ok" : "BAD") << ", graph6 x" << g6_count << " "
           << (g6_ok ? "ok" : "BAD") << ", ring " << (ring_ok ? "ok" : "BAD") << ", "
           << t.elapsed();
        report(7, "structural invariant suites", ok, os.str());
    }

    if (failures == 0) {
        std::cout << "all acceptance criteria pass" << std::endl;
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED" << std::endl;
    return 1;
}
