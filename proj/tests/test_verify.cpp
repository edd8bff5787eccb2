#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "jnorm/names.hpp"
#include "jnorm/parse.hpp"
#include "jnorm/verify.hpp"

using namespace jnorm;

namespace {

std::vector<TableLine> table() {
    static std::vector<TableLine> lines = load_table(default_data_dir() + "/table.json");
    return lines;
}

IdentitySpec identity() {
    static IdentitySpec terms = load_identity(default_data_dir() + "/identity.json");
    return terms;
}

const CatalogAssignment& assignment() {
    static CatalogAssignment a = resolve_catalog(table());
    return a;
}

}  // namespace

TEST_CASE("transcribed data loads") {
    CHECK(table().size() == 25);
    CHECK(identity().size() == 25);
    for (const auto& term : identity())
        CHECK(term.vertex_budget() <= 5);
    // Identity monomial shapes match table line shapes one for one.
    auto shape = [](const TermSpec& t) {
        std::ostringstream os;
        for (const auto& g : t.minus_factors) os << "-" << emit_graph6(canonical_representative(g));
        os << "|";
        for (const auto& g : t.plus_factors) os << "+" << emit_graph6(canonical_representative(g));
        return os.str();
    };
    std::set<std::string> table_shapes, identity_shapes;
    for (const auto& line : table()) table_shapes.insert(shape(line.lhs));
    for (const auto& term : identity()) identity_shapes.insert(shape(term));
    CHECK(table_shapes.size() == 25);      // no duplicate lines
    CHECK(identity_shapes.size() == 25);   // every monomial appears exactly once
    CHECK(table_shapes == identity_shapes);
}

TEST_CASE("catalog class pool partitions by vertex count") {
    auto pool = catalog_class_pool();
    CHECK(pool.size() == 33);
    std::map<int, int> by_size;
    for (const auto& g : pool) ++by_size[g.n_vertices()];
    CHECK(by_size[2] == 1);
    CHECK(by_size[3] == 2);
    CHECK(by_size[4] == 7);
    CHECK(by_size[5] == 23);
}

TEST_CASE("catalog resolves uniquely") {
    const CatalogAssignment& a = assignment();
    CHECK(a.entries.size() == 33);

    const CatalogEntry* g9 = a.find(9);
    REQUIRE(g9 != nullptr);
    CHECK(g9->graph == canonical_representative(named("C_4")));
    CHECK(g9->provenance == Provenance::named_in_text);

    const CatalogEntry* g30 = a.find(30);
    REQUIRE(g30 != nullptr);
    CHECK(g30->graph == canonical_representative(named("K_5-(P_3 u K_2)")));

    // The figure-only indices come out of the matching.
    int matched = 0;
    for (int i : {14, 17, 18, 19, 21, 22, 26}) {
        const CatalogEntry* e = a.find(i);
        REQUIRE(e != nullptr);
        CHECK(e->provenance == Provenance::resolved_by_matching);
        CHECK(e->graph.n_vertices() == 5);
        ++matched;
    }
    CHECK(matched == 7);

    // The two "+K_2" names were pinned by matching and agree with the
    // one-extra-edge reading.
    CHECK(a.find(15)->graph == canonical_representative(named("K_{1,4}+K_2")));
    CHECK(a.find(28)->graph == canonical_representative(named("C_5+K_2")));

    // Every class used exactly once.
    std::set<SmallGraph> used;
    for (const auto& e : a.entries) used.insert(e.graph);
    CHECK(used.size() == 33);
}

TEST_CASE("catalog resolution is stable and matches the golden file") {
    std::string first = assignment().to_golden();
    std::string second = resolve_catalog(table()).to_golden();
    CHECK(first == second);

    std::ifstream in(std::string(JNORM_GOLDEN_DIR) + "/catalog.golden");
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == first);

    CatalogAssignment reloaded = CatalogAssignment::from_golden(first);
    CHECK(reloaded.entries.size() == 33);
    for (size_t i = 0; i < reloaded.entries.size(); ++i) {
        CHECK(reloaded.entries[i].index == assignment().entries[i].index);
        CHECK(reloaded.entries[i].graph == assignment().entries[i].graph);
    }
}

TEST_CASE("every tabulated expansion checks out") {
    auto reports = verify_table(table(), assignment());
    CHECK(reports.size() == 25);
    for (const auto& rep : reports) {
        INFO("line ", rep.id, ": ", rep.detail);
        CHECK(rep.pass);
    }
}

TEST_CASE("numeric spot check of one line on the triangle") {
    // 16 * sum_v s(K_2, G_v^+) on K_3 is 48; the right-hand side evaluates
    // through signed injection counts g_2 = g_3 = g_4 = 6 at n = 3.
    TermSpec lhs = parse_term_spec("s(K_2,+)");
    CHECK(term_eval(lhs, named("K_3")) * 16 == 48);
    CHECK(j_count(named("K_2"), named("K_3")) == 6);
    CHECK(j_count(named("P_3"), named("K_3")) == 6);
    CHECK(j_count(named("K_3"), named("K_3")) == 6);
    CHECK(6 + 3 * (3 - 2) * 6 + 3 * 6 + 6 == 48);
}

TEST_CASE("identity cancels symbolically") {
    JExpr total = verify_identity_symbolic(identity());
    CHECK(total.is_zero());
}

TEST_CASE("perturbing any coefficient breaks the cancellation") {
    IdentitySpec terms = identity();
    terms[0].coefficient += RationalPoly::constant(1);
    CHECK(!verify_identity_symbolic(terms).is_zero());

    IdentitySpec all = identity();
    IdentitySpec outside_only(all.begin() + 16, all.begin() + 22);
    CHECK(outside_only.size() == 6);
    for (const auto& t : outside_only) CHECK(t.minus_factors.size() > 0);
    CHECK(!verify_identity_symbolic(outside_only).is_zero());
}

TEST_CASE("identity holds numerically on small hosts") {
    NumericReport report = verify_identity_numeric(identity(), 5, 6, 424242, 2);
    CHECK(report.hosts_checked == 1 + 2 + 4 + 11 + 34 + 6);
    CHECK(report.nonzero == 0);
    CHECK(report.failures.empty());
}

TEST_CASE("random graphs are deterministic per seed") {
    CHECK(random_graph(12, 7) == random_graph(12, 7));
    CHECK(random_graph(12, 7) != random_graph(12, 8));
}

TEST_CASE("fitting the degree sum") {
    JExpr fitted = fit_coefficients(parse_term_spec("s(K_1,+)"), 5, 6);
    JExpr expected;
    expected.add_term(SmallGraph(0), RationalPoly::falling_factorial(2).scaled(make_rational(1, 2)));
    expected.add_term(named("K_2"), RationalPoly(make_rational(1, 2)));
    CHECK(fitted == expected);
}

TEST_CASE("fit agrees with the expansion engine") {
    TermSpec t = parse_term_spec("s(K_2,+)");
    CHECK(fit_coefficients(t, 6, 6) == expand_term(t));
}

TEST_CASE("fitting the zero term gives the zero expression") {
    TermSpec zero = parse_term_spec("0 s(K_1,+)");
    CHECK(zero.coefficient.is_zero());
    CHECK(fit_coefficients(zero, 5, 6).is_zero());
}
