#ifndef JNORM_VERIFY_HPP
#define JNORM_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jnorm/symbolic.hpp"
#include "jnorm/tables.hpp"

namespace jnorm {

enum class Provenance { named_in_text, resolved_by_matching };

struct CatalogEntry {
    int index = 0;
    SmallGraph graph;  // canonical representative
    std::string name;  // construction name, empty for figure-only classes
    Provenance provenance = Provenance::named_in_text;
};

// Bijection between catalog indices 2..34 and the 33 isomorphism classes of
// graphs on 2..5 vertices without isolated vertices.
struct CatalogAssignment {
    std::vector<CatalogEntry> entries;  // sorted by index

    const CatalogEntry* find(int index) const;
    int index_of(const SmallGraph& canonical_rep) const;  // -1 if absent
    std::string to_golden() const;
    static CatalogAssignment from_golden(const std::string& text);
};

// Pins the seven figure-only indices and the two "+K_2" names by exact
// matching: the unique bijection between unassigned indices and unassigned
// classes under which every table line holds. Throws if no assignment or
// more than one is consistent.
CatalogAssignment resolve_catalog(const std::vector<TableLine>& lines);

struct LineReport {
    int id = 0;
    bool pass = false;
    std::string lhs_text;
    std::string detail;  // per-class diff when failing
};

// Checks scale * expand_term(lhs) against the transcribed right-hand side,
// coefficient by coefficient.
std::vector<LineReport> verify_table(const std::vector<TableLine>& lines,
                                     const CatalogAssignment& assignment);

// Sum of expand_term over all identity terms; the theorem says it is zero.
JExpr verify_identity_symbolic(const IdentitySpec& identity);

struct NumericReport {
    long hosts_checked = 0;
    long nonzero = 0;
    std::vector<std::string> failures;  // graph6 of offending hosts, sorted
};

// Brute-force check of the identity on every isomorphism class with at most
// max_n vertices plus random_count seeded 12-vertex random graphs, fanned
// out over jobs threads.
NumericReport verify_identity_numeric(const IdentitySpec& identity, int max_n,
                                      int random_count, std::uint64_t seed, int jobs = 1);

// Independent route to the normal form: solves the exact linear system
//   term_eval(t, G) = sum_J sum_d c_{J,d} |V(G)|^d j_count(J, G)
// over all graphs with at most max_graph_size vertices plus seeded random
// graphs on 9..12 vertices (enough to make the system determined), then
// verifies the solution on 20 held-out random graphs. Throws on an
// underdetermined or inconsistent system.
JExpr fit_coefficients(const TermSpec& t, int max_graph_size, int degree_bound,
                       std::uint64_t seed = 2026);

// Deterministic random graph on n vertices, each edge present with
// probability 1/2 drawn from a seeded standard mersenne twister.
SmallGraph random_graph(int n, std::uint64_t seed);

// All isomorphism classes with 2..5 vertices and no isolated vertex,
// sorted by canonical key (the catalog's class pool).
std::vector<SmallGraph> catalog_class_pool();

}  // namespace jnorm

#endif
