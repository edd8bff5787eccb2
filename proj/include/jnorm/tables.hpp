#ifndef JNORM_TABLES_HPP
#define JNORM_TABLES_HPP

#include <map>
#include <string>
#include <vector>

#include "jnorm/counting.hpp"
#include "jnorm/poly.hpp"

namespace jnorm {

// One tabulated expansion: scale * sum_v (lhs factors) equals the constant
// block plus sum over catalog indices i of coeffs[i] * g_i, where g_i is
// the signed injection count of catalog graph i in the host.
struct TableLine {
    int id = 0;
    long scale = 1;
    TermSpec lhs;  // coefficient 1
    RationalPoly constant;
    std::map<int, RationalPoly> coeffs;
};

// The identity terms: list of TermSpecs whose expansions sum to zero.
using IdentitySpec = std::vector<TermSpec>;

std::vector<TableLine> load_table(const std::string& path);
IdentitySpec load_identity(const std::string& path);

// Default locations compiled in from the source tree; overridable per call.
std::string default_data_dir();

// Indices whose constructions are stated outright, as name strings. The two
// "+K_2" names are candidate readings confirmed by catalog matching, not
// trusted inputs; they are listed separately.
const std::map<int, std::string>& catalog_named_entries();
const std::map<int, std::string>& catalog_candidate_entries();

}  // namespace jnorm

#endif
