#ifndef JNORM_LINSOLVE_HPP
#define JNORM_LINSOLVE_HPP

#include <vector>

#include "jnorm/rational.hpp"

namespace jnorm {

enum class SolveStatus { unique, underdetermined, inconsistent };

struct LinearSolveResult {
    SolveStatus status = SolveStatus::unique;
    int rank = 0;
    std::vector<Rational> solution;  // empty unless status == unique
};

// Solves A x = b exactly over the rationals, with rows >= columns expected.
// Fraction-free (Bareiss) forward elimination over integers after clearing
// denominators row by row, then rational back substitution. Surplus rows
// must reduce to 0 = 0 or the system is reported inconsistent; a column
// without a pivot makes it underdetermined.
LinearSolveResult solve_exact(const std::vector<std::vector<Integer>>& a,
                              const std::vector<Rational>& b);

}  // namespace jnorm

#endif
