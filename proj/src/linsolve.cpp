#include "jnorm/linsolve.hpp"

#include <stdexcept>

namespace jnorm {

namespace {

Integer exact_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

LinearSolveResult solve_exact(const std::vector<std::vector<Integer>>& a,
                              const std::vector<Rational>& b) {
    const int rows = static_cast<int>(a.size());
    if (rows != static_cast<int>(b.size()))
        throw std::invalid_argument("matrix/rhs row mismatch");
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());

    // Augmented integer matrix; each row scaled by its rhs denominator.
    std::vector<std::vector<Integer>> w(rows, std::vector<Integer>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(a[i].size()) != cols)
            throw std::invalid_argument("ragged matrix");
        const Integer den = b[i].get_den();
        for (int j = 0; j < cols; ++j) w[i][j] = a[i][j] * den;
        w[i][cols] = b[i].get_num();
    }

    LinearSolveResult result;
    Integer prev(1);
    int rank = 0;
    for (int col = 0; col < cols; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (w[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            result.status = SolveStatus::underdetermined;
            result.rank = rank;
            return result;
        }
        std::swap(w[rank], w[pivot]);
        const Integer& piv = w[rank][col];
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j <= cols; ++j)
                w[i][j] = exact_div(w[i][j] * piv - w[i][col] * w[rank][j], prev);
            w[i][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    result.rank = rank;

    for (int i = rank; i < rows; ++i)
        if (w[i][cols] != 0) {
            result.status = SolveStatus::inconsistent;
            return result;
        }

    std::vector<Rational> x(cols);
    for (int i = cols - 1; i >= 0; --i) {
        Rational sum(w[i][cols]);
        for (int j = i + 1; j < cols; ++j) sum -= x[j] * w[i][j];
        x[i] = sum / w[i][i];
        x[i].canonicalize();
    }
    result.solution = std::move(x);
    return result;
}

}  // namespace jnorm
