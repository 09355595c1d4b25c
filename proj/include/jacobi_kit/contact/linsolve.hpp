#pragma once

#include <vector>

#include "jacobi_kit/symcore/expr.hpp"

namespace jacobi_kit::contact {

using symcore::Expr;

/// Solve an (m x n) system A x = b exactly over the rational-function
/// field, m >= n, by Gaussian elimination with the first nonzero pivot.
/// Throws SingularSystem when the system has no unique solution (rank
/// deficiency or inconsistency); pivots are nonzero as rational functions,
/// so pointwise degeneracy shows up in solution denominators rather than
/// here.
inline std::vector<Expr> solve_unique(std::vector<std::vector<Expr>> a,
                                      std::vector<Expr> b) {
    const std::size_t rows = a.size();
    if (rows == 0) throw symcore::SingularSystem("empty linear system");
    const std::size_t cols = a[0].size();
    if (b.size() != rows) throw symcore::Error("solve_unique: rhs size mismatch");
    if (rows < cols) throw symcore::SingularSystem("underdetermined linear system");

    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(cols);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pr = row;
        while (pr < rows && a[pr][col].is_zero()) ++pr;
        if (pr == rows)
            throw symcore::SingularSystem("linear system is rank deficient");
        std::swap(a[pr], a[row]);
        std::swap(b[pr], b[row]);
        Expr inv = symcore::Expr::one(a[row][col].chart()) / a[row][col];
        for (std::size_t c = col; c < cols; ++c) a[row][c] = a[row][c] * inv;
        b[row] = b[row] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Expr factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] = a[r][c] - factor * a[row][c];
            b[r] = b[r] - factor * b[row];
        }
        pivot_row[col] = row;
        ++row;
    }
    // Remaining rows were reduced to 0 = b[r]; any nonzero b[r] means the
    // overdetermined system is inconsistent.
    for (std::size_t r = row; r < rows; ++r)
        if (!b[r].is_zero())
            throw symcore::SingularSystem("linear system is inconsistent");
    std::vector<Expr> x;
    x.reserve(cols);
    for (std::size_t col = 0; col < cols; ++col) x.push_back(b[pivot_row[col]]);
    return x;
}

}  // namespace jacobi_kit::contact
