#pragma once

#include <vector>

#include "nullcert/linsolve.hpp"

namespace nullcert::testsupport {

struct DenseResult {
    bool solved = false;
    std::vector<Rational> solution;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Textbook dense Gauss-Jordan over rationals; the reference answer for the
// sparse eliminator. Free variables are zero in the particular solution.
inline DenseResult dense_solve(std::vector<std::vector<Rational>> a,
                               std::vector<Rational> b) {
    const std::size_t n_rows = a.size();
    const std::size_t n_cols = n_rows ? a[0].size() : 0;
    DenseResult out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n_cols && row < n_rows; ++col) {
        std::size_t pivot = row;
        while (pivot < n_rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n_rows) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        Rational inv = Rational(1) / a[row][col];
        for (std::size_t c = col; c < n_cols; ++c) a[row][c] *= inv;
        b[row] *= inv;
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational factor = a[r][col];
            for (std::size_t c = col; c < n_cols; ++c)
                a[r][c] -= factor * a[row][c];
            b[r] -= factor * b[row];
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = out.pivots.size();
    for (std::size_t r = out.rank; r < n_rows; ++r)
        if (!b[r].is_zero()) return out;   // inconsistent; solved stays false
    out.solved = true;
    out.solution.assign(n_cols, Rational(0));
    for (std::size_t i = 0; i < out.pivots.size(); ++i) {
        Rational v = b[i];
        for (std::size_t c = out.pivots[i] + 1; c < n_cols; ++c)
            if (!a[i][c].is_zero()) v -= a[i][c] * out.solution[c];
        out.solution[out.pivots[i]] = v;
    }
    // Substitution is unnecessary after full Jordan elimination except for
    // free columns, which are pinned to zero anyway; recompute to be safe.
    for (std::size_t i = 0; i < out.pivots.size(); ++i) {
        Rational v = b[i];
        for (std::size_t c = 0; c < n_cols; ++c)
            if (c != out.pivots[i] && !a[i][c].is_zero())
                v -= a[i][c] * out.solution[c];
        out.solution[out.pivots[i]] = v;
    }
    return out;
}

inline std::vector<Rational> residual(const SparseRationalMatrix& m,
                                      const std::vector<Rational>& x) {
    std::vector<Rational> out(m.n_rows, Rational(0));
    for (std::size_t r = 0; r < m.n_rows; ++r) {
        for (const auto& [c, v] : m.rows[r]) out[r] += v * x[c];
        out[r] -= m.rhs[r];
    }
    return out;
}

} // namespace nullcert::testsupport
