#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "nullcert/rational.hpp"

namespace nullcert {

// Exact sparse linear system A x = b over the rationals. Rows hold sorted
// (column, coefficient) pairs with no explicit zeros.
struct SparseRationalMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    std::vector<Rational> rhs;

    void resize(std::size_t r, std::size_t c) {
        n_rows = r;
        n_cols = c;
        rows.assign(r, {});
        rhs.assign(r, Rational(0));
    }

    // Accumulates; call finalize() before solving.
    void add_entry(std::size_t r, std::size_t c, const Rational& v);
    void finalize();

    // Coordinate text dump: "n_rows n_cols" header, one "row col p/q" line
    // per entry, then "rhs row p/q" lines for nonzero right-hand sides.
    void dump_coordinate(std::ostream& os) const;
};

enum class SolveStatus { Solved, Infeasible };

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<Rational> solution;           // size n_cols when solved
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
    std::optional<std::size_t> inconsistent_row;  // original index when infeasible
};

struct RrefResult {
    SparseRationalMatrix reduced;   // nonzero rows, pivot-sorted, pivots = 1
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
    bool consistent = true;
    std::optional<std::size_t> inconsistent_row;
};

// Exact reduced row echelon form. Pivots are the first structurally
// nonzero entries scanning columns left to right; deterministic.
RrefResult rref(const SparseRationalMatrix& m);

// Particular solution with all free variables set to zero, or infeasible
// with an offending row. Exact: A x = b holds with no tolerance.
SolveResult solve_particular(const SparseRationalMatrix& m);

// Basis of the homogeneous nullspace (one vector per free column).
std::vector<std::vector<Rational>> nullspace_basis(const SparseRationalMatrix& m);

} // namespace nullcert
