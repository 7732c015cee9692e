#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "nullcert/linsolve.hpp"
#include "support/naive_solve.hpp"
#include "support/random_poly.hpp"

using namespace nullcert;
using namespace nullcert::testsupport;

namespace {

SparseRationalMatrix make(std::size_t r, std::size_t c,
                          const std::vector<std::vector<long>>& a,
                          const std::vector<long>& b) {
    SparseRationalMatrix m;
    m.resize(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m.add_entry(i, j, Rational(a[i][j]));
        m.rhs[i] = Rational(b[i]);
    }
    m.finalize();
    return m;
}

} // namespace

TEST_CASE("rref of the identity") {
    SparseRationalMatrix m = make(2, 2, {{1, 0}, {0, 1}}, {0, 0});
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.consistent);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
    REQUIRE(r.reduced.rows.size() == 2);
    CHECK(r.reduced.rows[0] ==
          std::vector<std::pair<std::size_t, Rational>>{{0, Rational(1)}});
    CHECK(r.reduced.rows[1] ==
          std::vector<std::pair<std::size_t, Rational>>{{1, Rational(1)}});
}

TEST_CASE("single row x + y = 1") {
    SparseRationalMatrix m = make(1, 2, {{1, 1}}, {1});
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0});
    SolveResult s = solve_particular(m);
    REQUIRE(s.status == SolveStatus::Solved);
    CHECK(s.solution == std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("zero row with nonzero rhs is inconsistent") {
    SparseRationalMatrix m = make(2, 2, {{1, 2}, {0, 0}}, {1, 1});
    RrefResult r = rref(m);
    CHECK(!r.consistent);
    CHECK(r.inconsistent_row == 1);
    SolveResult s = solve_particular(m);
    CHECK(s.status == SolveStatus::Infeasible);
    CHECK(s.inconsistent_row == 1);
}

TEST_CASE("contradictory equations") {
    SparseRationalMatrix m = make(2, 1, {{1}, {1}}, {2, 3});
    SolveResult s = solve_particular(m);
    CHECK(s.status == SolveStatus::Infeasible);
}

TEST_CASE("empty system solves trivially") {
    SparseRationalMatrix m;
    m.resize(0, 0);
    SolveResult s = solve_particular(m);
    CHECK(s.status == SolveStatus::Solved);
    CHECK(s.solution.empty());
    CHECK(s.rank == 0);
}

TEST_CASE("coordinate dump") {
    SparseRationalMatrix m = make(2, 2, {{1, 0}, {0, 2}}, {0, 1});
    std::ostringstream os;
    m.dump_coordinate(os);
    CHECK(os.str() == "2 2\n0 0 1\n1 1 2\nrhs 1 1\n");
}

TEST_CASE("fuzz against the dense eliminator") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dim(1, 7);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> fill(0, 2);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t rows = static_cast<std::size_t>(dim(rng));
        std::size_t cols = static_cast<std::size_t>(dim(rng));
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
        std::vector<Rational> b(rows, Rational(0));
        SparseRationalMatrix m;
        m.resize(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                if (fill(rng) != 0) continue;
                a[r][c] = Rational(num(rng), den(rng));
                m.add_entry(r, c, a[r][c]);
            }
            b[r] = fill(rng) == 0 ? Rational(num(rng), den(rng)) : Rational(0);
            m.rhs[r] = b[r];
        }
        m.finalize();

        DenseResult expect = dense_solve(a, b);
        SolveResult got = solve_particular(m);
        CHECK((got.status == SolveStatus::Solved) == expect.solved);
        CHECK(got.rank == expect.rank);
        CHECK(got.pivot_columns == expect.pivots);
        if (expect.solved) {
            CHECK(got.solution == expect.solution);
            for (const Rational& r : residual(m, got.solution)) CHECK(r.is_zero());
        }

        // Determinism: identical input, identical output.
        SolveResult again = solve_particular(m);
        CHECK(again.status == got.status);
        CHECK(again.solution == got.solution);
        CHECK(again.pivot_columns == got.pivot_columns);
    }
}

TEST_CASE("nullspace basis spans exact kernel vectors") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        SparseRationalMatrix m;
        m.resize(3, 5);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 5; ++c) {
                int v = num(rng);
                if (v) m.add_entry(r, c, Rational(v));
            }
        m.finalize();
        auto basis = nullspace_basis(m);
        SolveResult s = solve_particular(m);
        CHECK(basis.size() == 5 - s.rank);
        SparseRationalMatrix hom = m;
        hom.rhs.assign(hom.n_rows, Rational(0));
        for (const auto& v : basis)
            for (const Rational& r : residual(hom, v)) CHECK(r.is_zero());
    }
}
