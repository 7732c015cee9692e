#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nullcert/encoders.hpp"
#include "nullcert/linsolve.hpp"
#include "nullcert/oracles.hpp"
#include "nullcert/polynomial.hpp"

namespace nullcert {

// Coefficient polynomials beta_1..beta_s aligned index-for-index with a
// PolySystem; sum(beta_i * f_i) = 1 exactly for every certificate this
// module hands out.
struct Certificate {
    std::vector<Polynomial> betas;
    unsigned degree = 0;
};

struct DegreeRecord {
    unsigned degree = 0;
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    SolveStatus status = SolveStatus::Infeasible;
    double wall_ms = 0.0;
};

enum class NullaStatus { CertificateFound, NoCertificateUpToBound };

struct SolveReport {
    std::vector<DegreeRecord> records;   // strictly ascending degrees from 0
    NullaStatus final_status = NullaStatus::NoCertificateUpToBound;
};

struct NullaOptions {
    std::size_t column_cap = 500000;
};

// One unknown per (equation, candidate monomial) pair, equation-major,
// monomials in canonical order.
struct ColumnMap {
    std::size_t equations = 0;
    std::vector<Monomial> monomials;
    std::size_t size() const { return equations * monomials.size(); }
    std::pair<std::size_t, const Monomial&> at(std::size_t col) const {
        return {col / monomials.size(), monomials[col % monomials.size()]};
    }
};

// Matrix of the degree-d certificate equation: rows are balance
// constraints per appearing monomial (constant row has rhs 1), columns the
// unknown coefficients.
std::pair<SparseRationalMatrix, ColumnMap> build_linear_system(
    const PolySystem& s, unsigned degree, const NullaOptions& opts = {});

struct NullaResult {
    std::optional<Certificate> certificate;
    SolveReport report;
};

// Degree ascent 0..degree_bound; the first solvable degree yields the
// certificate (free coefficients zero), which is therefore of minimal
// degree. No certificate up to the bound proves nothing further.
NullaResult nulla_solve(const PolySystem& s, unsigned degree_bound,
                        const NullaOptions& opts = {});

struct VerifyResult {
    bool ok = false;
    Polynomial residual;   // sum(beta_i f_i) - 1
};

VerifyResult verify_certificate(const PolySystem& s, const Certificate& c);

// Rewrites a certificate through an invertible affine variable change.
// Source variables not in the map carry over by name. Each transformed
// system polynomial must be a scalar multiple of some target polynomial
// (equation order may differ); betas are rescaled and routed accordingly
// and keep their degrees.
Certificate change_of_variables(const Certificate& c, const PolySystem& source,
                                const std::map<VarId, Polynomial>& var_map,
                                const PolySystem& target);

// Problem-aware ascent bound: independence number for independent-set and
// vertex-cover systems, max structure size + 1 for matchings, edge covers
// and the rest; indicator count when no oracle applies.
unsigned default_degree_bound(const PolySystem& s, const OracleGuards& guards = {});

} // namespace nullcert
