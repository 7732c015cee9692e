#include "nullcert/nulla.hpp"

#include <algorithm>
#include <chrono>

#include "nullcert/errors.hpp"

namespace nullcert {

std::pair<SparseRationalMatrix, ColumnMap> build_linear_system(const PolySystem& s,
                                                               unsigned degree,
                                                               const NullaOptions& opts) {
    const std::size_t n_vars = s.table->size();
    const std::size_t n_eqs = s.polys.size();
    mpz_class count = monomial_count(n_vars, degree) * static_cast<long>(n_eqs);
    if (count > static_cast<long>(opts.column_cap))
        throw guard_refusal("matrix would have " + count.get_str() +
                            " columns, over the cap of " +
                            std::to_string(opts.column_cap));

    ColumnMap cols;
    cols.equations = n_eqs;
    cols.monomials = monomials_up_to(n_vars, degree);
    const std::size_t per_eq = cols.monomials.size();

    // First pass: discover which product monomials actually occur.
    std::map<Monomial, std::size_t, MonomialLess> row_of;
    row_of.emplace(Monomial(), 0);  // constant row always present, rhs 1
    for (std::size_t i = 0; i < n_eqs; ++i)
        for (const auto& [mf, c] : s.polys[i].terms())
            for (const auto& m : cols.monomials) row_of.emplace(m.times(mf), 0);
    std::size_t next = 0;
    for (auto& [m, idx] : row_of) idx = next++;

    SparseRationalMatrix mat;
    mat.resize(row_of.size(), n_eqs * per_eq);
    mat.rhs[row_of.at(Monomial())] = Rational(1);
    for (std::size_t i = 0; i < n_eqs; ++i) {
        for (std::size_t mi = 0; mi < per_eq; ++mi) {
            std::size_t col = i * per_eq + mi;
            for (const auto& [mf, c] : s.polys[i].terms())
                mat.add_entry(row_of.at(cols.monomials[mi].times(mf)), col, c);
        }
    }
    mat.finalize();
    return {std::move(mat), std::move(cols)};
}

namespace {

Certificate extract_certificate(const PolySystem& s, const ColumnMap& cols,
                                const std::vector<Rational>& solution) {
    Certificate cert;
    const std::size_t per_eq = cols.monomials.size();
    for (std::size_t i = 0; i < s.polys.size(); ++i) {
        Polynomial beta = Polynomial::zero(s.table);
        for (std::size_t mi = 0; mi < per_eq; ++mi) {
            const Rational& v = solution[i * per_eq + mi];
            if (!v.is_zero()) beta.add_term(cols.monomials[mi], v);
        }
        cert.degree = std::max(cert.degree, beta.degree());
        cert.betas.push_back(std::move(beta));
    }
    return cert;
}

} // namespace

NullaResult nulla_solve(const PolySystem& s, unsigned degree_bound,
                        const NullaOptions& opts) {
    NullaResult result;
    for (unsigned d = 0; d <= degree_bound; ++d) {
        auto start = std::chrono::steady_clock::now();
        auto [mat, cols] = build_linear_system(s, d, opts);
        SolveResult sr = solve_particular(mat);
        auto end = std::chrono::steady_clock::now();
        DegreeRecord rec;
        rec.degree = d;
        rec.n_rows = mat.n_rows;
        rec.n_cols = mat.n_cols;
        rec.status = sr.status;
        rec.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
        result.report.records.push_back(rec);
        if (sr.status == SolveStatus::Solved) {
            Certificate cert = extract_certificate(s, cols, sr.solution);
            VerifyResult check = verify_certificate(s, cert);
            if (!check.ok)
                throw structural_error("internal: extracted certificate failed "
                                       "exact verification");
            result.certificate = std::move(cert);
            result.report.final_status = NullaStatus::CertificateFound;
            return result;
        }
    }
    result.report.final_status = NullaStatus::NoCertificateUpToBound;
    return result;
}

VerifyResult verify_certificate(const PolySystem& s, const Certificate& c) {
    if (c.betas.size() != s.polys.size())
        throw structural_error("certificate length does not match system");
    Polynomial acc = Polynomial::zero(s.table);
    for (std::size_t i = 0; i < s.polys.size(); ++i)
        if (!c.betas[i].is_zero()) acc += c.betas[i] * s.polys[i];
    Polynomial residual = acc - Polynomial::constant(s.table, Rational(1));
    return {residual.is_zero(), residual};
}

namespace {

// Substitution of source-table variables by target-table polynomials;
// unmapped variables carry over by name.
Polynomial substitute_across(const Polynomial& p, const PolySystem& source,
                             const std::map<VarId, Polynomial>& var_map,
                             const TablePtr& target_table) {
    Polynomial acc = Polynomial::zero(target_table);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target_table, c);
        for (const auto& [v, e] : m.factors()) {
            Polynomial base = Polynomial::zero(target_table);
            auto it = var_map.find(v);
            if (it != var_map.end()) {
                base = it->second;
            } else {
                auto id = target_table->find(source.table->name(v));
                if (!id)
                    throw structural_error("change_of_variables: unmapped variable '" +
                                           source.table->name(v) +
                                           "' missing from target table");
                base = Polynomial::variable(target_table, *id);
            }
            for (unsigned i = 0; i < e; ++i) t = t * base;
        }
        acc += t;
    }
    return acc;
}

void require_invertible_affine(const PolySystem& source,
                               const std::map<VarId, Polynomial>& var_map,
                               const PolySystem& target) {
    const std::size_t n = source.table->size();
    if (target.table->size() != n)
        throw structural_error("change_of_variables: variable counts differ");
    SparseRationalMatrix mat;
    mat.resize(n, n);
    for (VarId v = 0; v < n; ++v) {
        auto it = var_map.find(v);
        if (it == var_map.end()) {
            auto id = target.table->find(source.table->name(v));
            if (!id)
                throw structural_error("change_of_variables: unmapped variable '" +
                                       source.table->name(v) +
                                       "' missing from target table");
            mat.add_entry(v, *id, Rational(1));
            continue;
        }
        if (it->second.degree() > 1)
            throw structural_error("change_of_variables: map is not affine");
        for (const auto& [m, c] : it->second.terms()) {
            if (m.is_constant()) continue;
            mat.add_entry(v, m.factors().front().first, c);
        }
    }
    mat.finalize();
    SolveResult sr = solve_particular(mat);
    if (sr.rank != n)
        throw structural_error("change_of_variables: affine map is not invertible");
}

} // namespace

Certificate change_of_variables(const Certificate& c, const PolySystem& source,
                                const std::map<VarId, Polynomial>& var_map,
                                const PolySystem& target) {
    if (c.betas.size() != source.polys.size())
        throw structural_error("certificate length does not match source system");
    if (source.polys.size() != target.polys.size())
        throw structural_error("change_of_variables: system sizes differ");
    require_invertible_affine(source, var_map, target);

    // Each transformed equation must be a scalar multiple of some target
    // equation; equation ORDER may differ between the systems (the cover
    // forms place their cardinality differently), so match greedily in
    // target order.
    Certificate out;
    out.betas.assign(target.polys.size(), Polynomial::zero(target.table));
    std::vector<bool> used(target.polys.size(), false);
    for (std::size_t i = 0; i < source.polys.size(); ++i) {
        Polynomial fi = substitute_across(source.polys[i], source, var_map, target.table);
        bool matched = false;
        for (std::size_t j = 0; j < target.polys.size() && !matched; ++j) {
            if (used[j]) continue;
            const Polynomial& tj = target.polys[j];
            Rational lambda(1);
            if (fi.is_zero() != tj.is_zero()) continue;
            if (!fi.is_zero()) {
                const auto& [m0, c0] = *fi.terms().begin();
                lambda = tj.coefficient(m0) / c0;
                if (lambda.is_zero() || fi.scaled(lambda) != tj) continue;
            }
            used[j] = true;
            matched = true;
            Polynomial beta =
                substitute_across(c.betas[i], source, var_map, target.table);
            beta = beta.scaled(Rational(1) / lambda);
            if (beta.degree() != c.betas[i].degree() ||
                beta.is_zero() != c.betas[i].is_zero())
                throw structural_error("change_of_variables: degree not preserved");
            out.betas[j] = std::move(beta);
        }
        if (!matched)
            throw structural_error("change_of_variables: transformed equation " +
                                   std::to_string(i) +
                                   " is not a scalar multiple of any target equation");
    }
    for (const Polynomial& b : out.betas) out.degree = std::max(out.degree, b.degree());
    VerifyResult check = verify_certificate(target, out);
    if (!check.ok)
        throw structural_error("change_of_variables: transformed certificate does "
                               "not verify");
    return out;
}

unsigned default_degree_bound(const PolySystem& s, const OracleGuards& guards) {
    const unsigned fallback = static_cast<unsigned>(s.indicator_ids.size());
    if (!s.params.graph) return fallback;
    const Graph& g = *s.params.graph;
    try {
        switch (s.kind) {
            case StructureKind::IndependentSet:
            case StructureKind::VertexCover:
                return static_cast<unsigned>(
                    max_structure_size(enum_independent_sets(g, guards)));
            case StructureKind::Matching:
                return static_cast<unsigned>(
                    max_structure_size(enum_matchings(g, guards)) + 1);
            case StructureKind::EdgeCover:
                return static_cast<unsigned>(
                    max_structure_size(enum_cagefree_subgraphs(g, guards)) + 1);
            case StructureKind::KColorableSubgraph:
                return static_cast<unsigned>(
                    max_structure_size(
                        enum_k_colorable_subgraphs(g, s.params.k.value(), guards)) +
                    1);
            case StructureKind::HomomorphicSubgraph:
                return static_cast<unsigned>(
                    max_structure_size(enum_homomorphic_subgraphs(
                        g, s.params.target.value(), guards)) +
                    1);
            case StructureKind::RegularSpanningSubgraph:
                return static_cast<unsigned>(
                    max_structure_size(enum_regular_subgraphs(g, guards)) + 1);
            case StructureKind::KRegularSubgraph:
                return static_cast<unsigned>(
                    max_structure_size(
                        enum_k_regular_subgraphs(g, s.params.k.value(), guards)) +
                    1);
            default:
                return fallback;
        }
    } catch (const guard_refusal&) {
        return fallback;
    } catch (const structural_error&) {
        // Empty family (no max size) and similar degenerate cases.
        return fallback;
    }
}

} // namespace nullcert
