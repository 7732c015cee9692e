#include "nullcert/linsolve.hpp"

#include <algorithm>
#include <map>

#include "nullcert/errors.hpp"

namespace nullcert {

void SparseRationalMatrix::add_entry(std::size_t r, std::size_t c, const Rational& v) {
    if (r >= n_rows || c >= n_cols)
        throw structural_error("matrix entry out of range");
    if (!v.is_zero()) rows[r].emplace_back(c, v);
}

void SparseRationalMatrix::finalize() {
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<std::size_t, Rational>> merged;
        for (auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second += v;
            else
                merged.emplace_back(c, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& e) { return e.second.is_zero(); }),
                     merged.end());
        row = std::move(merged);
    }
}

void SparseRationalMatrix::dump_coordinate(std::ostream& os) const {
    os << n_rows << " " << n_cols << "\n";
    for (std::size_t r = 0; r < n_rows; ++r)
        for (const auto& [c, v] : rows[r]) os << r << " " << c << " " << v << "\n";
    for (std::size_t r = 0; r < n_rows; ++r)
        if (!rhs[r].is_zero()) os << "rhs " << r << " " << rhs[r] << "\n";
}

namespace {

// Integer row with stripped content; elimination works fraction-free and
// renormalizes after every update.
struct IRow {
    std::vector<std::pair<std::size_t, mpz_class>> e;  // sorted by column
    mpz_class rhs = 0;
    std::size_t orig = 0;

    bool empty() const { return e.empty(); }
    std::size_t lead() const { return e.front().first; }
};

void strip_content(IRow& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row.e) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.rhs.get_mpz_t());
    if (g == 0) return;
    if (sgn(row.e.empty() ? row.rhs : row.e.front().second) < 0) g = -g;
    if (g == 1) return;
    for (auto& [c, v] : row.e) v /= g;
    row.rhs /= g;
}

IRow to_integer_row(const std::vector<std::pair<std::size_t, Rational>>& row,
                    const Rational& rhs, std::size_t orig) {
    mpz_class lcm = 1;
    for (const auto& [c, v] : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs.denominator().get_mpz_t());
    IRow out;
    out.orig = orig;
    out.e.reserve(row.size());
    for (const auto& [c, v] : row)
        out.e.emplace_back(c, v.numerator() * (lcm / v.denominator()));
    out.rhs = rhs.numerator() * (lcm / rhs.denominator());
    strip_content(out);
    return out;
}

// new_row = pivot_lead * row - row_lead * pivot, content-stripped.
IRow eliminate(const IRow& row, const IRow& pivot) {
    const mpz_class& pl = pivot.e.front().second;
    const mpz_class& rl = row.e.front().second;
    IRow out;
    out.orig = row.orig;
    out.e.reserve(row.e.size() + pivot.e.size());
    auto a = row.e.begin();
    auto b = pivot.e.begin();
    while (a != row.e.end() && b != pivot.e.end()) {
        if (a->first < b->first) {
            out.e.emplace_back(a->first, pl * a->second);
            ++a;
        } else if (b->first < a->first) {
            out.e.emplace_back(b->first, -rl * b->second);
            ++b;
        } else {
            mpz_class v = pl * a->second - rl * b->second;
            if (v != 0) out.e.emplace_back(a->first, std::move(v));
            ++a, ++b;
        }
    }
    for (; a != row.e.end(); ++a) out.e.emplace_back(a->first, pl * a->second);
    for (; b != pivot.e.end(); ++b) out.e.emplace_back(b->first, -rl * b->second);
    out.rhs = pl * row.rhs - rl * pivot.rhs;
    strip_content(out);
    return out;
}

struct Echelon {
    // Pivot rows keyed by pivot column, ascending.
    std::map<std::size_t, IRow> pivots;
    bool consistent = true;
    std::optional<std::size_t> inconsistent_row;
};

Echelon forward_eliminate(const SparseRationalMatrix& m) {
    Echelon ech;
    auto flag_inconsistent = [&ech](std::size_t orig) {
        if (ech.consistent) {
            ech.consistent = false;
            ech.inconsistent_row = orig;
        }
    };
    std::vector<IRow> work;
    work.reserve(m.n_rows);
    for (std::size_t r = 0; r < m.n_rows; ++r) {
        IRow row = to_integer_row(m.rows[r], m.rhs[r], r);
        if (row.empty()) {
            if (row.rhs != 0) flag_inconsistent(r);
            continue;
        }
        work.push_back(std::move(row));
    }
    // Deduplicate identical rows (same normalized entries and rhs).
    std::sort(work.begin(), work.end(), [](const IRow& a, const IRow& b) {
        if (a.e != b.e) return a.e < b.e;
        if (a.rhs != b.rhs) return a.rhs < b.rhs;
        return a.orig < b.orig;
    });
    work.erase(std::unique(work.begin(), work.end(),
                           [](const IRow& a, const IRow& b) {
                               return a.e == b.e && a.rhs == b.rhs;
                           }),
               work.end());

    std::map<std::size_t, std::vector<IRow>> buckets;
    for (auto& row : work) buckets[row.lead()].push_back(std::move(row));

    while (!buckets.empty()) {
        auto it = buckets.begin();
        std::size_t col = it->first;
        std::vector<IRow> rows = std::move(it->second);
        buckets.erase(it);
        // Pivot: fewest nonzeros, ties by original row index.
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].e.size() < rows[best].e.size() ||
                (rows[i].e.size() == rows[best].e.size() && rows[i].orig < rows[best].orig))
                best = i;
        }
        IRow pivot = std::move(rows[best]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == best) continue;
            IRow next = eliminate(rows[i], pivot);
            if (next.empty()) {
                if (next.rhs != 0) flag_inconsistent(next.orig);
                continue;
            }
            buckets[next.lead()].push_back(std::move(next));
        }
        ech.pivots.emplace(col, std::move(pivot));
    }
    return ech;
}

// Back-substitution with the non-pivot columns pinned (zero by default).
std::vector<Rational> back_substitute(const Echelon& ech, std::size_t n_cols,
                                      const std::map<std::size_t, Rational>& pinned) {
    std::vector<Rational> x(n_cols, Rational(0));
    for (const auto& [c, v] : pinned) x[c] = v;
    for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
        const IRow& row = it->second;
        Rational acc(row.rhs);
        for (std::size_t i = 1; i < row.e.size(); ++i)
            acc -= Rational(row.e[i].second) * x[row.e[i].first];
        x[it->first] = acc / Rational(row.e.front().second);
    }
    return x;
}

} // namespace

RrefResult rref(const SparseRationalMatrix& m) {
    Echelon ech = forward_eliminate(m);
    RrefResult out;
    out.consistent = ech.consistent;
    out.inconsistent_row = ech.inconsistent_row;
    if (!ech.consistent) {
        for (const auto& [c, row] : ech.pivots) out.pivot_columns.push_back(c);
        out.rank = ech.pivots.size();
        return out;
    }

    // Upward elimination over rationals, pivots normalized to 1.
    std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, Rational>>>> rr;
    std::vector<Rational> rr_rhs;
    for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
        const IRow& row = it->second;
        Rational lead(row.e.front().second);
        std::map<std::size_t, Rational> acc;
        Rational rhs = Rational(row.rhs) / lead;
        for (const auto& [c, v] : row.e) acc[c] = Rational(v) / lead;
        // Substitute already-reduced pivot rows below this one.
        for (std::size_t j = 0; j < rr.size(); ++j) {
            auto hit = acc.find(rr[j].first);
            if (hit == acc.end()) continue;
            Rational factor = hit->second;
            acc.erase(hit);
            for (const auto& [c, v] : rr[j].second)
                if (c != rr[j].first) {
                    acc[c] -= factor * v;
                    if (acc[c].is_zero()) acc.erase(c);
                }
            rhs -= factor * rr_rhs[j];
        }
        acc[it->first] = Rational(1);
        rr.push_back({it->first, {acc.begin(), acc.end()}});
        rr_rhs.push_back(rhs);
    }
    std::reverse(rr.begin(), rr.end());
    std::reverse(rr_rhs.begin(), rr_rhs.end());

    out.reduced.resize(rr.size(), m.n_cols);
    for (std::size_t i = 0; i < rr.size(); ++i) {
        out.reduced.rows[i] = rr[i].second;
        out.reduced.rhs[i] = rr_rhs[i];
        out.pivot_columns.push_back(rr[i].first);
    }
    out.rank = rr.size();
    return out;
}

SolveResult solve_particular(const SparseRationalMatrix& m) {
    Echelon ech = forward_eliminate(m);
    SolveResult out;
    for (const auto& [c, row] : ech.pivots) out.pivot_columns.push_back(c);
    out.rank = ech.pivots.size();
    if (!ech.consistent) {
        out.status = SolveStatus::Infeasible;
        out.inconsistent_row = ech.inconsistent_row;
        return out;
    }
    out.status = SolveStatus::Solved;
    out.solution = back_substitute(ech, m.n_cols, {});
    return out;
}

std::vector<std::vector<Rational>> nullspace_basis(const SparseRationalMatrix& m) {
    SparseRationalMatrix hom = m;
    hom.rhs.assign(hom.n_rows, Rational(0));
    Echelon ech = forward_eliminate(hom);
    std::vector<std::vector<Rational>> basis;
    for (std::size_t c = 0; c < m.n_cols; ++c) {
        if (ech.pivots.count(c)) continue;
        basis.push_back(back_substitute(ech, m.n_cols, {{c, Rational(1)}}));
    }
    return basis;
}

} // namespace nullcert
