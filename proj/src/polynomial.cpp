#include "nullcert/polynomial.hpp"

#include <sstream>

namespace nullcert {

Polynomial Polynomial::constant(TablePtr table, Rational c) {
    Polynomial p(std::move(table));
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::variable(TablePtr table, VarId v) {
    if (!table || v >= table->size())
        throw structural_error("variable id out of range for table");
    Polynomial p(std::move(table));
    p.add_term(Monomial::variable(v), Rational(1));
    return p;
}

Polynomial Polynomial::term(TablePtr table, Monomial m, Rational c) {
    Polynomial p(std::move(table));
    p.add_term(m, c);
    return p;
}

unsigned Polynomial::degree() const {
    if (terms_.empty()) return 0;
    // Canonical order is graded, so the last term has maximal degree.
    return terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::require_same_table(const Polynomial& o) const {
    if (!same_table(table_, o.table_))
        throw structural_error("polynomials over different variable tables");
}

Polynomial Polynomial::operator-() const {
    Polynomial p(table_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_table(o);
    Polynomial p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, c);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_table(o);
    Polynomial p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_table(o);
    Polynomial p(table_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            p.add_term(ma.times(mb), ca * cb);
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial p(table_);
    if (c.is_zero()) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    Polynomial p(table_);
    if (c.is_zero()) return p;
    for (const auto& [mm, k] : terms_) p.terms_.emplace(mm.times(m), k * c);
    return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return same_table(table_, o.table_) && terms_ == o.terms_;
}

Polynomial Polynomial::boolean_reduce(const std::set<VarId>& vars) const {
    Polynomial p(table_);
    for (const auto& [m, c] : terms_) p.add_term(m.capped_at_one(vars), c);
    return p;
}

Rational Polynomial::evaluate(const std::map<VarId, Rational>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = point.find(var);
            if (it == point.end())
                throw structural_error("evaluate: no assignment for variable '" +
                                       table_->name(var) + "'");
            v *= it->second.pow(e);
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& map) const {
    for (const auto& [v, q] : map)
        if (!same_table(table_, q.table()))
            throw structural_error("substitute: replacement over a different table");
    Polynomial acc(table_);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(table_, c);
        for (const auto& [var, e] : m.factors()) {
            auto it = map.find(var);
            const Polynomial base = (it == map.end())
                                        ? Polynomial::variable(table_, var)
                                        : it->second;
            for (unsigned i = 0; i < e; ++i) t = t * base;
        }
        acc += t;
    }
    return acc;
}

std::set<VarId> Polynomial::variables() const {
    std::set<VarId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) out.insert(v);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m.is_constant()) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            bool fv = true;
            for (const auto& [v, e] : m.factors()) {
                if (!fv) os << "*";
                fv = false;
                os << table_->name(v);
                if (e > 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

namespace {

void enumerate_monomials(std::size_t n_vars, unsigned d, std::size_t from,
                         Monomial::Factors& acc, std::vector<Monomial>& out) {
    out.push_back(Monomial::from_pairs(acc));
    if (d == 0) return;
    for (std::size_t v = from; v < n_vars; ++v) {
        acc.emplace_back(static_cast<VarId>(v), 1u);
        enumerate_monomials(n_vars, d - 1, v, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Monomial> monomials_up_to(std::size_t n_vars, unsigned d) {
    std::vector<Monomial> out;
    Monomial::Factors acc;
    enumerate_monomials(n_vars, d, 0, acc, out);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

mpz_class monomial_count(std::size_t n_vars, unsigned d) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n_vars) + d, d);
    return c;
}

} // namespace nullcert
