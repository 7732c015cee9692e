#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nullcert/monomial.hpp"
#include "nullcert/rational.hpp"
#include "nullcert/vartable.hpp"

namespace nullcert {

// Sparse multivariate polynomial over exact rationals. Immutable value
// type: every operation returns a fresh polynomial in canonical form (no
// zero coefficients, terms iterated in canonical monomial order).
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    explicit Polynomial(TablePtr table) : table_(std::move(table)) {}

    static Polynomial zero(TablePtr table) { return Polynomial(std::move(table)); }
    static Polynomial constant(TablePtr table, Rational c);
    static Polynomial variable(TablePtr table, VarId v);
    static Polynomial term(TablePtr table, Monomial m, Rational c);

    const TablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; 0 for the zero polynomial.
    unsigned degree() const;

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial()); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c = Rational(1)) const;

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Replaces every exponent e >= 1 on the listed variables by 1.
    Polynomial boolean_reduce(const std::set<VarId>& vars) const;

    // Exact value at a point; every variable occurring in the polynomial
    // must be assigned.
    Rational evaluate(const std::map<VarId, Rational>& point) const;

    // Composition: listed variables are replaced by polynomials, others
    // stay themselves.
    Polynomial substitute(const std::map<VarId, Polynomial>& map) const;

    std::set<VarId> variables() const;

    // Text form: terms joined by " + " in canonical order, coefficients as
    // "p/q" ("p" when q = 1, "1*" omitted), exponents as "^e" for e > 1.
    std::string str() const;

    // Building block for encoders and parsers: accumulate a term in place.
    void add_term(const Monomial& m, const Rational& c);

private:
    void require_same_table(const Polynomial& o) const;

    TablePtr table_;
    TermMap terms_;
};

// All monomials of total degree <= d in the first n table variables,
// canonically ordered; exactly C(n+d, d) of them.
std::vector<Monomial> monomials_up_to(std::size_t n_vars, unsigned d);

// C(n+d, d) as an exact integer.
mpz_class monomial_count(std::size_t n_vars, unsigned d);

} // namespace nullcert
