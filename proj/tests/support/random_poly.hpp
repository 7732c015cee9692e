#pragma once

#include <random>

#include "nullcert/polynomial.hpp"

namespace nullcert::testsupport {

inline TablePtr small_table(std::size_t n) {
    auto t = std::make_shared<VariableTable>();
    for (std::size_t i = 0; i < n; ++i)
        t->add("x" + std::to_string(i + 1), VarRole::Indicator);
    return t;
}

// Small random polynomial: bounded term count, exponents and coefficients.
inline Polynomial random_poly(std::mt19937& rng, const TablePtr& table,
                              int max_terms = 5, unsigned max_exp = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    Polynomial p = Polynomial::zero(table);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial::Factors f;
        for (VarId v = 0; v < table->size(); ++v) {
            unsigned e = exp(rng);
            if (e) f.emplace_back(v, e);
        }
        p.add_term(Monomial::from_pairs(std::move(f)), Rational(num(rng), den(rng)));
    }
    return p;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(rng), den(rng));
}

} // namespace nullcert::testsupport
