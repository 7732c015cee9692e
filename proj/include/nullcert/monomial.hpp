#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "nullcert/errors.hpp"
#include "nullcert/vartable.hpp"

namespace nullcert {

// Power product of variables, stored sparse: (VarId, exponent) pairs with
// ascending ids and strictly positive exponents. Default value is the
// constant monomial 1.
class Monomial {
public:
    using Factors = std::vector<std::pair<VarId, unsigned>>;

    Monomial() = default;

    static Monomial variable(VarId v, unsigned e = 1) {
        Monomial m;
        if (e > 0) {
            m.factors_.emplace_back(v, e);
            m.degree_ = e;
        }
        return m;
    }

    // Accepts unsorted pairs with possible repeats; merges and drops zeros.
    static Monomial from_pairs(Factors pairs) {
        std::sort(pairs.begin(), pairs.end());
        Monomial m;
        for (const auto& [v, e] : pairs) {
            if (e == 0) continue;
            if (!m.factors_.empty() && m.factors_.back().first == v)
                m.factors_.back().second += e;
            else
                m.factors_.emplace_back(v, e);
            m.degree_ += e;
        }
        return m;
    }

    unsigned degree() const { return degree_; }
    bool is_constant() const { return factors_.empty(); }
    const Factors& factors() const { return factors_; }

    unsigned exponent(VarId v) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(),
                                   std::make_pair(v, 0u));
        if (it != factors_.end() && it->first == v) return it->second;
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial m;
        m.degree_ = degree_ + o.degree_;
        m.factors_.reserve(factors_.size() + o.factors_.size());
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first) m.factors_.push_back(*a++);
            else if (b->first < a->first) m.factors_.push_back(*b++);
            else {
                m.factors_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        m.factors_.insert(m.factors_.end(), a, factors_.end());
        m.factors_.insert(m.factors_.end(), b, o.factors_.end());
        return m;
    }

    bool divides(const Monomial& o) const {
        auto a = factors_.begin();
        auto b = o.factors_.begin();
        while (a != factors_.end()) {
            while (b != o.factors_.end() && b->first < a->first) ++b;
            if (b == o.factors_.end() || b->first != a->first || b->second < a->second)
                return false;
            ++a;
        }
        return true;
    }

    Monomial divided_by(const Monomial& o) const {
        Monomial m;
        auto b = o.factors_.begin();
        for (const auto& [v, e] : factors_) {
            unsigned sub = 0;
            while (b != o.factors_.end() && b->first < v) ++b;
            if (b != o.factors_.end() && b->first == v) sub = b->second;
            if (sub > e)
                throw structural_error("monomial division is not exact");
            if (e > sub) {
                m.factors_.emplace_back(v, e - sub);
                m.degree_ += e - sub;
            }
        }
        if (o.degree_ > degree_ || m.degree_ != degree_ - o.degree_)
            throw structural_error("monomial division is not exact");
        return m;
    }

    // Caps exponents of the listed variables at 1.
    Monomial capped_at_one(const std::set<VarId>& vars) const {
        Monomial m;
        for (const auto& [v, e] : factors_) {
            unsigned ne = vars.count(v) ? 1u : e;
            m.factors_.emplace_back(v, ne);
            m.degree_ += ne;
        }
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

private:
    Factors factors_;
    unsigned degree_ = 0;
};

// Canonical order: graded, ties broken at the smallest VarId where the
// exponents differ, larger exponent first. Yields 1, x1, x2, x1^2, x1*x2,
// x2^2, ... for two variables.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        auto ia = fa.begin();
        auto ib = fb.begin();
        while (ia != fa.end() && ib != fb.end()) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia, ++ib;
        }
        return ib != fb.end() ? false : ia != fa.end();
    }
};

} // namespace nullcert
