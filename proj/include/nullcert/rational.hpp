#pragma once

#include <gmpxx.h>
#include <ostream>
#include <string>

#include "nullcert/errors.hpp"

namespace nullcert {

// Exact rational scalar, always canonical: gcd(|num|, den) = 1, den > 0,
// zero stored as 0/1. Arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (sgn(d) == 0)
            throw structural_error("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" in base 10.
    static Rational from_string(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw parse_error("bad rational literal '" + text + "'");
        if (sgn(q.get_den()) == 0)
            throw parse_error("zero denominator in '" + text + "'");
        q.canonicalize();
        Rational r;
        r.v_ = q;
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw structural_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(unsigned e) const {
        Rational acc(1), base = *this;
        while (e) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    mpq_class v_;
};

} // namespace nullcert
