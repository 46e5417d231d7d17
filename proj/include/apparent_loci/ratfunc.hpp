#pragma once

#include "apparent_loci/poly.hpp"

#include <string>

namespace apparent_loci {

/// Element of Q(x) in lowest terms: gcd(num, den) = 1, den monic.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Poly& num);  // NOLINT
    RatFunc(const Rational& c) : RatFunc(Poly(c)) {}  // NOLINT
    RatFunc(long c) : RatFunc(Poly(c)) {}  // NOLINT
    RatFunc(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// deg num - deg den (the pole order at x = infinity, negated)
    int degree() const;

    Rational eval(const Rational& at) const;
    RatFunc derivative() const;
    RatFunc inverse() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend int compare(const RatFunc& a, const RatFunc& b);

    /// "p" or "(p)/(q)"
    std::string to_string() const;

private:
    void canonicalize();
    Poly num_;
    Poly den_;
};

}  // namespace apparent_loci
