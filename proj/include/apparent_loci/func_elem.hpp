#pragma once

#include "apparent_loci/curve.hpp"
#include "apparent_loci/ratfunc.hpp"

#include <string>

namespace apparent_loci {

/// a + b*y in Q(x)[y]/(y^2 - f(x)). Products are reduced with y^2 = f.
class FuncElem {
public:
    FuncElem() = default;
    FuncElem(CurvePtr curve, RatFunc a = RatFunc(), RatFunc b = RatFunc());

    static FuncElem constant(CurvePtr curve, const Rational& c) { return FuncElem(std::move(curve), RatFunc(c)); }
    static FuncElem x(CurvePtr curve) { return FuncElem(std::move(curve), RatFunc(Poly::x())); }
    static FuncElem y(CurvePtr curve) { return FuncElem(std::move(curve), RatFunc(), RatFunc(1)); }

    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    const CurvePtr& curve() const { return curve_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_constant() const;

    /// a^2 - b^2 f
    RatFunc norm() const;
    /// a - b*y
    FuncElem conjugate() const;
    /// Throws DomainError on zero.
    FuncElem inverse() const;
    FuncElem pow(unsigned e) const;

    /// u = (A + B*y)/D with polynomials A, B and monic D, gcd(A, B, D) = 1.
    struct Integral {
        Poly A, B, D;
    };
    Integral integral() const;

    FuncElem& operator+=(const FuncElem& o);
    FuncElem& operator-=(const FuncElem& o);
    FuncElem& operator*=(const FuncElem& o);
    FuncElem& operator/=(const FuncElem& o) { return *this *= o.inverse(); }
    friend FuncElem operator+(FuncElem u, const FuncElem& v) { return u += v; }
    friend FuncElem operator-(FuncElem u, const FuncElem& v) { return u -= v; }
    friend FuncElem operator*(FuncElem u, const FuncElem& v) { return u *= v; }
    friend FuncElem operator/(FuncElem u, const FuncElem& v) { return u /= v; }
    FuncElem operator-() const { return FuncElem(curve_, -a_, -b_); }
    friend FuncElem operator*(const Rational& s, const FuncElem& u) {
        return FuncElem(u.curve_, u.a_ * RatFunc(s), u.b_ * RatFunc(s));
    }

    friend bool operator==(const FuncElem& u, const FuncElem& v);

    std::string to_string() const;

private:
    void check_same(const FuncElem& o) const;
    CurvePtr curve_;
    RatFunc a_;
    RatFunc b_;
};

/// Elementwise operations require the same curve; throws CurveMismatch.
bool same_curve(const CurvePtr& a, const CurvePtr& b);

}  // namespace apparent_loci
