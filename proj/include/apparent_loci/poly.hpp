#pragma once

#include "apparent_loci/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace apparent_loci {

/// Dense univariate polynomial over Q, lowest degree first. The coefficient
/// list never ends in a zero; the zero polynomial is the empty list.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants convert implicitly
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x();
    static Poly monomial(const Rational& c, int degree);
    /// (x - root)
    static Poly linear(const Rational& root);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& lead() const { return c_.back(); }

    Rational eval(const Rational& at) const;
    Poly derivative() const;
    Poly monic() const;
    /// p(x0 + t) as a polynomial in t.
    Poly taylor_shift(const Rational& x0) const;
    /// p(q(x)).
    Poly compose(const Poly& q) const;
    Poly pow(unsigned e) const;
    /// Largest e with m^e | p (p != 0, deg m >= 1).
    int valuation(const Poly& m) const;
    /// Drops the factor x^k: p / x^k, requires divisibility.
    Poly shift_down(int k) const;
    /// Common denominator times p, divided by the integer content: primitive
    /// integer polynomial with positive leading coefficient, and the scalar
    /// s with p = s * primitive.
    std::pair<Rational, std::vector<Integer>> primitive_part() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    /// Total order: by degree, then coefficients from the top.
    friend int compare(const Poly& a, const Poly& b);
    friend bool operator<(const Poly& a, const Poly& b) { return compare(a, b) < 0; }

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; b != 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
/// Exact division; throws DomainError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// s*a + t*b = g with g monic gcd.
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

}  // namespace apparent_loci
