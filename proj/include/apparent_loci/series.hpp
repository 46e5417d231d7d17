#pragma once

#include "apparent_loci/rational.hpp"

#include <vector>

namespace apparent_loci {

/// Power series in t truncated mod t^precision.
class Series {
public:
    explicit Series(int precision, std::vector<Rational> coeffs = {});
    static Series constant(int precision, const Rational& c);
    static Series t(int precision);

    int precision() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    /// Index of the first nonzero coefficient, or precision() when all vanish.
    int order() const;
    bool is_unit() const { return !c_.empty() && sgn(c_[0]) != 0; }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rational& s, Series a);
    Series operator-() const;
    /// Requires a unit constant term.
    Series inverse() const;
    Series truncate(int precision) const;

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

}  // namespace apparent_loci
