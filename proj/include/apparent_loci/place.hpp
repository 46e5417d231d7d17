#pragma once

#include "apparent_loci/curve.hpp"
#include "apparent_loci/poly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace apparent_loci {

struct InfinityPlace {};

/// Rational point (x, y) with y^2 = f(x); ramified iff y = 0.
struct AffinePlace {
    Rational x;
    Rational y;
};

/// Galois orbit of non-rational points over the irreducible polynomial
/// `minpoly`. With a branch r (reduced mod minpoly) it is the orbit of points
/// where y = r(x); r = 0 means minpoly | f (ramified). Without a branch it is
/// the whole x-fiber over minpoly: one place when f is a non-square modulo
/// minpoly, otherwise the sum of the two branch places. Degree bookkeeping
/// is exact in both cases.
struct ClosedPlace {
    Poly minpoly;
    std::optional<Poly> branch;
};

class Place {
public:
    using Variant = std::variant<InfinityPlace, AffinePlace, ClosedPlace>;

    Place() : v_(InfinityPlace{}) {}
    static Place infinity() { return Place(InfinityPlace{}); }
    /// Validates y^2 = f(x); throws DomainError.
    static Place affine(const Curve& curve, const Rational& x, const Rational& y);
    /// Validates and normalizes: minpoly is made monic, a branch is reduced
    /// and checked against y^2 = f mod minpoly, linear minpoly requires a
    /// non-square f(x0) and no branch.
    static Place closed(const Curve& curve, const Poly& minpoly, std::optional<Poly> branch = std::nullopt);

    bool is_infinity() const { return std::holds_alternative<InfinityPlace>(v_); }
    bool is_affine() const { return std::holds_alternative<AffinePlace>(v_); }
    bool is_closed() const { return std::holds_alternative<ClosedPlace>(v_); }
    /// Rational, i.e. degree one: Infinity or Affine.
    bool is_rational() const { return !is_closed(); }
    bool is_ramified() const;
    /// Affine and y != 0: where jets are available.
    bool is_jet_site() const { return is_affine() && !is_ramified(); }

    const AffinePlace& affine() const { return std::get<AffinePlace>(v_); }
    const ClosedPlace& closed() const { return std::get<ClosedPlace>(v_); }
    const Variant& variant() const { return v_; }

    int degree() const;
    /// Irreducible x-polynomial under the place (none for infinity).
    Poly x_poly() const;
    /// Hyperelliptic conjugate (x, -y); Infinity and ramified places are fixed.
    Place conjugate() const;

    friend bool operator==(const Place& a, const Place& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Place& a, const Place& b) { return compare(a, b) != 0; }
    friend bool operator<(const Place& a, const Place& b) { return compare(a, b) < 0; }
    friend int compare(const Place& a, const Place& b);

    /// "(x0,y0)", "inf", "closed[m(x)]", "closed[m(x); y=r(x)]"
    std::string to_string() const;

    /// Unchecked constructors for internal use.
    static Place raw_affine(Rational x, Rational y) { return Place(AffinePlace{std::move(x), std::move(y)}); }
    static Place raw_closed(Poly m, std::optional<Poly> branch) {
        return Place(ClosedPlace{std::move(m), std::move(branch)});
    }

private:
    explicit Place(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Finite formal sum of places with nonzero integer multiplicities.
/// Canonical form: for an irreducible minpoly of degree >= 2 whose two
/// branches y = +-r both occur, the common part is stored on the fiber
/// closed[minpoly] and at most one branch keeps a positive excess. Equality
/// is syntactic.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(const Place& p, long mult = 1);

    const std::map<Place, long>& terms() const { return terms_; }
    long operator[](const Place& p) const;
    bool is_zero() const { return terms_.empty(); }
    long degree() const;
    /// All multiplicities >= 0 (exact for the canonical form).
    bool is_effective() const;
    std::vector<Place> support() const;

    Divisor& add(const Place& p, long mult);
    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(long k, const Divisor& d);
    Divisor operator-() const { return (-1) * *this; }

    /// max(D, 0) and max(-D, 0), computed on the points above each fiber.
    Divisor positive_part() const;
    Divisor negative_part() const;
    friend Divisor inf(const Divisor& a, const Divisor& b);
    friend Divisor sup(const Divisor& a, const Divisor& b);

    /// Keeps terms whose place satisfies pred.
    Divisor restricted(const std::function<bool(const Place&)>& pred) const;
    Divisor without(const Place& p) const {
        return restricted([&](const Place& q) { return q != p; });
    }

    friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

    /// "k*(x0,y0) + m*closed[p(x)] - n*inf"; "0" for the zero divisor.
    std::string to_string() const;

private:
    void canonicalize_fiber(const Poly& m);
    std::map<Place, long> terms_;
};

/// Number of geometric points covered by a set of places (sum of degrees).
long geometric_count(const std::vector<Place>& places);

}  // namespace apparent_loci
