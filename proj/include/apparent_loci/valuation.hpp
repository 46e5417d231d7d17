#pragma once

#include "apparent_loci/func_elem.hpp"
#include "apparent_loci/place.hpp"
#include "apparent_loci/series.hpp"

#include <vector>

namespace apparent_loci {

/// Truncated expansion of a function in t = x - x0 at a rational
/// unramified affine place; coeffs has order + 1 entries.
struct Jet {
    Place place;
    int order = 0;
    std::vector<Rational> coeffs;

    friend bool operator==(const Jet& a, const Jet& b) {
        return a.place == b.place && a.order == b.order && a.coeffs == b.coeffs;
    }
};

/// Valuation of u != 0 at the place. Uniformizers: x - x0 at unramified
/// affine points, y at ramified points, x^g / y at infinity. On an
/// unsplit fiber closed[m] the result is the minimum over the points above.
int ord(const FuncElem& u, const Place& place);

/// ord(u) >= 0 everywhere except possibly at `allowed` (convenience).
bool is_finite_at(const FuncElem& u, const Place& place);

/// Power series of the branch of y through (x0, y0), y0 != 0, in t = x - x0.
Series y_series(const Curve& curve, const AffinePlace& at, int precision);

/// Expansion of u at a rational unramified affine place up to t^n.
/// Throws DomainError on a pole or an unsupported place.
Jet jet_expand(const FuncElem& u, const Place& place, int n);
/// Same data as a Series of precision n + 1.
Series local_series(const FuncElem& u, const Place& place, int n);

/// Value of u at a rational affine unramified place (u finite there).
Rational value_at(const FuncElem& u, const Place& place);

/// Exact divisor of u != 0; deg = 0.
Divisor divisor_of(const FuncElem& u);
/// Poles of u with their orders as a nonnegative divisor; only the
/// denominator is factored. Zero for u = 0.
Divisor pole_divisor(const FuncElem& u);

/// Lift of the branch y = r mod m to Y with Y^2 = f mod m^k (m irreducible,
/// m not dividing f, r != 0 mod m).
Poly branch_lift(const Curve& curve, const Poly& m, const Poly& r, int k);

}  // namespace apparent_loci
