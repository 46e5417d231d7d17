#include "apparent_loci/valuation.hpp"

#include "apparent_loci/errors.hpp"
#include "apparent_loci/factor.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace apparent_loci {

namespace {

constexpr int kInfOrder = INT_MAX / 4;

int vpoly(const Poly& p, const Poly& m) { return p.is_zero() ? kInfOrder : p.valuation(m); }

// ord of A + B*y at a point over a factor m of f (uniformizer y, ord(m) = 2)
int ramified_order(const Poly& A, const Poly& B, const Poly& m) {
    int oa = A.is_zero() ? kInfOrder : 2 * A.valuation(m);
    int ob = B.is_zero() ? kInfOrder : 2 * B.valuation(m) + 1;
    return std::min(oa, ob);
}

// Local data of A + B*y over an irreducible m not dividing f. The two
// points above m have orders (e + k, e) where k > 0 only on the branch
// y = zero_branch mod m.
struct UnramifiedData {
    int e = 0;
    int k = 0;
    Poly zero_branch;
};

UnramifiedData unramified_data(const Curve& curve, const Poly& A, const Poly& B, const Poly& m) {
    UnramifiedData d;
    d.e = std::min(vpoly(A, m), vpoly(B, m));
    Poly me = m.pow(static_cast<unsigned>(d.e));
    Poly A1 = A.is_zero() ? Poly() : exact_div(A, me);
    Poly B1 = B.is_zero() ? Poly() : exact_div(B, me);
    Poly N = A1 * A1 - B1 * B1 * curve.f();
    d.k = N.valuation(m);
    if (d.k > 0) {
        // B1 is a unit mod m here, otherwise A1 would vanish too
        d.zero_branch = (-A1 * inverse_mod(B1, m)) % m;
    }
    return d;
}

}  // namespace

int ord(const FuncElem& u, const Place& place) {
    if (u.is_zero()) throw DomainError("ord of the zero function");
    const Curve& curve = *u.curve();
    auto [A, B, D] = u.integral();
    if (place.is_infinity()) {
        int g = curve.genus();
        int oa = A.is_zero() ? kInfOrder : -2 * A.degree();
        int ob = B.is_zero() ? kInfOrder : -2 * B.degree() - (2 * g + 1);
        return std::min(oa, ob) + 2 * D.degree();
    }
    Poly m = place.x_poly();
    if (place.is_ramified()) return ramified_order(A, B, m) - 2 * D.valuation(m);
    int vd = D.valuation(m);
    UnramifiedData d = unramified_data(curve, A, B, m);
    if (place.is_affine()) {
        const auto& pt = place.affine();
        if (d.k > 0 && d.zero_branch.eval(pt.x) == pt.y) return d.e + d.k - vd;
        return d.e - vd;
    }
    const auto& cp = place.closed();
    if (cp.branch && d.k > 0 && d.zero_branch == *cp.branch) return d.e + d.k - vd;
    return d.e - vd;
}

bool is_finite_at(const FuncElem& u, const Place& place) { return u.is_zero() || ord(u, place) >= 0; }

Series y_series(const Curve& curve, const AffinePlace& at, int precision) {
    if (sgn(at.y) == 0) throw DomainError("y_series at a ramified point");
    Poly ft = curve.f().taylor_shift(at.x);
    Series Y(precision);
    if (precision == 0) return Y;
    Y[0] = at.y;
    Rational inv2y = 1 / (2 * at.y);
    for (int k = 1; k < precision; ++k) {
        Rational acc = ft.coeff(k);
        for (int i = 1; i < k; ++i) acc -= Y[i] * Y[k - i];
        Y[k] = acc * inv2y;
    }
    return Y;
}

namespace {

Series poly_series(const Poly& p, const Rational& x0, int precision) {
    Poly shifted = p.taylor_shift(x0);
    std::vector<Rational> c(static_cast<std::size_t>(precision));
    for (int i = 0; i < precision; ++i) c[static_cast<std::size_t>(i)] = shifted.coeff(i);
    return Series(precision, std::move(c));
}

void require_jet_site(const Place& place) {
    if (!place.is_affine())
        throw DomainError("local expansions need a rational affine place, got " + place.to_string() +
                          " (scalars are restricted to Q)");
    if (place.is_ramified())
        throw DomainError("local expansions at ramified place " + place.to_string() + " are not supported");
}

}  // namespace

Series local_series(const FuncElem& u, const Place& place, int n) {
    require_jet_site(place);
    if (n < 0) throw DomainError("negative jet order");
    if (u.is_zero()) return Series(n + 1);
    if (ord(u, place) < 0) throw DomainError("function has a pole at " + place.to_string());
    const auto& pt = place.affine();
    auto [A, B, D] = u.integral();
    int vd = D.valuation(Poly::linear(pt.x));
    int prec = n + 1 + vd;
    Series num = poly_series(A, pt.x, prec) + poly_series(B, pt.x, prec) * y_series(*u.curve(), pt, prec);
    Series den = poly_series(D, pt.x, prec);
    // divide out t^vd from both
    std::vector<Rational> nc(num.coeffs().begin() + vd, num.coeffs().end());
    std::vector<Rational> dc(den.coeffs().begin() + vd, den.coeffs().end());
    Series q = Series(n + 1, std::move(nc)) * Series(n + 1, std::move(dc)).inverse();
    return q;
}

Jet jet_expand(const FuncElem& u, const Place& place, int n) {
    Series s = local_series(u, place, n);
    return Jet{place, n, s.coeffs()};
}

Rational value_at(const FuncElem& u, const Place& place) { return local_series(u, place, 0)[0]; }

namespace {

// Orders of u at infinity and at the places above the given x-polynomials.
Divisor divisor_over(const FuncElem& u, const Poly& A, const Poly& B, const Poly& D, const std::set<Poly>& candidates) {
    const Curve& curve = *u.curve();
    Divisor div;
    div.add(Place::infinity(), ord(u, Place::infinity()));
    for (const Poly& m : candidates) {
        bool ramified = (curve.f() % m).is_zero();
        if (ramified) {
            int o = ramified_order(A, B, m) - 2 * D.valuation(m);
            Place p = m.degree() == 1 ? Place::raw_affine(-m.coeff(0), 0) : Place::raw_closed(m, Poly());
            div.add(p, o);
            continue;
        }
        int vd = D.valuation(m);
        UnramifiedData d = unramified_data(curve, A, B, m);
        if (m.degree() == 1) {
            Rational x0 = -m.coeff(0);
            auto y0 = exact_sqrt(curve.f().eval(x0));
            if (!y0) {
                // inert: one place of degree 2, equal orders on both points
                div.add(Place::raw_closed(m, std::nullopt), d.e - vd);
                continue;
            }
            Place plus = Place::raw_affine(x0, *y0);
            Place minus = Place::raw_affine(x0, -*y0);
            Rational zb = d.k > 0 ? d.zero_branch.eval(x0) : Rational(0);
            div.add(plus, d.e - vd + (d.k > 0 && zb == *y0 ? d.k : 0));
            div.add(minus, d.e - vd + (d.k > 0 && zb == -*y0 ? d.k : 0));
            continue;
        }
        if (d.k == 0) {
            div.add(Place::raw_closed(m, std::nullopt), d.e - vd);
        } else {
            div.add(Place::raw_closed(m, d.zero_branch), d.e + d.k - vd);
            div.add(Place::raw_closed(m, -d.zero_branch), d.e - vd);
        }
    }
    return div;
}

}  // namespace

Divisor divisor_of(const FuncElem& u) {
    if (u.is_zero()) throw DomainError("divisor of the zero function");
    auto [A, B, D] = u.integral();
    std::set<Poly> candidates;
    if (D.degree() > 0)
        for (const auto& f : factor(D).factors) candidates.insert(f.base);
    Poly N = A * A - B * B * u.curve()->f();
    if (N.degree() > 0)
        for (const auto& f : factor(N).factors) candidates.insert(f.base);
    return divisor_over(u, A, B, D, candidates);
}

Divisor pole_divisor(const FuncElem& u) {
    if (u.is_zero()) return Divisor();
    auto [A, B, D] = u.integral();
    std::set<Poly> candidates;
    if (D.degree() > 0)
        for (const auto& f : factor(D).factors) candidates.insert(f.base);
    return divisor_over(u, A, B, D, candidates).negative_part();
}

Poly branch_lift(const Curve& curve, const Poly& m, const Poly& r, int k) {
    if (k <= 1) return r % m;
    Poly Y = r % m;
    int prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        Poly mod = m.pow(static_cast<unsigned>(prec));
        Poly inv = inverse_mod(Y * Rational(2), mod);
        Y = (Y - ((Y * Y - curve.f()) % mod) * inv) % mod;
    }
    return Y;
}

}  // namespace apparent_loci
