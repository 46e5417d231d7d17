#include <doctest.h>

#include "apparent_loci/errors.hpp"
#include "apparent_loci/valuation.hpp"

#include <random>

using namespace apparent_loci;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

CurvePtr elliptic() { return make_curve(P({1, 0, 0, 1})); }
CurvePtr genus2() { return make_curve(P({1, 0, 0, 0, 0, 1})); }

FuncElem X(const CurvePtr& c) { return FuncElem::x(c); }
FuncElem Y(const CurvePtr& c) { return FuncElem::y(c); }
FuncElem K(const CurvePtr& c, long v) { return FuncElem::constant(c, v); }

FuncElem random_elem(const CurvePtr& c, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-3, 3);
    auto rp = [&](int deg) {
        std::vector<Rational> v;
        for (int i = 0; i <= deg; ++i) v.emplace_back(coef(rng));
        return Poly(std::move(v));
    };
    Poly den = rp(2);
    if (den.is_zero()) den = Poly(1);
    FuncElem u(c, RatFunc(rp(3), den), RatFunc(rp(2)));
    return u.is_zero() ? K(c, 1) : u;
}

}  // namespace

TEST_CASE("orders at infinity and ramified points") {
    auto c = elliptic();
    CHECK(ord(X(c), Place::infinity()) == -2);
    CHECK(ord(Y(c), Place::infinity()) == -3);
    CHECK(ord(X(c) + K(c, 1), Place::affine(*c, -1, 0)) == 2);
    CHECK(ord(Y(c), Place::affine(*c, -1, 0)) == 1);
    auto c2 = genus2();
    CHECK(ord(X(c2), Place::infinity()) == -2);
    CHECK(ord(Y(c2), Place::infinity()) == -5);
}

TEST_CASE("orders at unramified points") {
    auto c = elliptic();
    Place p = Place::affine(*c, 0, 1);
    Place q = Place::affine(*c, 0, -1);
    CHECK(ord(X(c), p) == 1);
    CHECK(ord(Y(c) - K(c, 1), p) == 3);
    CHECK(ord(Y(c) - K(c, 1), q) == 0);
    CHECK(ord((Y(c) - K(c, 1)).inverse(), p) == -3);
    CHECK_THROWS_AS(ord(FuncElem(c), p), DomainError);
}

TEST_CASE("jets") {
    auto c = elliptic();
    Place p = Place::affine(*c, 2, 3);
    CHECK(jet_expand(K(c, 5), p, 2).coeffs == std::vector<Rational>{5, 0, 0});
    CHECK(jet_expand(X(c), p, 1).coeffs == std::vector<Rational>{2, 1});
    CHECK(jet_expand(Y(c), p, 1).coeffs == std::vector<Rational>{3, 2});
    CHECK_THROWS_AS(jet_expand(X(c).inverse(), Place::affine(*c, 0, 1), 1), DomainError);
    CHECK_THROWS_AS(jet_expand(X(c), Place::affine(*c, -1, 0), 1), DomainError);
    CHECK_THROWS_AS(jet_expand(X(c), Place::infinity(), 1), DomainError);
    // (y - 1)/x at (0,1): y = 1 + x^3/2 + ..., so (y-1)/x = x^2/2 + ...
    auto j = jet_expand((Y(c) - K(c, 1)) / X(c), Place::affine(*c, 0, 1), 3);
    CHECK(j.coeffs == std::vector<Rational>{0, 0, Rational(1, 2), 0});
}

TEST_CASE("divisors of functions") {
    auto c = elliptic();
    Divisor dx = divisor_of(X(c));
    Divisor expect;
    expect.add(Place::affine(*c, 0, 1), 1).add(Place::affine(*c, 0, -1), 1).add(Place::infinity(), -2);
    CHECK(dx == expect);
    CHECK(divisor_of(K(c, 3)).is_zero());
    Divisor dy = divisor_of(Y(c));
    Divisor ey;
    ey.add(Place::affine(*c, -1, 0), 1).add(Place::closed(*c, P({1, -1, 1})), 1).add(Place::infinity(), -3);
    CHECK(dy == ey);
    CHECK(dy.to_string() == "(-1,0) + closed[x^2 - x + 1] - 3*inf");
    CHECK(dy.degree() == 0);
    CHECK(divisor_of(Y(c) - K(c, 1)).to_string() == "3*(0,1) - 3*inf");
    // inert fiber: f(1) = 2 is not a square
    CHECK(divisor_of(X(c) - K(c, 1)).to_string() == "closed[x - 1] - 2*inf");
    CHECK(divisor_of(X(c) - K(c, 1)).degree() == 0);
}

TEST_CASE("split closed fibers") {
    auto c = elliptic();
    // x^2 - 2 : f = x^3 + 1 = 2x + 1 mod m, not a square; m^2 divides the norm of (x^2-2)
    Divisor d = divisor_of(X(c) * X(c) - K(c, 2));
    CHECK(d.degree() == 0);
    // y - (x + 1): norm = (x+1)^2 - x^3 - 1 = -x^3 + x^2 + 2x = -x(x-2)(x+1)
    Divisor e = divisor_of(Y(c) - X(c) - K(c, 1));
    CHECK(e.degree() == 0);
    CHECK(e[Place::affine(*c, 0, 1)] == 1);
    CHECK(e[Place::affine(*c, 2, 3)] == 1);
    CHECK(e[Place::affine(*c, -1, 0)] == 1);
    // a branch place over a quadratic: y = x^2 + x, norm = (x^2+x)^2 - x^3 - 1
    auto c2 = genus2();
    Divisor g = divisor_of(Y(c2) - X(c2) * X(c2));
    CHECK(g.degree() == 0);
}

TEST_CASE("divisor arithmetic") {
    auto c = elliptic();
    Place p = Place::affine(*c, 0, 1);
    Divisor d = 3 * Divisor(Place::infinity()) - Divisor(p);
    CHECK(d.degree() == 2);
    CHECK(Divisor().degree() == 0);
    CHECK(d.positive_part() == 3 * Divisor(Place::infinity()));
    CHECK(d.negative_part() == Divisor(p));
    CHECK(inf(d, Divisor()) == -Divisor(p));
    CHECK(sup(d, Divisor()) == 3 * Divisor(Place::infinity()));
    CHECK(d.without(p) == 3 * Divisor(Place::infinity()));
    Poly m = P({-2, 0, 1});
    CHECK_THROWS_AS(Place::closed(*c, P({-2, 1})), DomainError);
    CHECK(Place::closed(*c, P({-1, 1})).degree() == 2);
    CHECK(Place::closed(*c, m).degree() == 4);
    CHECK(Place::closed(*c, P({1, -1, 1})).is_ramified());
}

TEST_CASE("branch places canonicalize") {
    auto c2 = genus2();
    Poly m = P({1, 0, -1, 1});
    // f = x^5 + 1 mod m: x^3 = x^2 - 1, x^4 = x^3 - x = x^2 - x - 1, x^5 = x^3 - x^2 - x = -x - 1, so f = -x
    // branch candidates need r^2 = -x mod m; test the canonical form abstractly via raw places
    Place a = Place::raw_closed(m, P({0, 1}));
    Place b = Place::raw_closed(m, P({0, -1}));
    Divisor d;
    d.add(a, 2).add(b, 1);
    CHECK(d[Place::raw_closed(m, std::nullopt)] == 1);
    CHECK(d[a] == 1);
    CHECK(d[b] == 0);
    CHECK(d.degree() == 9);
    Divisor neg = -d;
    CHECK(neg.degree() == -9);
    CHECK((d + neg).is_zero());
}

TEST_CASE("valuation properties") {
    std::mt19937_64 rng(11);
    for (auto c : {elliptic(), genus2()}) {
        std::vector<Place> places{Place::infinity(), Place::affine(*c, -1, 0), Place::affine(*c, 0, 1),
                                  Place::affine(*c, 0, -1)};
        if (c->genus() == 1) places.push_back(Place::affine(*c, 2, 3));
        for (int i = 0; i < 40; ++i) {
            FuncElem u = random_elem(c, rng), v = random_elem(c, rng);
            CHECK(divisor_of(u).degree() == 0);
            for (const auto& p : places) {
                CHECK(ord(u * v, p) == ord(u, p) + ord(v, p));
                CHECK(ord(u, p) == divisor_of(u)[p]);
                if (p.is_jet_site() && ord(u, p) >= 0 && ord(v, p) >= 0) {
                    int n = 4;
                    Series su = local_series(u, p, n), sv = local_series(v, p, n);
                    CHECK(local_series(u * v, p, n) == su * sv);
                    int o = ord(u, p);
                    if (o <= n) CHECK(su.order() == o);
                }
            }
        }
    }
}

TEST_CASE("branch lift") {
    auto c = elliptic();
    Poly m = P({-2, 1});
    Poly Y = branch_lift(*c, m, Poly(3), 4);
    CHECK(((Y * Y - c->f()) % m.pow(4)).is_zero());
    CHECK((Y % m) == Poly(3));
}
