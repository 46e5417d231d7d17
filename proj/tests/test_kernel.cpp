#include <doctest.h>

#include "apparent_loci/errors.hpp"
#include "apparent_loci/factor.hpp"
#include "apparent_loci/func_elem.hpp"
#include "apparent_loci/linalg.hpp"
#include "apparent_loci/series.hpp"

#include <random>

using namespace apparent_loci;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

CurvePtr elliptic() { return make_curve(P({1, 0, 0, 1})); }

FuncElem random_elem(const CurvePtr& c, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-3, 3);
    auto rp = [&](int deg) {
        std::vector<Rational> v;
        for (int i = 0; i <= deg; ++i) v.emplace_back(coef(rng));
        return Poly(std::move(v));
    };
    Poly den = rp(1);
    if (den.is_zero()) den = Poly(1);
    return FuncElem(c, RatFunc(rp(2), den), RatFunc(rp(1)));
}

}  // namespace

TEST_CASE("rational parse and print") {
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK(*exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(exact_sqrt(Rational(2)));
}

TEST_CASE("poly arithmetic") {
    Poly a = P({1, 1});   // x + 1
    Poly b = P({-1, 1});  // x - 1
    CHECK(a * b == P({-1, 0, 1}));
    auto [q, r] = divmod(P({1, 0, 0, 1}), a);
    CHECK(q == P({1, -1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == a);
    CHECK(P({1, 0, 0, 1}).valuation(a) == 1);
    CHECK(P({1, 2, 1}).valuation(a) == 2);
    CHECK(P({0, 0, 1}).taylor_shift(1) == P({1, 2, 1}));
    CHECK(inverse_mod(P({0, 1}), P({1, 0, 1})) * P({0, 1}) % P({1, 0, 1}) == Poly(1));
    CHECK(P({1, -1, 3}).to_string() == "3*x^2 - x + 1");
    CHECK_THROWS_AS(exact_div(P({1, 0, 1}), a), DomainError);
}

TEST_CASE("factorization over Q") {
    auto f = factor(P({1, 0, 0, 0, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].base == P({1, 0, 0, 0, 1}));
    auto g = factor(P({1, 0, -10, 0, 1}));
    REQUIRE(g.factors.size() == 1);
    auto h = factor(P({1, 0, 0, 1}));
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0].base == P({1, 1}));
    CHECK(h.factors[1].base == P({1, -1, 1}));
    auto k = factor(Rational(6) * P({-1, 0, 1}) * P({-1, 0, 1}) * P({2, 0, 1}));
    CHECK(k.unit == 6);
    REQUIRE(k.factors.size() == 3);
    CHECK(k.factors[0].base == P({-1, 1}));
    CHECK(k.factors[0].multiplicity == 2);
    CHECK(k.factors[1].base == P({1, 1}));
    CHECK(k.factors[2].base == P({2, 0, 1}));
    // Swinnerton-Dyer style: irreducible but splits mod every prime
    auto sd = factor(P({1, 0, -10, 0, 1}) * P({1, 0, 0, 0, 1}));
    CHECK(sd.factors.size() == 2);
    CHECK(rational_roots(P({-6, 11, -6, 1})) == std::vector<Rational>{1, 2, 3});
    CHECK(rational_roots(Rational(1, 2) * P({-1, 2}) * P({3, 0, 1})) == std::vector<Rational>{Rational(1, 2)});
}

TEST_CASE("ratfunc canonical form") {
    RatFunc r(P({-1, 0, 1}), P({-2, 2}));
    CHECK(r.num() == Rational(1, 2) * P({1, 1}));
    CHECK(r.den() == Poly(1));
    RatFunc s = RatFunc(1) / RatFunc(P({0, 1}));
    CHECK((s * RatFunc(P({0, 1}))) == RatFunc(1));
    CHECK(s.derivative() == RatFunc(Poly(-1), P({0, 0, 1})));
}

TEST_CASE("function field arithmetic") {
    auto c = elliptic();
    FuncElem one = FuncElem::constant(c, 1);
    FuncElem y = FuncElem::y(c);
    CHECK(y * y == FuncElem(c, RatFunc(c->f())));
    CHECK((one + y) * (one - y) == FuncElem(c, RatFunc(P({0, 0, 0, -1}))));
    CHECK(y.inverse() == FuncElem(c, RatFunc(), RatFunc(Poly(1), c->f())));
    CHECK((one + y).norm() == RatFunc(P({0, 0, 0, -1})));
    CHECK((one + y).inverse() == (one - y) / FuncElem(c, RatFunc(P({0, 0, 0, -1}))));
    CHECK_THROWS_AS(FuncElem(c).inverse(), DomainError);
    auto other = make_curve(P({1, 0, 0, 0, 0, 1}));
    CHECK_THROWS_AS(y + FuncElem::y(other), CurveMismatch);
}

TEST_CASE("function field properties") {
    auto c = elliptic();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        FuncElem u = random_elem(c, rng), v = random_elem(c, rng), w = random_elem(c, rng);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
        CHECK((u * v).norm() == u.norm() * v.norm());
        if (!u.is_zero()) CHECK(u.inverse().inverse() == u);
        auto n = (u * v).a();
        CHECK(gcd(n.num(), n.den()) == Poly(1));
        CHECK(n.den().lead() == 1);
    }
}

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(Curve(P({0, 0, 1})), DomainError);
    CHECK_THROWS_AS(Curve(P({0, 0, 1, 1})), DomainError);
    CHECK(Curve(P({1, 0, 0, 0, 0, 1})).genus() == 2);
}

TEST_CASE("exact linear algebra") {
    QMatrix m(2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = Rational(7, 2);
    CHECK(rank(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == QVector{-2, 1, 0});
    auto x = solve(m, {1, 1});
    REQUIRE(x);
    CHECK((*x)[0] + 2 * (*x)[1] + 3 * (*x)[2] == 1);
    QMatrix z(1, 2);
    z(0, 0) = 0; z(0, 1) = 0;
    CHECK_FALSE(solve(z, {1}));
}

TEST_CASE("series") {
    Series a(4, {1, 1});
    Series inv = a.inverse();
    CHECK(inv.coeffs() == std::vector<Rational>{1, -1, 1, -1});
    CHECK((a * inv) == Series::constant(4, 1));
    CHECK(Series(3).order() == 3);
    CHECK(Series::t(3).order() == 1);
}
