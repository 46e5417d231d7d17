#include <doctest.h>

#include "apparent_loci/generator.hpp"
#include "apparent_loci/io.hpp"

using namespace apparent_loci;

namespace {

CurvePtr elliptic() { return make_curve(parse_poly("x^3 + 1")); }
CurvePtr genus2() { return make_curve(parse_poly("x^5 + 1")); }

}  // namespace

TEST_CASE("expression parser") {
    auto c = elliptic();
    FuncElem X = FuncElem::x(c), Y = FuncElem::y(c);
    CHECK(parse_func(c, "x^2 - 3/2*x*y") == X * X - Rational(3, 2) * X * Y);
    CHECK(parse_func(c, "(y - 1)/(x + 2)") == (Y - FuncElem::constant(c, 1)) / (X + FuncElem::constant(c, 2)));
    CHECK(parse_func(c, "x^-2") == (X * X).inverse());
    CHECK(parse_func(c, "-(x)") == -X);
    CHECK(parse_func(c, "y^2") == X * X * X + FuncElem::constant(c, 1));
    CHECK(parse_poly("2*x^2 + 4") == Poly(std::vector<Rational>{4, 0, 2}));
}

TEST_CASE("expression errors carry columns") {
    auto c = elliptic();
    try {
        parse_func(c, "x + * y");
        FAIL("no throw");
    } catch (const ExpressionError& e) {
        CHECK(e.column_in_expression() == 5);
    }
    try {
        parse_func(c, "1/(x - x)");
        FAIL("no throw");
    } catch (const ExpressionError& e) {
        CHECK(e.message() == "division by zero");
        CHECK(e.column_in_expression() == 3);
    }
    CHECK_THROWS_AS(parse_poly("x + y"), ExpressionError);
    CHECK_THROWS_AS(parse_func(c, "(x + 1"), ExpressionError);
    CHECK_THROWS_AS(parse_func(c, "z"), ExpressionError);
}

TEST_CASE("place and divisor text round trip") {
    auto c = elliptic();
    for (const char* t : {"(0,1)", "(-1,0)", "inf", "closed[x^2 - x + 1]", "closed[x - 1]"}) {
        Place p = parse_place(*c, t);
        CHECK(p.to_string() == t);
        CHECK(parse_place(*c, p.to_string()) == p);
    }
    Divisor D = parse_divisor(*c, "2*(0,1) - (2,3) + 3*inf + closed[x^2 - x + 1]");
    CHECK(D.degree() == 2 - 1 + 3 + 2);
    CHECK(parse_divisor(*c, D.to_string()) == D);
    CHECK(parse_divisor(*c, "0").is_zero());
    CHECK_THROWS_AS(parse_place(*c, "(0,2)"), ExpressionError);
    CHECK_THROWS_AS(parse_divisor(*c, "2*(0,1) (2,3)"), ExpressionError);
    try {
        parse_divisor(*c, "(0,1) + 2*(1,1)");
        FAIL("no throw");
    } catch (const ExpressionError& e) {
        CHECK(e.column_in_expression() == 11);
    }
}

TEST_CASE("json syntax errors report line and column") {
    try {
        parse_json_text("{\n  \"curve\": {\"f\": [1, 0, 0, 1]},\n  \"p\": ,\n}");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 8);
    }
}

TEST_CASE("expression errors are located in the document") {
    std::string text = "{\n  \"curve\": {\"f\": [1, 0, 0, 1]},\n  \"frame\": [[\"x + )\"]]\n}";
    try {
        load_document(text, instance_from_json);
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 19);
    }
}

TEST_CASE("invalid curves are refused at load") {
    CHECK_THROWS_AS(load_document("{\"curve\": {\"f\": [0, 0, 1, 1]}, \"frame\": [[1]]}", instance_from_json), ParseError);
    CHECK_THROWS_AS(load_document("{\"curve\": {\"f\": \"x^4 + 1\"}, \"frame\": [[1]]}", instance_from_json), ParseError);
    CHECK_THROWS_AS(load_document("{\"curve\": {\"f\": [1, 0, 0, 1]}, \"frame\": [[1, 0]]}", instance_from_json), ParseError);
}

TEST_CASE("instance and certificate round trip") {
    for (auto c : {elliptic(), genus2()}) {
        std::mt19937_64 rng(instance_seed(7, static_cast<std::uint64_t>(c->genus()), 2, 0));
        Instance inst{c, generate_frame(c, 2, rng), Place::infinity()};
        Json j = instance_to_json(inst);
        Instance back = load_document(j.dump(2), instance_from_json);
        CHECK(*back.curve == *c);
        CHECK(back.frame.entries() == inst.frame.entries());
        CHECK(back.P == inst.P);

        auto cert = trivialize(inst.frame, inst.P);
        Json cj = certificate_to_json(cert);
        auto cert2 = load_document(cj.dump(), certificate_from_json);
        CHECK(certificate_to_json(cert2) == cj);
        CHECK(verify_certificate(cert2, inst.frame).passed());
    }
}
