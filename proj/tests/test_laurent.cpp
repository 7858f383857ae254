#include "cfg/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace cfg;

namespace {

const LaurentPoly x = LaurentPoly::var("x");
const LaurentPoly y = LaurentPoly::var("y");

// deterministic generator for property checks
LaurentPoly random_poly(std::mt19937& rng, bool allow_negative_exps = true) {
    std::uniform_int_distribution<int> nterms(0, 4), coef(-5, 5), expo(allow_negative_exps ? -2 : 0, 3);
    LaurentPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m{{{"x", expo(rng)}, {"y", expo(rng)}, {"z", expo(rng)}}};
        p.add_term(m, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("addition examples") {
    CHECK((x + y) + (x - y) == Rational(2) * x);
    LaurentPoly p = LaurentPoly::parse("x*y^2 + x^2*y");
    CHECK(p + LaurentPoly() == p);
    CHECK(p + LaurentPoly::parse("x*y^2") == LaurentPoly::parse("2*x*y^2 + x^2*y"));
}

TEST_CASE("multiplication examples") {
    CHECK((x + y) * (x - y) == LaurentPoly::parse("x^2 - y^2"));
    CHECK(LaurentPoly::var("x", -1) * x == LaurentPoly(Rational(1)));
    CHECK((x - y) * (x - y) == LaurentPoly::parse("x^2 - 2*x*y + y^2"));
}

TEST_CASE("powers") {
    CHECK((x - y).pow(0) == LaurentPoly(Rational(1)));
    CHECK((x - y).pow(2) == LaurentPoly::parse("x^2 - 2*x*y + y^2"));
    CHECK((x * y).pow(-1) == LaurentPoly::parse("x^-1*y^-1"));
    CHECK_THROWS_AS((x + y).pow(-1), std::domain_error);
}

TEST_CASE("substitute") {
    LaurentPoly p = LaurentPoly::parse("x0*x1*x2");
    CHECK(p.substitute({{"x0", x}, {"x1", y}, {"x2", x}}) == LaurentPoly::parse("x^2*y"));
    LaurentPoly q = LaurentPoly::parse("x^2 - y^2 + x^-1");
    CHECK(q.substitute({}) == q);
    // negative power of a non-monomial image is rejected
    CHECK_THROWS_AS(LaurentPoly::var("x", -1).substitute({{"x", x + y}}), std::domain_error);
}

TEST_CASE("evaluate") {
    CHECK(LaurentPoly::parse("x*y^2 + x^2*y").evaluate({{"x", 1}, {"y", 1}}) == 2);
    CHECK(LaurentPoly::parse("x^-1*y").evaluate({{"x", 2}, {"y", 3}}) == Rational(3, 2));
    CHECK(LaurentPoly::parse("x*y^3 + 5*x^3*y").evaluate({{"x", 1}, {"y", 1}}) == 6);
    CHECK_THROWS_AS(LaurentPoly::parse("x^-1").evaluate({{"x", 0}}), std::domain_error);
}

TEST_CASE("coefficient extraction") {
    LaurentPoly p = LaurentPoly::parse("x*y^3 + 5*x^3*y");
    CHECK(p.coefficient(Monomial{{{"x", 3}, {"y", 1}}}) == 5);
    CHECK(p.coefficient(Monomial{{{"x", 7}}}) == 0);
    CHECK(LaurentPoly::parse("x*y^2 + x^2*y").coefficient(Monomial{{{"x", 2}, {"y", 1}}}) == 1);
}

TEST_CASE("ring axioms on random instances") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("monomial inverses multiply to one") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> expo(-3, 3), coef(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly m(Monomial{{{"x", expo(rng)}, {"y", expo(rng)}}}, coef(rng));
        CHECK(m * m.pow(-1) == LaurentPoly(Rational(1)));
    }
}

TEST_CASE("substitute then evaluate = evaluate composed assignment") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly p = random_poly(rng);
        // invertible images: single monomials with nonzero rational coefficients
        std::map<std::string, LaurentPoly> image = {
            {"x", LaurentPoly(Monomial::var("u", 2), Rational(3, 2))},
            {"y", LaurentPoly(Monomial::var("v"), -2)},
            {"z", LaurentPoly(Monomial{{{"u", 1}, {"v", -1}}}, Rational(1, 3))},
        };
        std::map<std::string, Rational> point = {{"u", Rational(2)}, {"v", Rational(-3, 2)}};
        std::map<std::string, Rational> composed;
        for (const auto& [name, img] : image) composed[name] = img.evaluate(point);
        CHECK(p.substitute(image).evaluate(point) == p.evaluate(composed));
    }
}

TEST_CASE("text round trip") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly p = random_poly(rng);
        CHECK(LaurentPoly::parse(p.to_string()) == p);
    }
    CHECK(LaurentPoly::parse("0") == LaurentPoly());
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::parse("  -1/2 * x^-1 * y^2   +3*x ").to_string() == "-1/2*x^-1*y^2 + 3*x");
    CHECK_THROWS_AS(LaurentPoly::parse("x +"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("3//2"), std::invalid_argument);
}

TEST_CASE("display order is graded lexicographic") {
    CHECK(LaurentPoly::parse("5*x^3*y + x*y^3").to_string() == "x*y^3 + 5*x^3*y");
    CHECK(LaurentPoly::parse("x^4*z + 2*x^3*z").to_string() == "2*x^3*z + x^4*z");
}
