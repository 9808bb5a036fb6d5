#include "doctest.h"

#include "zdsolve/interval.hpp"
#include "zdsolve/parser.hpp"
#include "zdsolve/polynomial.hpp"
#include "zdsolve/rational.hpp"
#include "zdsolve/rng.hpp"

#include "test_util.hpp"

using namespace zdsolve;
using testutil::random_nonzero_poly;
using testutil::random_point;
using testutil::random_poly;

TEST_CASE("rational basics") {
    Rational a(1, 3), b(2, 3);
    CHECK(a + b == Rational(1));
    CHECK((a - a).is_zero());
    CHECK(Rational(4, 8) == Rational(1, 2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational::from_string("-22/7").str() == "-22/7");
    CHECK(Rational::from_string("5").str() == "5");
    CHECK_THROWS_AS(a / Rational(0), ZeroDivision);
    CHECK_THROWS_AS(Rational::from_string("1/0"), ZeroDivision);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("monomial orders: lex and grevlex") {
    auto ring = VarSet::make({"x", "y"});
    MonomialOrder lex = MonomialOrder::lex(2);
    MonomialOrder grevlex = MonomialOrder::grevlex(2);
    Monomial x2({2, 0}), y3({0, 3}), xy({1, 1}), y2({0, 2});
    // lex x>y: x^2 > y^3 even though degree is lower
    CHECK(lex.greater(x2, y3));
    CHECK(grevlex.greater(y3, x2));
    CHECK(lex.greater(xy, y2));
    // multiplicative: a>b implies ac>bc
    Monomial c({1, 2});
    CHECK(lex.greater(x2 * c, y3 * c));
    CHECK(grevlex.greater(y3 * c, x2 * c));
}

TEST_CASE("add: cancellation and identity") {
    auto ring = VarSet::make({"x"});
    QPoly x = QPoly::variable(ring, 0);
    QPoly one = QPoly::constant(ring, Rational(1));
    CHECK((x + one) + (-x) == one);

    SplitMix64 rng(7);
    QPoly p = random_poly(rng, ring, 4, 5);
    CHECK(p + QPoly::zero(ring) == p);
}

TEST_CASE("add: worked example p1 + p2 expands canonically") {
    auto ring = VarSet::make({"x1", "x2"});
    QPoly p1 = testutil::example_p1(ring);
    QPoly p2 = testutil::example_p2(ring);
    QPoly sum = p1 + p2;
    QPoly expected =
        parse_poly("x1^2*x2^2 + 16*x1^2*x2 - 27*x1^2 + x2^4 + 44*x2^2 - 256*x2 + 256", ring);
    CHECK(sum == expected);
    // independent check: values agree at sample points
    SplitMix64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto pt = random_point(rng, 2);
        CHECK(sum.evaluate(pt) == p1.evaluate(pt) + p2.evaluate(pt));
    }
}

TEST_CASE("mul: difference of squares, identity, worked square") {
    auto ring = VarSet::make({"x", "y"});
    QPoly x = QPoly::variable(ring, 0), y = QPoly::variable(ring, 1);
    CHECK((x - y) * (x + y) == parse_poly("x^2 - y^2", ring));

    SplitMix64 rng(3);
    QPoly f = random_poly(rng, ring, 3, 6);
    CHECK(f * QPoly::constant(ring, Rational(1)) == f);

    auto r2 = VarSet::make({"x1", "x2"});
    QPoly inner = parse_poly("-16 + x1^2 + 8*x2", r2);
    CHECK(inner * inner == parse_poly("x1^4 + 16*x1^2*x2 - 32*x1^2 + 64*x2^2 - 256*x2 + 256", r2));
}

TEST_CASE("leading terms under lex") {
    auto ring = VarSet::make({"x", "y"});
    MonomialOrder lex = MonomialOrder::lex(2);
    QPoly f = parse_poly("x^2 + y^3", ring);
    CHECK(f.leading_monomial(lex) == Monomial({2, 0}));

    QPoly c = QPoly::constant(ring, Rational(7));
    CHECK(c.leading_monomial(lex) == Monomial({0, 0}));
    CHECK(c.leading_coefficient(lex) == Rational(7));

    QPoly g = parse_poly("x*y + y^2", ring);
    CHECK(g.leading_monomial(lex) == Monomial({1, 1}));

    CHECK_THROWS_AS(QPoly::zero(ring).leading_term(lex), ZeroPolynomial);
}

TEST_CASE("LT(fg) = LT(f) LT(g) under both orders") {
    auto ring = VarSet::make({"x", "y", "z"});
    SplitMix64 rng(17);
    for (auto kind : {MonomialOrder::lex(3), MonomialOrder::grevlex(3)}) {
        for (int i = 0; i < 30; ++i) {
            QPoly f = random_nonzero_poly(rng, ring, 3, 4);
            QPoly g = random_nonzero_poly(rng, ring, 3, 4);
            auto [mf, cf] = f.leading_term(kind);
            auto [mg, cg] = g.leading_term(kind);
            QPoly prod = f * g;
            CHECK(prod.leading_monomial(kind) == mf * mg);
            CHECK(prod.leading_coefficient(kind) == cf * cg);
        }
    }
}

TEST_CASE("divide: exact, remainder, recombination") {
    auto ring = VarSet::make({"x", "y"});
    MonomialOrder lex = MonomialOrder::lex(2);
    QPoly x = QPoly::variable(ring, 0);

    auto r1 = parse_poly("x^2", ring).divide({x}, lex);
    CHECK(r1.quotients[0] == x);
    CHECK(r1.remainder.is_zero());

    auto r2 = parse_poly("x^2 + y^2 - 1", ring).divide({parse_poly("x - y", ring)}, lex);
    CHECK(r2.remainder == parse_poly("2*y^2 - 1", ring));

    // f = sum q_i d_i + r, exactly, on random inputs
    SplitMix64 rng(23);
    for (int i = 0; i < 25; ++i) {
        QPoly f = random_poly(rng, ring, 4, 6);
        std::vector<QPoly> ds = {random_nonzero_poly(rng, ring, 2, 3), random_nonzero_poly(rng, ring, 2, 3)};
        auto res = f.divide(ds, lex);
        QPoly back = res.remainder;
        for (std::size_t k = 0; k < ds.size(); ++k) back = back + res.quotients[k] * ds[k];
        CHECK(back == f);
        // no monomial of r divisible by any LT(d_i)
        for (const auto& [m, c] : res.remainder.terms())
            for (const auto& d : ds) CHECK_FALSE(d.leading_monomial(lex).divides(m));
    }
}

TEST_CASE("ring axioms on randomized inputs") {
    auto ring = VarSet::make({"x", "y", "z"});
    SplitMix64 rng(29);
    for (int i = 0; i < 20; ++i) {
        QPoly a = random_poly(rng, ring, 3, 4);
        QPoly b = random_poly(rng, ring, 3, 4);
        QPoly c = random_poly(rng, ring, 3, 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
    }
}

TEST_CASE("evaluate: worked example values") {
    auto ring = VarSet::make({"x1", "x2"});
    std::vector<Rational> origin = {Rational(0), Rational(0)};
    CHECK(testutil::example_p1(ring).evaluate(origin) == Rational(256));
    CHECK(testutil::example_p2(ring).evaluate(origin) == Rational(0));

    SplitMix64 rng(31);
    QPoly f = random_poly(rng, ring, 4, 6);
    CHECK(f.evaluate(origin) == f.constant_value());
    CHECK_THROWS_AS(f.evaluate({Rational(1)}), RingMismatch);
}

TEST_CASE("evaluate_interval: enclosure and soundness") {
    auto ring1 = VarSet::make({"x"});
    QPoly x = QPoly::variable(ring1, 0);
    RatInterval pt = evaluate_on_box(x, {RatInterval::point(Rational(1))});
    CHECK(pt.lo == Rational(1));
    CHECK(pt.hi == Rational(1));

    RatInterval sq = evaluate_on_box(x * x, {RatInterval(Rational(-1), Rational(2))});
    CHECK(sq.lo <= Rational(0));
    CHECK(sq.hi >= Rational(4));

    auto ring2 = VarSet::make({"x1", "x2"});
    QPoly p1 = testutil::example_p1(ring2);
    Rational h(1, 2000000);  // half-width 5e-7
    RatInterval b(-h, h);
    RatInterval enc = evaluate_on_box(p1, {b, b});
    CHECK(enc.contains(Rational(256)));
    CHECK(enc.width() < Rational(1, 100));

    // soundness on random samples inside random boxes
    SplitMix64 rng(37);
    for (int i = 0; i < 20; ++i) {
        QPoly f = random_poly(rng, ring2, 3, 5);
        Rational lo1(rng.uniform(-5, 0)), lo2(rng.uniform(-5, 0));
        RatInterval b1(lo1, lo1 + Rational(rng.uniform(1, 4))), b2(lo2, lo2 + Rational(rng.uniform(1, 4)));
        RatInterval enc2 = evaluate_on_box(f, {b1, b2});
        for (int s = 0; s < 10; ++s) {
            Rational t1(rng.uniform(0, 16), 16), t2(rng.uniform(0, 16), 16);
            std::vector<Rational> sample = {b1.lo + t1 * b1.width(), b2.lo + t2 * b2.width()};
            CHECK(enc2.contains(f.evaluate(sample)));
        }
    }
}

TEST_CASE("partial derivatives") {
    auto ring = VarSet::make({"x", "y"});
    CHECK(parse_poly("x^2*y", ring).partial_derivative(0) == parse_poly("2*x*y", ring));
    CHECK(QPoly::constant(ring, Rational(9)).partial_derivative(0).is_zero());

    // linearity and product rule on random inputs
    SplitMix64 rng(41);
    for (int i = 0; i < 15; ++i) {
        QPoly f = random_poly(rng, ring, 3, 4);
        QPoly g = random_poly(rng, ring, 3, 4);
        for (std::size_t v = 0; v < 2; ++v) {
            CHECK((f + g).partial_derivative(v) == f.partial_derivative(v) + g.partial_derivative(v));
            CHECK((f * g).partial_derivative(v) ==
                  f.partial_derivative(v) * g + f * g.partial_derivative(v));
        }
    }
}

TEST_CASE("parser: grammar, errors, round trip") {
    auto ring = VarSet::make({"x", "y"});
    CHECK(parse_poly("x^2 - 2*x*y + y^2", ring) == parse_poly("(x - y)^2", ring));
    CHECK(parse_poly("-x + 1/2", ring) == parse_poly("1/2 - x", ring));
    CHECK_THROWS_AS(parse_poly("2x", ring), ParseError);        // implicit multiplication
    CHECK_THROWS_AS(parse_poly("x + z", ring), ParseError);     // unknown variable
    CHECK_THROWS_AS(parse_poly("x^0", ring), ParseError);       // exponent must be positive
    CHECK_THROWS_AS(parse_poly("x^(2)", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("x +", ring), ParseError);

    SplitMix64 rng(43);
    for (int i = 0; i < 40; ++i) {
        QPoly p = random_poly(rng, ring, 5, 7);
        CHECK(parse_poly(p.str(), ring) == p);
    }
}

TEST_CASE("substitute and ring embedding") {
    auto ring = VarSet::make({"x", "y"});
    QPoly f = parse_poly("x^2 + y", ring);
    QPoly g = f.substitute(0, parse_poly("y - 1", ring));
    CHECK(g == parse_poly("y^2 - 2*y + 1 + y", ring));

    auto big = VarSet::make({"t", "x", "y"});
    QPoly lifted = f.extend_to(big);
    CHECK(lifted == parse_poly("x^2 + y", big));
    CHECK_THROWS_AS(f.extend_to(VarSet::make({"x", "z"})), RingMismatch);
}
