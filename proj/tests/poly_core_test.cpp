#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace artinian;

namespace {

const std::vector<std::string> xy{"x", "y"};

Polynomial P(const std::string& s, const std::vector<std::string>& vars = xy) { return parse_poly(s, vars); }

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational q = parse_rational("-6/4");
    EXPECT_EQ(q, make_rational(-3, 2));
    EXPECT_THROW(parse_rational("6/-4"), ParseError);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(to_string(parse_rational("0/7")), "0");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Rational, SimplestBetween) {
    EXPECT_EQ(simplest_between(make_rational(1, 3), make_rational(1, 2)), make_rational(1, 2));
    EXPECT_EQ(simplest_between(make_rational(-1, 10), make_rational(1, 10)), Rational(0));
    EXPECT_EQ(simplest_between(make_rational(32, 100), make_rational(34, 100)), make_rational(1, 3));
    EXPECT_EQ(simplest_between(make_rational(31, 100), make_rational(33, 100)), make_rational(5, 16));
    EXPECT_EQ(simplest_between(make_rational(-34, 100), make_rational(-32, 100)), make_rational(-1, 3));
}

TEST(Monomial, ArityCapAndOrder) {
    EXPECT_THROW(Monomial(9), DomainError);
    Monomial x(2, {1, 0});
    Monomial y(2, {0, 1});
    EXPECT_TRUE(GrlexLess{}(y, x));  // x > y
    EXPECT_TRUE(GrlexLess{}(x, Monomial(2, {0, 2})));
    EXPECT_EQ((x * y).degree(), 2);
    EXPECT_THROW(x * Monomial(3), ArityMismatch);
}

TEST(Parse, Examples) {
    Polynomial p = P("5*x^4 + 2*x*y^2");
    EXPECT_EQ(p.coefficient(Monomial(2, {4, 0})), 5);
    EXPECT_EQ(p.coefficient(Monomial(2, {1, 2})), 2);
    EXPECT_EQ(p.terms().size(), 2u);
    EXPECT_TRUE(P("0", {"x"}).is_zero());
    EXPECT_EQ(P("(x*y)^3"), Polynomial::monomial(Monomial(2, {3, 3})));
    EXPECT_EQ(P("-x + 1/2*y"), Polynomial::variable(2, 1) * make_rational(1, 2) - Polynomial::variable(2, 0));
}

TEST(Parse, ErrorsCarryPosition) {
    try {
        P("x + z");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(P("x +"), ParseError);
    EXPECT_THROW(P("x * (y"), ParseError);
    EXPECT_THROW(P("x ^ y"), ParseError);
}

TEST(Format, GrlexDescending) {
    EXPECT_EQ(format_poly(P("2*x*y^2 + 5*x^4"), xy), "5*x^4 + 2*x*y^2");
    EXPECT_EQ(format_poly(P("-x^2 + y - 3"), xy), "-x^2 + y - 3");
    EXPECT_EQ(format_poly(Polynomial(2), xy), "0");
}

TEST(Arithmetic, Examples) {
    EXPECT_EQ(P("x") * P("5*x^3"), P("5*x^4"));
    EXPECT_EQ(pow(P("x^5 + x^2*y^2 + y^5"), 0), P("1"));
    EXPECT_EQ(pow(P("x + y"), 2), P("x^2 + 2*x*y + y^2"));
    EXPECT_THROW(P("x") + Polynomial::variable(3, 0), ArityMismatch);
}

TEST(Derivative, Examples) {
    EXPECT_EQ(partial_derivative(P("x^5 + x^2*y^2 + y^5"), 0), P("5*x^4 + 2*x*y^2"));
    EXPECT_TRUE(partial_derivative(P("7"), 0).is_zero());
    EXPECT_EQ(partial_derivative(P("x^3*y^3"), 1), P("3*x^3*y^2"));
}

TEST(Evaluate, Examples) {
    Rational a = make_rational(1, 10);
    std::vector<std::string> xya{"x", "y", "a"};
    Polynomial g1 = P("x*(5*(x^3 + a*x^2 - a^4*x - a^5 - 2/5*a^4) + 2*y^2)", xya);
    EXPECT_EQ(evaluate(g1, {a * a, a * a, a}), 0);
    Polynomial p = P("3 + x*y - y^7");
    EXPECT_EQ(evaluate(p, {Rational(0), Rational(0)}), p.constant_term());
    Polynomial h = P("y^3 + a*y^2 - a^4*y - a^5 - 2/5*a^4", xya);
    Rational expected = make_rational(-4, 1000) - make_rational(2, 50000) + make_rational(1, 100000);
    EXPECT_EQ(evaluate(h, {Rational(0), -2 * a, a}), expected);
}

TEST(Truncate, Examples) {
    Polynomial f = P("x^5 + x^2*y^2 + y^5");
    EXPECT_EQ(truncate(f, 4), P("x^2*y^2"));
    EXPECT_EQ(truncate(f, 1000), f);
    EXPECT_TRUE(truncate(Polynomial(2), 3).is_zero());
}

class RingLaws : public ::testing::TestWithParam<unsigned> {};

TEST_P(RingLaws, AssociativeCommutativeDistributive) {
    oracle::RandomPolys gen(GetParam());
    for (int trial = 0; trial < 20; ++trial) {
        int n = gen.uniform(1, 3);
        Polynomial p = gen.poly(n, 6, 5);
        Polynomial q = gen.poly(n, 6, 5);
        Polynomial r = gen.poly(n, 6, 5);
        EXPECT_EQ((p + q) + r, p + (q + r));
        EXPECT_EQ(p + q, q + p);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_TRUE((p - p).is_zero());
    }
}

TEST_P(RingLaws, ParsePrintRoundTrip) {
    oracle::RandomPolys gen(GetParam());
    for (int trial = 0; trial < 20; ++trial) {
        int n = gen.uniform(1, 4);
        auto vars = default_variables(n);
        Polynomial p = gen.poly(n, 9, 6);
        EXPECT_EQ(parse_poly(format_poly(p, vars), vars), p) << format_poly(p, vars);
    }
}

TEST_P(RingLaws, LeibnizAndLinearity) {
    oracle::RandomPolys gen(GetParam());
    for (int trial = 0; trial < 20; ++trial) {
        int n = gen.uniform(1, 3);
        Polynomial p = gen.poly(n, 6, 4);
        Polynomial q = gen.poly(n, 6, 4);
        Rational c = gen.coefficient();
        for (int i = 0; i < n; ++i) {
            EXPECT_EQ(partial_derivative(p * q, i), p * partial_derivative(q, i) + q * partial_derivative(p, i));
            EXPECT_EQ(partial_derivative(p * c + q, i), partial_derivative(p, i) * c + partial_derivative(q, i));
        }
    }
}

TEST_P(RingLaws, EvaluationIsAHomomorphism) {
    oracle::RandomPolys gen(GetParam());
    for (int trial = 0; trial < 20; ++trial) {
        int n = gen.uniform(1, 3);
        Polynomial p = gen.poly(n, 6, 4);
        Polynomial q = gen.poly(n, 6, 4);
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i) v.push_back(gen.coefficient());
        EXPECT_EQ(evaluate(p * q, v), evaluate(p, v) * evaluate(q, v));
        EXPECT_EQ(evaluate(p + q, v), evaluate(p, v) + evaluate(q, v));
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingLaws, ::testing::Values(1u, 7u, 42u, 2024u));
