#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace artinian;

namespace {

Polynomial P(const std::string& s, int arity = 2) { return parse_poly(s, default_variables(arity)); }

}  // namespace

TEST(JacobianIdeal, Examples) {
    auto gens = jacobian_ideal(P("x^5 + x^2*y^2 + y^5")).generators();
    ASSERT_EQ(gens.size(), 2u);
    EXPECT_EQ(gens[0], P("5*x^4 + 2*x*y^2"));
    EXPECT_EQ(gens[1], P("2*x^2*y + 5*y^4"));
    auto round = jacobian_ideal(P("x^2 + y^2")).generators();
    EXPECT_EQ(round[0], P("2*x"));
    EXPECT_EQ(round[1], P("2*y"));
    auto f2 = jacobian_ideal(family(2)).generators();
    EXPECT_EQ(f2[0], P("5*x^4 + 3*x^2*y^3"));
    EXPECT_EQ(f2[1], P("3*x^3*y^2 + 5*y^4"));
}

TEST(JacobianIdeal, Guards) {
    EXPECT_THROW(jacobian_ideal(P("1 + x^2")), DomainError);
    EXPECT_THROW(jacobian_ideal(P("x + y^2")), DomainError);
    EXPECT_THROW(bs_exponent(P("x^2")), NotArtinian);  // non-isolated: y is free
}

TEST(Family, Instantiation) {
    EXPECT_EQ(family(1), P("x^2 + x^3", 1));
    EXPECT_EQ(family(2), P("x^5 + y^5 + x^3*y^3"));
    EXPECT_EQ(family(3), P("x^8 + y^8 + z^8 + x^3*y^3*z^3", 3));
    EXPECT_THROW(family(0), DomainError);
    EXPECT_THROW(family(4), DomainError);
}

TEST(BsExponent, Examples) {
    EXPECT_EQ(bs_exponent(P("x^2 + y^2")), 1);
    Polynomial f = P("x^5 + x^2*y^2 + y^5");
    EXPECT_EQ(bs_exponent(f), 2);
    // Oracle: dense membership of f and f^2 in the Jacobian ideal modulo a high power of m.
    auto delta = jacobian_ideal(f).generators();
    EXPECT_FALSE(oracle::truncated_member(delta, f, 12));
    EXPECT_TRUE(oracle::truncated_member(delta, f * f, 12));
    EXPECT_EQ(bs_exponent(family(3)), 3);
}

TEST(BsExponent, Corpus) {
    struct Case {
        const char* f;
        int arity;
        bool homogeneous;
    };
    std::vector<Case> corpus = {
        {"x^2 + y^2", 2, true},
        {"x^3 + y^3", 2, true},
        {"x^3*y + x*y^3", 2, true},
        {"x^4 + y^4 + x^2*y^2", 2, true},
        {"x^2 + y^2 + z^2", 3, true},
        {"x^5 + x^2*y^2 + y^5", 2, false},
        {"x^2*y + y^4", 2, false},
        {"x^3 + x*y^3", 2, false},
        {"x^5 + y^5 + x^3*y^3", 2, false},
        {"x^2 + x^3", 1, false},
        {"x^4 + y^5 + x^2*y^2", 2, false},
        {"x^3 + y^4 + z^5", 3, false},
    };
    for (const auto& c : corpus) {
        Polynomial f = P(c.f, c.arity);
        EXPECT_EQ(is_homogeneous(f), c.homogeneous) << c.f;
        int k = bs_exponent(f);
        EXPECT_GE(k, 1) << c.f;
        EXPECT_LE(k, jacobian_data(f).milnor_algebra->dim()) << c.f;
        if (c.homogeneous) {
            EXPECT_EQ(k, 1) << c.f;
        }
        // Minimality: f^(k-1) is not in the ideal, f^k is.
        AlgebraPtr milnor = jacobian_data(f).milnor_algebra;
        EXPECT_TRUE(member(milnor, pow(f, static_cast<unsigned>(k)))) << c.f;
        if (k > 1) {
            EXPECT_FALSE(member(milnor, pow(f, static_cast<unsigned>(k - 1)))) << c.f;
        }
    }
}

TEST(Family, LawsForSmallIndices) {
    for (int n = 1; n <= 3; ++n) {
        JacobianData d = jacobian_data(family(n));
        int expected = 1;
        for (int i = 0; i < n; ++i) expected *= 3 * n - 2;
        EXPECT_EQ(d.milnor_algebra->dim(), expected);
        if (n <= 2) {
            EXPECT_EQ(oracle::stable_dim(d.delta.generators()), expected);
        }
        EXPECT_EQ(nilpotency_index(normal_form(d.milnor_algebra, family(n))), n);
    }
}
