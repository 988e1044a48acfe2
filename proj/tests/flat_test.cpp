#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace artinian;

namespace {

Polynomial P(const std::string& s, int arity = 2) { return parse_poly(s, default_variables(arity)); }

AlgebraPtr closure(std::initializer_list<const char*> gens, int arity = 2) {
    std::vector<Polynomial> g;
    for (const char* s : gens) g.push_back(P(s, arity));
    return artinian_closure(LocalIdeal(g));
}

AlgebraPtr simple_locus() { return closure({"5*x^4 + 2*x*y^2", "2*x^2*y + 5*y^4"}); }
AlgebraPtr b_zero() { return closure({"5*x^4 + 3*x^2*y^3", "3*x^3*y^2 + 5*y^5", "y^6"}); }
AlgebraPtr dual_numbers() { return closure({"x^2"}, 1); }

}  // namespace

TEST(Prolong, Examples) {
    auto p1 = prolong(LocalIdeal({P("x", 1)})).prolonged.generators();
    ASSERT_EQ(p1.size(), 2u);
    EXPECT_EQ(p1[0], P("x"));
    EXPECT_EQ(p1[1], P("y"));
    auto p2 = prolong(LocalIdeal({P("x^2", 1)})).prolonged.generators();
    EXPECT_EQ(p2[0], P("x^2"));
    EXPECT_EQ(p2[1], P("2*x*y"));
    auto p4 = prolong(jacobian_ideal(P("x^5 + x^2*y^2 + y^5"))).prolonged;
    EXPECT_EQ(p4.arity(), 4);
    EXPECT_EQ(p4.generators().size(), 4u);
    EXPECT_EQ(p4.generators()[2], parse_poly("20*x^3*z + 2*y^2*z + 4*x*y*w", {"x", "y", "z", "w"}));
}

TEST(Prolong, GeneratorLevelSuffices) {
    oracle::RandomPolys gen(17);
    Polynomial g = P("5*x^4 + 2*x*y^2");
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial h = gen.poly(2, 4, 3);
        Polynomial lhs = tangent_derivative(h * g);
        Polynomial hg = shift_variables(h, 4, 0) * tangent_derivative(g);
        Polynomial rest = shift_variables(g, 4, 0) * tangent_derivative(h);
        EXPECT_EQ(lhs, hg + rest);
    }
}

TEST(Flat, Examples) {
    AlgebraPtr a = simple_locus();
    Polynomial f = P("x^5 + x^2*y^2 + y^5");
    EXPECT_TRUE(flat_member_c2(a, f));
    EXPECT_TRUE(flat_member_c1(a, f));
    EXPECT_TRUE(flat_member_c1(a, P("5*x^4 + 2*x*y^2")));
    EXPECT_FALSE(flat_member_c2(dual_numbers(), P("x", 1)));
    EXPECT_FALSE(flat_member_c1(dual_numbers(), P("x", 1)));
    EXPECT_THROW(flat_member_c2(a, P("x", 1)), ArityMismatch);
}

TEST(Flat, BZeroFlat) {
    EXPECT_TRUE(flat_member_c2(b_zero(), P("x^5 + x^3*y^3 + y^5")));
}

TEST(Flat, BZeroWithJacobianGenerators) {
    // With the y-partial of x^5 + x^3 y^3 + y^5 (5y^4 rather than 5y^5) b0 is flat.
    AlgebraPtr b = closure({"5*x^4 + 3*x^2*y^3", "3*x^3*y^2 + 5*y^4", "y^6"});
    Polynomial b0 = P("x^5 + x^3*y^3 + y^5");
    EXPECT_FALSE(member(b, b0));
    EXPECT_EQ(nilpotency_index(normal_form(b, b0)), 2);
    EXPECT_EQ(principal_ideal_dim(normal_form(b, b0)), 1);
    EXPECT_TRUE(flat_member_c2(b, b0));
    EXPECT_TRUE(flat_member_c1(b, b0));
    EXPECT_EQ(flat_member_c1(b_zero(), b0), flat_member_c2(b_zero(), b0));
}

TEST(Flat, BruteForceOracleForDualNumbers) {
    // g ranges over integer combinations of x^2..x^5; d(x - g)/dx = 1 - g' never lies in (x^2).
    AlgebraPtr d = dual_numbers();
    bool any = false;
    for (int c2 = -2; c2 <= 2; ++c2)
        for (int c3 = -2; c3 <= 2; ++c3)
            for (int c4 = -2; c4 <= 2; ++c4)
                for (int c5 = -2; c5 <= 2; ++c5) {
                    Polynomial g(1);
                    int coeffs[] = {c2, c3, c4, c5};
                    for (int k = 0; k < 4; ++k)
                        g.add_term(Monomial::variable(1, 0, k + 2), Rational(coeffs[k]));
                    any = any || member(d, partial_derivative(P("x", 1) - g, 0));
                }
    EXPECT_FALSE(any);
    EXPECT_EQ(any, flat_member_c2(d, P("x", 1)));
}

TEST(Flat, ConditionsAgreeOnCorpus) {
    struct Case {
        AlgebraPtr algebra;
        const char* element;
    };
    AlgebraPtr a = simple_locus();
    AlgebraPtr b0 = b_zero();
    AlgebraPtr d2 = dual_numbers();
    AlgebraPtr d3 = closure({"x^3"}, 1);
    AlgebraPtr box = closure({"x^3", "y^2"});
    AlgebraPtr a1 = artinian_closure(jacobian_ideal(family(1)));
    AlgebraPtr a2 = artinian_closure(jacobian_ideal(family(2)));
    std::vector<Case> corpus = {
        {a, "x^5 + x^2*y^2 + y^5"}, {a, "5*x^4 + 2*x*y^2"}, {a, "x"}, {a, "x*y"}, {a, "x^2*y^2"},
        {a, "x^3"}, {a, "1"}, {a, "0"}, {b0, "x^5 + x^3*y^3 + y^5"}, {b0, "x*y"},
        {b0, "y^5"}, {d2, "x"}, {d2, "x^2"}, {d3, "x^2"}, {d3, "x"}, {box, "x^2*y"},
        {box, "x*y"}, {box, "y"}, {a1, "x^2 + x^3"}, {a1, "x"}, {a2, "x^5 + y^5 + x^3*y^3"},
        {a2, "x^3*y^3"},
    };
    ASSERT_GE(corpus.size(), 20u);
    for (const auto& c : corpus) {
        Polynomial p = P(c.element, c.algebra->arity());
        EXPECT_EQ(flat_member_c1(c.algebra, p), flat_member_c2(c.algebra, p)) << c.element;
    }
    EXPECT_TRUE(flat_member_c2(a1, family(1)));
    EXPECT_TRUE(flat_member_c2(a2, family(2)));
}

TEST(Flat, FlatElementsFormSubspace) {
    AlgebraPtr a = simple_locus();
    Polynomial f = P("x^5 + x^2*y^2 + y^5");
    Polynomial g = P("x^2*y^2");
    ASSERT_TRUE(flat_member_c2(a, f));
    ASSERT_TRUE(flat_member_c2(a, g));
    EXPECT_TRUE(flat_member_c2(a, f + g));
    EXPECT_TRUE(flat_member_c2(a, f * make_rational(-7, 3)));
    EXPECT_TRUE(flat_member_c2(a, P("3")));
}

TEST(Tensor, DimensionExamples) {
    AlgebraPtr a = simple_locus();
    AlgebraPtr t = weil_tensor(a, WeilAlgebra::truncated_line(2));
    EXPECT_EQ(t->dim(), 22);
    EXPECT_EQ(oracle::stable_dim(t->ideal().generators()), 22);
    EXPECT_EQ(weil_tensor(a, WeilAlgebra::reals())->dim(), 11);
    AlgebraPtr e = WeilAlgebra::truncated_line(2).algebra();
    AlgebraPtr ed = tensor(e, e);
    EXPECT_EQ(ed->dim(), 4);
    std::vector<Monomial> expected = {Monomial(2), Monomial::variable(2, 1), Monomial::variable(2, 0),
                                      Monomial::variable(2, 0) * Monomial::variable(2, 1)};
    for (const auto& m : expected) EXPECT_GE(ed->basis_index(m), 0);
}

TEST(Tensor, Multiplicativity) {
    std::vector<AlgebraPtr> algebras = {dual_numbers(), closure({"x^3"}, 1), closure({"x^3", "y^2"}), simple_locus()};
    for (std::size_t i = 0; i < algebras.size(); ++i)
        for (std::size_t j = 0; j < algebras.size(); ++j) {
            if (algebras[i]->arity() + algebras[j]->arity() > 4) continue;
            AlgebraPtr t = tensor(algebras[i], algebras[j]);
            EXPECT_EQ(t->dim(), algebras[i]->dim() * algebras[j]->dim());
        }
}

TEST(Tensor, NonzeroTensorOfNonzeroElements) {
    AlgebraPtr a = simple_locus();
    AlgebraPtr b = closure({"x^3", "y^2"});
    oracle::RandomPolys gen(23);
    int tested = 0;
    for (int trial = 0; trial < 30 && tested < 8; ++trial) {
        QuotientElement ea = normal_form(a, gen.poly(2, 5, 3));
        QuotientElement eb = normal_form(b, gen.poly(2, 3, 2));
        if (ea.is_zero() || eb.is_zero()) continue;
        ++tested;
        EXPECT_TRUE(tensor_of_elements_nonzero(ea, eb));
    }
    EXPECT_GE(tested, 4);
}

TEST(TensorKernel, Cases) {
    AlgebraPtr a = simple_locus();
    AlgebraPtr w2 = WeilAlgebra::truncated_line(2).algebra();
    AlgebraPtr w3 = WeilAlgebra::truncated_line(3).algebra();
    AlgebraPtr wbox = closure({"x^2", "y^2"});

    auto aug = tensor_kernel_report(a, AlgebraMorphism::augmentation(w2));
    EXPECT_TRUE(aug.equal);
    EXPECT_EQ(aug.kernel_dim, 11 * (2 - 1));
    EXPECT_EQ(aug.ideal_dim, aug.kernel_dim);

    auto aug_box = tensor_kernel_report(dual_numbers(), AlgebraMorphism::augmentation(wbox));
    EXPECT_TRUE(aug_box.equal);
    EXPECT_EQ(aug_box.kernel_dim, 2 * (4 - 1));

    auto id = tensor_kernel_report(a, AlgebraMorphism::identity(w3));
    EXPECT_TRUE(id.equal);
    EXPECT_EQ(id.kernel_dim, 0);

    AlgebraMorphism trunc(w3, w2, std::vector<Polynomial>{P("x", 1)});
    auto tr = tensor_kernel_report(a, trunc);
    EXPECT_TRUE(tr.equal);
    EXPECT_EQ(tr.phi_kernel_dim, 1);
    EXPECT_EQ(tr.kernel_dim, 11);

    AlgebraMorphism corner(wbox, w2, std::vector<Polynomial>{P("x", 1), Polynomial(1)});
    EXPECT_TRUE(tensor_kernel_check(closure({"x^3"}, 1), corner));

    EXPECT_THROW(AlgebraMorphism(w2, w3, std::vector<Polynomial>{P("x^2", 1) * Rational(0) + P("1 + x", 1)}),
                 DomainError);
}

TEST(Pushout, SimpleLocusWithBZero) {
    AlgebraPtr a = simple_locus();
    QuotientElement a0 = normal_form(a, P("x^5 + x^2*y^2 + y^5"));
    QuotientElement b0 = normal_form(b_zero(), P("x^5 + x^3*y^3 + y^5"));
    EXPECT_TRUE(pushout_injective(a0, b0));
    EXPECT_TRUE(pushout_injective(b0, a0));
}

TEST(Pushout, SyntheticPairs) {
    AlgebraPtr d2 = dual_numbers();
    AlgebraPtr d3 = closure({"x^3"}, 1);
    AlgebraPtr box = closure({"x^2", "y^2"});
    QuotientElement eps = normal_form(d2, P("x", 1));
    EXPECT_TRUE(pushout_injective(eps, eps));
    EXPECT_EQ(pushout(eps, eps)->dim(), 2);
    EXPECT_TRUE(pushout_injective(normal_form(d3, P("x", 1)), normal_form(box, P("x + y"))));
    EXPECT_TRUE(pushout_injective(normal_form(d3, P("x^2", 1)), eps));
    AlgebraPtr a2 = artinian_closure(jacobian_ideal(family(2)));
    EXPECT_TRUE(pushout_injective(normal_form(a2, family(2)), eps));
}

TEST(Pushout, PreconditionGuards) {
    QuotientElement eps = normal_form(dual_numbers(), P("x", 1));
    QuotientElement x3 = normal_form(closure({"x^3"}, 1), P("x", 1));
    EXPECT_THROW(pushout_injective(eps, x3), PreconditionError);
    EXPECT_THROW(pushout_injective(normal_form(dual_numbers(), P("1", 1)), eps), PreconditionError);
    QuotientElement zero = QuotientElement::zero(dual_numbers());
    EXPECT_THROW(pushout_injective(zero, zero), PreconditionError);
}
