// Acceptance checks 1-13: one PASS/FAIL line each, with wall time against the limit.
// Supplementary lines are informational and do not affect the exit status.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

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

const char* kF = "x^5 + x^2*y^2 + y^5";
const char* kB = "x^5 + x^3*y^3 + y^5";

/// Collects failed sub-checks of one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream s;
            s << what << ": got " << got << ", want " << want;
            failures_.push_back(s.str());
        }
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

int failed = 0;

void criterion(const std::string& label, double limit_s, const std::function<void(Check&)>& body,
               bool counted = true) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_s) c.expect(false, "time limit exceeded");
    bool ok = c.failures().empty();
    if (!ok && counted) ++failed;
    std::printf("%s %s (%.2f s, limit %g s)\n", ok ? "PASS" : "FAIL", label.c_str(), secs, limit_s);
    for (const auto& f : c.failures()) std::printf("     - %s\n", f.c_str());
    std::fflush(stdout);
}

void b_zero_facts(Check& c, const AlgebraPtr& b0) {
    Polynomial b = P(kB);
    QuotientElement e = normal_form(b0, b);
    c.expect(!e.is_zero(), "b0 class is nonzero");
    c.expect(member(b0, b * b), "b0^2 = 0");
    c.equal(principal_ideal_dim(e), 1, "principal_ideal_dim(b0)");
    c.expect(flat_member_c2(b0, b), "flat_member_c2(b0)");
}

void second_splitting_facts(Check& c, const Rational& a) {
    SplitSystem s = second_splitting(2, a);
    RealRootCount r = count_real_roots(s, BoxRegion::cube(2, Rational(-1, 2), Rational(1, 2)));
    c.equal(r.count, 16, "certified real zeroes in [-1/2,1/2]^2");
    for (const auto& p : predicted_points(2, a)) {
        int near = 0;
        for (const auto& e : r.enclosures) {
            auto q = e.center();
            if (abs(q[0] - p[0]) < a / 2 && abs(q[1] - p[1]) < a / 2) ++near;
        }
        if (near != 1)
            c.expect(false, "predicted point (" + to_string(p[0]) + ", " + to_string(p[1]) + ") has " +
                                std::to_string(near) + " zeroes within a/2");
    }
    c.expect(transversality_check(s, r.enclosures), "all zeroes transverse");
    if (r.count == 16) {
        Interval d = interpolation_determinant(s, r.enclosures, grid_monomials(2, 3));
        c.expect(!d.contains_zero(), "interpolation determinant certified nonzero");
    } else {
        c.expect(false, "interpolation matrix on 16 monomials needs 16 zeroes");
    }
}

}  // namespace

int main() {
    criterion("01 quotient dimension of the simple locus", 1, [](Check& c) {
        c.equal(simple_locus()->dim(), 11, "dim");
    });

    criterion("02 principal ideal and nilpotency of [f]", 1, [](Check& c) {
        AlgebraPtr a = simple_locus();
        QuotientElement f = normal_form(a, P(kF));
        c.equal(principal_ideal_dim(f), 1, "principal_ideal_dim");
        c.equal(nilpotency_index(f).value_or(-1), 2, "nilpotency_index");
        auto gens = a->ideal().generators();
        int bound = a->certified_degree() + 1;
        c.expect(!oracle::truncated_member(gens, P(kF), bound), "oracle: f not in the ideal");
        c.expect(oracle::truncated_member(gens, P(kF) * P(kF), bound), "oracle: f^2 in the ideal");
    });

    criterion("03 B0 facts", 5, [](Check& c) { b_zero_facts(c, b_zero()); });
    criterion("03 supplementary: B0 with the y-partial 3x^3y^2+5y^4 (not counted)", 5,
              [](Check& c) { b_zero_facts(c, closure({"5*x^4 + 3*x^2*y^3", "3*x^3*y^2 + 5*y^4", "y^6"})); },
              false);

    criterion("04 family nilpotency and dimension, n = 1..3", 120, [](Check& c) {
        for (int n = 1; n <= 3; ++n) {
            AlgebraPtr an = artinian_closure(jacobian_ideal(family(n)));
            int dim = 1;
            for (int i = 0; i < n; ++i) dim *= 3 * n - 2;
            c.equal(an->dim(), dim, "dim A_" + std::to_string(n));
            c.equal(nilpotency_index(normal_form(an, family(n))).value_or(-1), n, "nilpotency n=" + std::to_string(n));
            if (n <= 2) c.equal(oracle::stable_dim(an->ideal().generators()), dim, "oracle dim n=" + std::to_string(n));
        }
    });

    criterion("05 Briancon-Skoda exponent corpus", 60, [](Check& c) {
        struct Case {
            const char* f;
            int arity;
        };
        std::vector<Case> corpus = {{"x^2 + y^2", 2},       {"x^3 + y^3", 2},           {"x^3*y + x*y^3", 2},
                                    {"x^4 + y^4 + x^2*y^2", 2}, {"x^2 + y^2 + z^2", 3},  {kF, 2},
                                    {"x^2*y + y^4", 2},     {"x^3 + x*y^3", 2},         {"x^5 + y^5 + x^3*y^3", 2},
                                    {"x^2 + x^3", 1},       {"x^4 + y^5 + x^2*y^2", 2}, {"x^3 + y^4 + z^5", 3}};
        for (const auto& k : corpus) {
            Polynomial f = P(k.f, k.arity);
            int e = bs_exponent(f);
            c.expect(e >= 1, std::string("k >= 1 for ") + k.f);
            if (is_homogeneous(f)) c.equal(e, 1, std::string("homogeneous ") + k.f);
        }
    });

    criterion("06 flat conditions 1 and 2 agree", 60, [](Check& c) {
        AlgebraPtr a = simple_locus();
        AlgebraPtr b0 = b_zero();
        AlgebraPtr d2 = closure({"x^2"}, 1);
        AlgebraPtr d3 = closure({"x^3"}, 1);
        AlgebraPtr box = closure({"x^3", "y^2"});
        AlgebraPtr a1 = artinian_closure(jacobian_ideal(family(1)));
        AlgebraPtr a2 = artinian_closure(jacobian_ideal(family(2)));
        std::vector<std::pair<AlgebraPtr, const char*>> corpus = {
            {a, kF},       {a, "5*x^4 + 2*x*y^2"}, {a, "x"},     {a, "x*y"},      {a, "x^2*y^2"},   {a, "x^3"},
            {a, "1"},      {b0, kB},               {b0, "x*y"},  {b0, "y^5"},     {d2, "x"},        {d2, "x^2"},
            {d3, "x^2"},   {d3, "x"},              {box, "x^2*y"}, {box, "x*y"}, {box, "y"},        {a1, "x^2 + x^3"},
            {a1, "x"},     {a2, "x^5 + y^5 + x^3*y^3"}, {a2, "x^3*y^3"}};
        c.expect(corpus.size() >= 20, "corpus size");
        for (const auto& [alg, e] : corpus) {
            Polynomial p = P(e, alg->arity());
            c.expect(flat_member_c1(alg, p) == flat_member_c2(alg, p), std::string("agreement on ") + e);
        }
    });

    criterion("07 coproduct exactness and multiplicativity", 30, [](Check& c) {
        AlgebraPtr a = simple_locus();
        AlgebraPtr d3 = closure({"x^3"}, 1);
        AlgebraPtr w2 = WeilAlgebra::truncated_line(2).algebra();
        AlgebraPtr w3 = WeilAlgebra::truncated_line(3).algebra();
        AlgebraPtr wbox = closure({"x^2", "y^2"});
        std::vector<std::pair<AlgebraPtr, AlgebraMorphism>> cases = {
            {a, AlgebraMorphism::augmentation(w2)},
            {a, AlgebraMorphism::augmentation(wbox)},
            {d3, AlgebraMorphism::augmentation(w3)},
            {a, AlgebraMorphism::identity(w3)},
            {a, AlgebraMorphism(w3, w2, std::vector<Polynomial>{P("x", 1)})},
            {d3, AlgebraMorphism(wbox, w2, std::vector<Polynomial>{P("x", 1), Polynomial(1)})},
        };
        for (std::size_t i = 0; i < cases.size(); ++i) {
            auto r = tensor_kernel_report(cases[i].first, cases[i].second);
            c.expect(r.equal, "kernel equals generated ideal, case " + std::to_string(i));
            c.equal(r.tensor_dim, cases[i].first->dim() * cases[i].second.source()->dim(),
                    "multiplicativity, case " + std::to_string(i));
        }
        c.equal(weil_tensor(a, WeilAlgebra::truncated_line(2))->dim(), 22, "A (x) k[e]/(e^2)");
        c.equal(weil_tensor(a, WeilAlgebra::reals())->dim(), 11, "A (x) k");
        c.equal(tensor(w2, w2)->dim(), 4, "k[e]/(e^2) (x) k[d]/(d^2)");
    });

    criterion("08 pushout injectivity", 30, [](Check& c) {
        QuotientElement f = normal_form(simple_locus(), P(kF));
        QuotientElement b = normal_form(b_zero(), P(kB));
        c.expect(pushout_injective(f, b), "simple locus [f] with B0 b0");
        AlgebraPtr d2 = closure({"x^2"}, 1);
        AlgebraPtr d3 = closure({"x^3"}, 1);
        QuotientElement eps = normal_form(d2, P("x", 1));
        c.expect(pushout_injective(eps, eps), "dual numbers with themselves");
        c.expect(pushout_injective(normal_form(d3, P("x", 1)), normal_form(closure({"x^2", "y^2"}), P("x + y"))),
                 "index 3 pair");
        c.expect(pushout_injective(normal_form(d3, P("x^2", 1)), eps), "x^2 in k[x]/(x^3) with e");
        AlgebraPtr a2 = artinian_closure(jacobian_ideal(family(2)));
        c.expect(pushout_injective(normal_form(a2, family(2)), eps), "[f_2] with e");
    });

    for (const Rational& a : {Rational(1, 100), Rational(1, 1000)}) {
        criterion("09 first splitting at a = " + to_string(a), 60, [&](Check& c) {
            SplitSystem s = first_splitting(a);
            RealRootCount r = count_real_roots(s, BoxRegion::cube(2, Rational(-1, 4), Rational(1, 4)));
            c.equal(r.count, 11, "certified real zeroes in [-1/4,1/4]^2");
            c.expect(transversality_check(s, r.enclosures), "all transverse");
            c.equal(complex_root_count(s), 16, "complex count");
            int on_x = 0;
            int on_y = 0;
            int origin = 0;
            for (const auto& e : r.enclosures) {
                bool x0 = e.exact[0] && *e.exact[0] == 0;
                bool y0 = e.exact[1] && *e.exact[1] == 0;
                origin += x0 && y0;
                on_x += x0 && !y0;
                on_y += y0 && !x0;
            }
            c.equal(origin, 1, "origin");
            c.equal(on_x, 3, "zeroes on x = 0");
            c.equal(on_y, 3, "zeroes on y = 0");
        });
    }

    criterion("10 sign table of h", 1, [](Check& c) {
        for (const Rational& a : {Rational(1, 10), Rational(1, 100)}) {
            auto t = h_sign_table(a);
            std::vector<int> want = {-1, 1, -1, 1};
            for (std::size_t i = 0; i < 4; ++i) c.equal(t[i].sign, want[i], "sign at point " + std::to_string(i));
            c.equal(t[0].value, -4 * pow(a, 3) - make_rational(2, 5) * pow(a, 4) + pow(a, 5), "h(-2a)");
            c.equal(t[3].value, 2 * pow(a, 3) - make_rational(2, 5) * pow(a, 4) - 2 * pow(a, 5), "h(a)");
        }
    });

    criterion("11 root gap exponent", 30, [](Check& c) {
        double slope = min_root_gap({make_rational(1, 100), make_rational(1, 1000), make_rational(1, 10000),
                                     make_rational(1, 100000)});
        c.expect(slope >= 1.4 && slope <= 1.6, "slope " + std::to_string(slope) + " in [1.4, 1.6]");
    });

    criterion("12 second splitting n = 2 at a = 1/100", 60,
              [](Check& c) { second_splitting_facts(c, Rational(1, 100)); });
    criterion("12 supplementary: second splitting n = 2 at a = 1/1000 (not counted)", 60,
              [](Check& c) { second_splitting_facts(c, Rational(1, 1000)); }, false);

    criterion("13 parameterized normal form certificates", 30, [](Check& c) {
        std::vector<std::string> vars = {"x", "y", "a"};
        std::vector<Polynomial> fs = {parse_poly("x^4", vars), parse_poly("x^2*y^2", vars), parse_poly("1", vars)};
        oracle::RandomPolys gen(2024);
        for (int i = 0; i < 3; ++i) fs.push_back(gen.poly(3, 6, 6));
        for (int order = 1; order <= 3; ++order)
            for (const auto& f : fs) {
                ParamNormalForm nf = param_normal_form(f, order);
                std::string tag = format_poly(f, vars) + " N=" + std::to_string(order);
                c.expect(nf.certificate_holds, "certificate for " + tag);
                c.expect(nf.cross_check_holds, "membership cross-check for " + tag);
            }
    });

    std::printf("%s\n", failed == 0 ? "ALL PASS" : (std::to_string(failed) + " FAILED").c_str());
    return failed == 0 ? 0 : 1;
}
