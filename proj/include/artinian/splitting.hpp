// The two parameterized splittings of the singularities: real and complex root counts,
// transversality, root gaps, parameterized normal forms and interpolation determinants.
#pragma once

#include <cmath>
#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artinian/groebner.hpp"
#include "artinian/interval.hpp"
#include "artinian/local_algebra.hpp"
#include "artinian/univariate.hpp"

namespace artinian {

inline constexpr int kDefaultRefinementBudget = 400;
inline constexpr int kMaxParamOrder = 6;

/// Polynomials in (x_1..x_n, a) with a as the last variable.
struct ParamSystem {
    std::string family;
    int n = 0;
    std::vector<Polynomial> polys;

    int param_index() const noexcept { return n; }
};

/// A parameterized system with a rational value substituted for a.
struct SplitSystem {
    std::string family;
    int n = 0;
    Rational a;
    std::vector<Polynomial> polys;

    int arity() const noexcept { return n; }
};

inline SplitSystem instantiate(const ParamSystem& p, const Rational& a) {
    if (a < 0) throw DomainError("the parameter a must be nonnegative");
    SplitSystem s{p.family, p.n, a, {}};
    for (const auto& g : p.polys) s.polys.push_back(drop_variable(substitute(g, p.param_index(), a), p.param_index()));
    return s;
}

namespace detail {

/// h(t) = t^3 + a t^2 - a^4 t - a^5 - (2/5) a^4 over (vars, a).
inline Polynomial h_param(int arity, int t, int a) {
    auto mono = [&](int et, int ea, const Rational& c) {
        Monomial m(arity);
        m.set(t, et);
        m.set(a, ea);
        return Polynomial::monomial(m, c);
    };
    return mono(3, 0, Rational(1)) + mono(2, 1, Rational(1)) + mono(1, 4, Rational(-1)) + mono(0, 5, Rational(-1)) +
           mono(0, 4, make_rational(-2, 5));
}

}  // namespace detail

/// g1 = x (5 h(x) + 2 y^2), g2 = y (5 h(y) + 2 x^2) in (x, y, a).
inline ParamSystem first_splitting_param() {
    Polynomial x = Polynomial::variable(3, 0);
    Polynomial y = Polynomial::variable(3, 1);
    Polynomial g1 = x * (detail::h_param(3, 0, 2) * Rational(5) + y * y * Rational(2));
    Polynomial g2 = y * (detail::h_param(3, 1, 2) * Rational(5) + x * x * Rational(2));
    return {"first", 2, {std::move(g1), std::move(g2)}};
}

inline SplitSystem first_splitting(const Rational& a) { return instantiate(first_splitting_param(), a); }

/// h_i = (3n-1) prod_{k=1}^{3n-2} (x_i - k a) + 3 (x_1...x_n)^3 / x_i in (x_1..x_n, a).
inline ParamSystem second_splitting_param(int n) {
    if (n < 1 || n > 3) throw DomainError("second splitting index must be in 1..3");
    int arity = n + 1;
    Polynomial a = Polynomial::variable(arity, n);
    ParamSystem s{"second", n, {}};
    for (int i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(arity, i);
        Polynomial prod = Polynomial::constant(arity, Rational(3 * n - 1));
        for (int k = 1; k <= 3 * n - 2; ++k) prod = prod * (xi - a * Rational(k));
        Monomial m(arity);
        for (int j = 0; j < n; ++j) m.set(j, j == i ? 2 : 3);
        s.polys.push_back(prod + Polynomial::monomial(m, Rational(3)));
    }
    return s;
}

inline SplitSystem second_splitting(int n, const Rational& a) { return instantiate(second_splitting_param(n), a); }

/// The points (k_1 a, ..., k_n a), 1 <= k_i <= 3n-2, in lexicographic order of k.
inline std::vector<std::vector<Rational>> predicted_points(int n, const Rational& a) {
    std::vector<std::vector<Rational>> out;
    std::vector<int> k(static_cast<std::size_t>(n), 1);
    for (;;) {
        std::vector<Rational> p;
        for (int v : k) p.push_back(a * v);
        out.push_back(std::move(p));
        int i = n - 1;
        while (i >= 0 && k[static_cast<std::size_t>(i)] == 3 * n - 2) k[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++k[static_cast<std::size_t>(i)];
    }
    return out;
}

struct BoxRegion {
    Box sides;

    static BoxRegion cube(int n, const Rational& lo, const Rational& hi) {
        return {Box(static_cast<std::size_t>(n), Interval(lo, hi))};
    }
    int dimension() const noexcept { return static_cast<int>(sides.size()); }
};

/// A box certified to contain exactly one real solution. Coordinates known exactly are
/// recorded in `exact`; the box keeps positive width in every coordinate.
struct RootEnclosure {
    Box box;
    std::vector<std::optional<Rational>> exact;

    bool is_exact() const {
        for (const auto& e : exact)
            if (!e) return false;
        return true;
    }

    /// The box with exactly known coordinates collapsed to points.
    Box tight_box() const {
        Box b = box;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (exact[i]) b[i] = Interval(*exact[i]);
        return b;
    }

    std::vector<Rational> center() const {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < box.size(); ++i) c.push_back(exact[i] ? *exact[i] : box[i].midpoint());
        return c;
    }

    /// -log2 of the widest non-exact side (large when the enclosure is tight).
    long precision_bits() const {
        Rational w(0);
        for (std::size_t i = 0; i < box.size(); ++i)
            if (!exact[i]) w = std::max(w, box[i].width());
        if (w == 0) return std::numeric_limits<long>::max();
        return -detail::binary_exponent(w);
    }
};

struct RealRootCount {
    int count = 0;
    std::vector<RootEnclosure> enclosures;
};

namespace detail {

inline int working_bits(const Box& box) {
    Rational w = max_width(box);
    long bits = kDefaultIntervalBits;
    if (w > 0) bits = std::max(bits, 2 * (-binary_exponent(w)) + 64);
    return static_cast<int>(std::min(bits, 1L << 16));
}

/// Decides whether the isolating intervals xi x yj hold a solution; refines them in place.
inline std::optional<RootEnclosure> decide_candidate(const SquareSystem& sys, const UPoly& px, RootInterval& xi,
                                                     const UPoly& py, RootInterval& yj, int budget) {
    for (int step = 0; step <= budget; ++step) {
        if (xi.exact && yj.exact) {
            std::vector<Rational> p{*xi.exact, *yj.exact};
            for (const auto& v : sys.value(p))
                if (v != 0) return std::nullopt;
            return RootEnclosure{{Interval(xi.lo, xi.hi), Interval(yj.lo, yj.hi)}, {xi.exact, yj.exact}};
        }
        Box b{Interval(xi.lo, xi.hi), Interval(yj.lo, yj.hi)};
        int bits = working_bits(b);
        if (sys.excludes(b, bits)) return std::nullopt;
        KrawczykResult k = krawczyk(sys, b, bits);
        if (k.outcome == KrawczykOutcome::no_root) return std::nullopt;
        if (k.outcome == KrawczykOutcome::unique_root) return RootEnclosure{std::move(k.contracted), {xi.exact, yj.exact}};
        if (xi.width() >= yj.width() || yj.exact) bisect_root(px, xi);
        if (yj.width() >= xi.width() || xi.exact) bisect_root(py, yj);
        try_snap_rational(px, xi);
        try_snap_rational(py, yj);
    }
    throw RefinementBudgetExceeded("candidate pair could not be decided within the refinement budget");
}

}  // namespace detail

/// Resultant of a bivariate system eliminating `eliminate` (0 for x, 1 for y).
inline UPoly system_resultant(const SplitSystem& s, int eliminate) {
    if (s.arity() != 2 || s.polys.size() != 2) throw DomainError("resultants need a square bivariate system");
    return resultant(s.polys[0], s.polys[1], eliminate);
}

/// Exact count of the real solutions of a square bivariate system in a box, each with a
/// certified enclosure. Candidates are pairs of roots of Res_y and Res_x.
inline RealRootCount count_real_roots(const SplitSystem& s, const BoxRegion& region,
                                      int budget = kDefaultRefinementBudget) {
    if (s.arity() != 2 || s.polys.size() != 2) throw DomainError("exact real counting supports square bivariate systems");
    if (region.dimension() != 2) throw ArityMismatch("box dimension differs from system arity");
    UPoly rx = system_resultant(s, 1);
    UPoly ry = system_resultant(s, 0);
    if (rx.is_zero() || ry.is_zero())
        throw DegenerateResultant("resultant vanishes identically: the system is not zero-dimensional");
    rx = squarefree_part(rx);
    ry = squarefree_part(ry);
    auto xs = isolate_real_roots(rx, region.sides[0].lo(), region.sides[0].hi());
    auto ys = isolate_real_roots(ry, region.sides[1].lo(), region.sides[1].hi());
    SquareSystem sys(s.polys);
    RealRootCount out;
    for (auto& xi : xs)
        for (auto& yj : ys) {
            auto enc = detail::decide_candidate(sys, rx, xi, ry, yj, budget);
            if (enc) out.enclosures.push_back(std::move(*enc));
        }
    out.count = static_cast<int>(out.enclosures.size());
    return out;
}

/// dim Q[x]/(system), i.e. the number of complex solutions with multiplicity.
inline int complex_root_count(const SplitSystem& s) { return global_quotient_dim(s.polys); }

/// Shrinks an enclosure by one Krawczyk contraction (no-op for fully exact enclosures).
inline void refine_enclosure(const SplitSystem& s, RootEnclosure& e) {
    if (e.is_exact()) return;
    SquareSystem sys(s.polys);
    KrawczykResult k = krawczyk(sys, e.box, detail::working_bits(e.box));
    if (k.outcome == KrawczykOutcome::no_root) throw Error("enclosure lost its root during refinement");
    if (k.outcome == KrawczykOutcome::unique_root) e.box = std::move(k.contracted);
    else {
        // Contraction stalled; bisecting is not safe without a new existence proof.
        throw RefinementBudgetExceeded("enclosure could not be contracted");
    }
}

/// Certifies det J != 0 on each enclosure (refining as needed). A fully exact enclosure is
/// decided by exact evaluation.
inline bool transversality_check(const SplitSystem& s, std::vector<RootEnclosure> enclosures,
                                 int budget = kDefaultRefinementBudget) {
    SquareSystem sys(s.polys);
    for (auto& e : enclosures) {
        if (e.is_exact()) {
            if (determinant(sys.jacobian_at(e.center())) == 0) return false;
            continue;
        }
        bool certified = false;
        for (int step = 0; step <= budget && !certified; ++step) {
            Box b = e.tight_box();
            int bits = detail::working_bits(e.box);
            if (interval_determinant(sys.jacobian_on(b, bits), bits).certified_sign() != 0) certified = true;
            else refine_enclosure(s, e);
        }
        if (!certified) throw RefinementBudgetExceeded("Jacobian sign not certified within the refinement budget");
    }
    return true;
}

/// Roots of the second splitting near the predicted points (k_1 a, ..., k_n a), any n.
/// Each seed is polished by Newton steps, then certified by Krawczyk on a small box;
/// a root is kept only if its enclosure lies within a/2 of its seed.
inline RealRootCount seeded_roots(const SplitSystem& s, int budget = 64) {
    if (s.family != "second") throw DomainError("seeded roots are defined for the second splitting");
    if (s.a <= 0) throw DomainError("seeded roots need a > 0");
    SquareSystem sys(s.polys);
    auto n = static_cast<std::size_t>(s.n);
    RealRootCount out;
    Rational tolerance = s.a / (Rational(1) << 200);
    for (const auto& seed : predicted_points(s.n, s.a)) {
        std::vector<Rational> x = seed;
        for (int step = 0; step < budget; ++step) {
            auto jinv = inverse(sys.jacobian_at(x));
            if (!jinv) break;
            std::vector<Rational> fx = sys.value(x);
            Rational change(0);
            for (std::size_t i = 0; i < n; ++i) {
                Rational d(0);
                for (std::size_t j = 0; j < n; ++j) d += (*jinv)[i][j] * fx[j];
                x[i] = detail::round_down(x[i] - d, 256);
                change = std::max(change, Rational(abs(d)));
            }
            if (change < tolerance) break;
        }
        Rational radius = s.a / (Rational(1) << 120);
        for (int attempt = 0; attempt < 40 && radius < s.a / 2; ++attempt, radius *= 4) {
            Box b;
            for (const auto& c : x) b.emplace_back(c - radius, c + radius);
            KrawczykResult k = krawczyk(sys, b, detail::working_bits(b));
            if (k.outcome == KrawczykOutcome::no_root) continue;
            if (k.outcome != KrawczykOutcome::unique_root) continue;
            bool near = true;
            for (std::size_t i = 0; i < n; ++i) near = near && abs(x[i] - seed[i]) + radius < s.a / 2;
            if (near) out.enclosures.push_back({std::move(k.contracted), std::vector<std::optional<Rational>>(n)});
            break;
        }
    }
    out.count = static_cast<int>(out.enclosures.size());
    return out;
}

/// h(t) = t^3 + a t^2 - a^4 t - a^5 - (2/5) a^4, whose roots are the nonzero axis zeroes.
inline UPoly h_polynomial(const Rational& a) {
    return UPoly({-pow(a, 5) - make_rational(2, 5) * pow(a, 4), -pow(a, 4), a, Rational(1)});
}

struct SignEntry {
    Rational point;
    Rational value;
    int sign = 0;
};

/// h at -2a, -a/2, 0, a.
inline std::vector<SignEntry> h_sign_table(const Rational& a) {
    if (a <= 0) throw DomainError("sign table needs a > 0");
    UPoly h = h_polynomial(a);
    std::vector<SignEntry> out;
    for (const Rational& p : {Rational(-2 * a), Rational(-a / 2), Rational(0), a}) {
        Rational v = h(p);
        out.push_back({p, v, sgn(v)});
    }
    return out;
}

/// Least-squares slope of log y against log x.
inline double log_log_slope(const std::vector<std::pair<double, double>>& logs) {
    if (logs.size() < 2) throw DomainError("a slope needs at least two samples");
    double n = static_cast<double>(logs.size());
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    for (const auto& [x, y] : logs) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) throw DomainError("samples must have distinct parameters");
    return (n * sxy - sx * sy) / denom;
}

struct RootGapSample {
    Rational a;
    std::vector<RootInterval> roots;
    /// Enclosure of the smallest distance between two roots.
    Interval gap;
};

struct RootGapReport {
    std::vector<RootGapSample> samples;
    double slope = 0;
};

/// Isolates the four real roots of t h(t) and encloses their minimum pairwise gap.
inline RootGapSample root_gap_sample(const Rational& a) {
    if (a <= 0) throw DomainError("root gaps need a > 0");
    UPoly p = UPoly::x() * h_polynomial(a);
    auto roots = isolate_all_real_roots(p);
    if (roots.size() != 4) throw Error("isolation failure: t h(t) does not have four real roots");
    UPoly q = squarefree_part(p);
    for (;;) {
        Rational gap_mid = -1;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            Rational d = roots[i + 1].midpoint() - roots[i].midpoint();
            if (gap_mid < 0 || d < gap_mid) gap_mid = d;
        }
        Rational widest(0);
        for (const auto& r : roots) widest = std::max(widest, r.exact ? Rational(0) : r.width());
        if (widest * (1 << 20) <= gap_mid) break;
        for (auto& r : roots)
            if (!r.exact) refine_root(q, r, gap_mid / (1 << 22));
    }
    // Roots are ascending, so the minimum gap is between neighbours.
    std::optional<Interval> best;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        Interval lo = roots[i].exact ? Interval(*roots[i].exact) : Interval(roots[i].lo, roots[i].hi);
        Interval hi = roots[i + 1].exact ? Interval(*roots[i + 1].exact) : Interval(roots[i + 1].lo, roots[i + 1].hi);
        Interval d = hi - lo;
        if (!best || d.hi() < best->lo() || (d.intersects(*best) && d.midpoint() < best->midpoint())) best = d;
    }
    return {a, std::move(roots), *best};
}

inline RootGapReport root_gap_analysis(const std::vector<Rational>& a_samples) {
    if (a_samples.size() < 2) throw DomainError("a slope needs at least two samples");
    for (std::size_t i = 1; i < a_samples.size(); ++i)
        if (!(a_samples[i] < a_samples[i - 1])) throw DomainError("samples must be strictly decreasing");
    RootGapReport out;
    std::vector<std::pair<double, double>> logs;
    for (const auto& a : a_samples) {
        out.samples.push_back(root_gap_sample(a));
        logs.emplace_back(log_abs(a), log_abs(out.samples.back().gap.midpoint()));
    }
    out.slope = log_log_slope(logs);
    return out;
}

/// Fitted exponent e in min gap ~ C a^e.
inline double min_root_gap(const std::vector<Rational>& a_samples) { return root_gap_analysis(a_samples).slope; }

/// {x^i y^j : i, j <= 2} together with x^3 and y^3.
inline std::vector<Monomial> default_param_monomials() {
    std::vector<Monomial> out;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) out.push_back(Monomial(2, {i, j}));
    out.push_back(Monomial(2, {3, 0}));
    out.push_back(Monomial(2, {0, 3}));
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

/// {x^e : e_i <= max_exponent for all i}, ascending grlex.
inline std::vector<Monomial> grid_monomials(int n, int max_exponent) {
    std::vector<Monomial> out;
    for (const auto& m : monomials_below(n, n * max_exponent + 1)) {
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && m[i] <= max_exponent;
        if (ok) out.push_back(m);
    }
    return out;
}

struct ParamNormalForm {
    std::vector<Monomial> monomials;
    /// lambda[i] is a polynomial in a alone (arity n + 1), of degree < order.
    std::vector<Polynomial> lambda;
    std::vector<Polynomial> multipliers;
    Polynomial remainder;
    Polynomial tail;
    int order = 0;
    /// Every monomial of this total degree in (x, a) lies in (g, a^order).
    int certified_degree = 0;
    bool certificate_holds = false;
    bool cross_check_holds = false;
};

namespace detail {

/// Coefficients of a^j (as polynomials in the remaining variables, arity n) by j.
inline std::map<int, Polynomial> slices_in(const Polynomial& p, int param) {
    std::map<int, Polynomial> out;
    int n = p.arity() - 1;
    for (const auto& [m, c] : p.terms()) {
        Monomial t(n);
        for (int i = 0, j = 0; i < p.arity(); ++i)
            if (i != param) t.set(j++, m[i]);
        auto [it, inserted] = out.try_emplace(m[param], Polynomial(n));
        it->second.add_term(t, c);
    }
    return out;
}

inline Polynomial a_power(int arity, int param, int e, const Rational& c = Rational(1)) {
    return Polynomial::monomial(Monomial::variable(arity, param, e), c);
}

}  // namespace detail

/// Writes f (in x and a) as sum lambda_s(a) s + sum multiplier_k g_k + a^N remainder + tail
/// with every tail term in the maximal ideal to the certified degree, so that
/// f = sum lambda_s(a) s modulo (g, a^N) in the local ring. Each a-slice is reduced with
/// the a = 0 algebra; the error of using g|_{a=0} in place of g moves to higher slices.
inline ParamNormalForm param_normal_form(const Polynomial& f_in, int order, const ParamSystem& system,
                                         std::vector<Monomial> monomials, int degree_cap = kDefaultDegreeCap) {
    if (order < 1) throw DomainError("order must be positive");
    if (order > kMaxParamOrder) throw DomainError("order exceeds the configured cap");
    int n = system.n;
    int arity = n + 1;
    int param = system.param_index();
    Polynomial f = f_in;
    if (f.arity() == n) f = shift_variables(f_in, arity, 0);
    if (f.arity() != arity) throw ArityMismatch("f must be a polynomial in the system variables and a");

    std::vector<Polynomial> g0;
    std::vector<Polynomial> delta;
    for (const auto& g : system.polys) {
        auto slices = detail::slices_in(g, param);
        g0.push_back(slices.count(0) ? slices.at(0) : Polynomial(n));
        Polynomial d(arity);
        for (const auto& [j, s] : slices)
            if (j > 0) d += shift_variables(s, arity, 0) * detail::a_power(arity, param, j - 1);
        delta.push_back(std::move(d));
    }
    LocalIdeal ideal0(g0);
    AlgebraPtr a0 = artinian_closure(ideal0, degree_cap);
    if (static_cast<int>(monomials.size()) != a0->dim())
        throw PreconditionError("monomial set size differs from the dimension of the a = 0 algebra");
    // Columns: normal forms of the chosen monomials; must be invertible.
    std::vector<std::vector<Rational>> change(static_cast<std::size_t>(a0->dim()),
                                              std::vector<Rational>(monomials.size()));
    for (std::size_t c = 0; c < monomials.size(); ++c) {
        if (monomials[c].arity() != n) throw ArityMismatch("monomial arity differs from the system");
        auto nf = a0->reduce(Polynomial::monomial(monomials[c]));
        for (std::size_t r = 0; r < nf.size(); ++r) change[r][c] = nf[r];
    }
    auto change_inv = inverse(change);
    if (!change_inv) throw PreconditionError("monomial set is not a basis of the a = 0 algebra");

    std::vector<Polynomial> with_power = system.polys;
    with_power.push_back(detail::a_power(arity, param, order));
    AlgebraPtr full = artinian_closure(LocalIdeal(with_power), degree_cap);
    int bound = std::max(full->certified_degree(), a0->certified_degree());
    detail::TruncatedSpan span = detail::truncated_span(ideal0, bound, true);

    ParamNormalForm out;
    out.monomials = monomials;
    out.order = order;
    out.certified_degree = full->certified_degree();
    out.lambda.assign(monomials.size(), Polynomial(arity));
    out.multipliers.assign(system.polys.size(), Polynomial(arity));
    out.tail = Polynomial(arity);

    auto slices = detail::slices_in(f, param);
    for (int j = 0; j < order; ++j) {
        auto it = slices.find(j);
        if (it == slices.end() || it->second.is_zero()) continue;
        const Polynomial& slice = it->second;
        std::vector<Rational> coords = a0->reduce(slice);
        Polynomial residual = slice;
        Polynomial aj = detail::a_power(arity, param, j);
        for (std::size_t s = 0; s < monomials.size(); ++s) {
            Rational lam(0);
            for (std::size_t r = 0; r < coords.size(); ++r) lam += (*change_inv)[s][r] * coords[r];
            if (lam == 0) continue;
            out.lambda[s] += detail::a_power(arity, param, j, lam);
            residual -= Polynomial::monomial(monomials[s], lam);
        }
        auto [rest, combination] = span.echelon.reduce_with_provenance(span.to_columns(residual));
        if (!rest.empty()) throw Error("slice residual is not in the truncated ideal span");
        std::vector<Polynomial> q(system.polys.size(), Polynomial(n));
        for (const auto& [idx, c] : combination) {
            const auto& [m, k] = span.products[static_cast<std::size_t>(idx)];
            q[static_cast<std::size_t>(k)].add_term(m, c);
        }
        Polynomial tail = residual;
        for (std::size_t k = 0; k < q.size(); ++k) tail -= q[k] * g0[k];
        for (const auto& [m, c] : tail.terms())
            if (m.degree() < bound) throw Error("slice tail has a term below the truncation bound");
        out.tail += shift_variables(tail, arity, 0) * aj;
        Polynomial correction(arity);
        for (std::size_t k = 0; k < q.size(); ++k) {
            Polynomial qk = shift_variables(q[k], arity, 0) * aj;
            out.multipliers[k] += qk;
            correction -= qk * detail::a_power(arity, param, 1) * delta[k];
        }
        for (auto& [e, s] : detail::slices_in(correction, param)) {
            auto [pos, inserted] = slices.try_emplace(e, s);
            if (!inserted) pos->second += s;
        }
    }
    out.remainder = Polynomial(arity);
    for (const auto& [e, s] : slices)
        if (e >= order) out.remainder += shift_variables(s, arity, 0) * detail::a_power(arity, param, e - order);

    Polynomial identity = f - out.tail - out.remainder * detail::a_power(arity, param, order);
    Polynomial combination(arity);
    for (std::size_t s = 0; s < monomials.size(); ++s)
        combination += out.lambda[s] * shift_variables(Polynomial::monomial(monomials[s]), arity, 0);
    identity -= combination;
    for (std::size_t k = 0; k < system.polys.size(); ++k) identity -= out.multipliers[k] * system.polys[k];
    bool tail_deep = true;
    for (const auto& [m, c] : out.tail.terms()) tail_deep = tail_deep && m.degree() >= out.certified_degree;
    out.certificate_holds = identity.is_zero() && tail_deep;
    out.cross_check_holds = member(full, f - combination);
    return out;
}

inline ParamNormalForm param_normal_form(const Polynomial& f, int order) {
    return param_normal_form(f, order, first_splitting_param(), default_param_monomials());
}

struct DeterminantSample {
    Rational a;
    Interval determinant;
};

struct InterpolationReport {
    std::vector<Monomial> monomials;
    /// Certified root enclosures per sample.
    std::vector<std::vector<RootEnclosure>> points;
    std::vector<DeterminantSample> samples;
    /// Least-squares slope of log|det| against log a; needs at least two samples.
    std::optional<double> fitted_order;
};

/// Certifies det [m(p_r)] != 0 for monomials m over the enclosed roots p_r, refining the
/// enclosures as needed. Throws SingularMatrix when zero cannot be excluded.
inline Interval interpolation_determinant(const SplitSystem& s, std::vector<RootEnclosure>& points,
                                          const std::vector<Monomial>& monomials, int rounds = 12) {
    if (points.size() != monomials.size())
        throw PreconditionError("root count differs from monomial count");
    std::vector<Polynomial> evals;
    for (const auto& m : monomials) evals.push_back(Polynomial::monomial(m));
    bool all_exact = true;
    for (const auto& p : points) all_exact = all_exact && p.is_exact();
    if (all_exact) {
        std::vector<std::vector<Rational>> m;
        for (const auto& p : points) {
            std::vector<Rational> row;
            for (const auto& e : evals) row.push_back(evaluate(e, p.center()));
            m.push_back(std::move(row));
        }
        Rational d = determinant(m);
        if (d == 0) throw SingularMatrix("interpolation matrix is singular");
        return Interval(d);
    }
    for (int round = 0; round < rounds; ++round) {
        int bits = kDefaultIntervalBits;
        for (const auto& p : points) bits = std::max(bits, detail::working_bits(p.box));
        std::vector<std::vector<Interval>> m;
        for (const auto& p : points) {
            Box b = p.tight_box();
            std::vector<Interval> row;
            for (const auto& e : evals) row.push_back(evaluate(e, b, bits));
            m.push_back(std::move(row));
        }
        Interval d = interval_determinant(m, bits);
        if (!d.contains_zero()) return d;
        for (auto& p : points) {
            try {
                refine_enclosure(s, p);
            } catch (const RefinementBudgetExceeded&) {
                throw SingularMatrix("interpolation determinant not certified: enclosure refinement stalled");
            }
        }
    }
    throw SingularMatrix("interpolation determinant could not be separated from zero");
}

/// For each a: certified roots in the box (seeded Krawczyk for n > 2), the interpolation
/// matrix on them, a certified nonzero determinant enclosure, and a fitted order.
inline InterpolationReport interpolation_analysis(const std::function<SplitSystem(const Rational&)>& family,
                                                  const BoxRegion& region, const std::vector<Monomial>& monomials,
                                                  const std::vector<Rational>& a_samples) {
    InterpolationReport out;
    out.monomials = monomials;
    std::vector<std::pair<double, double>> logs;
    for (const auto& a : a_samples) {
        SplitSystem s = family(a);
        RealRootCount roots = s.arity() == 2 ? count_real_roots(s, region) : seeded_roots(s);
        if (roots.count != static_cast<int>(monomials.size()))
            throw PreconditionError("count mismatch: " + std::to_string(roots.count) + " certified roots for " +
                                    std::to_string(monomials.size()) + " monomials at a = " + to_string(a));
        Interval d = interpolation_determinant(s, roots.enclosures, monomials);
        out.points.push_back(std::move(roots.enclosures));
        out.samples.push_back({a, d});
        if (a > 0) logs.emplace_back(log_abs(a), log_abs(d.midpoint()));
    }
    if (logs.size() >= 2) out.fitted_order = log_log_slope(logs);
    return out;
}

}  // namespace artinian
