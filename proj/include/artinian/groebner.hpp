// Buchberger's algorithm (graded lex) for global zero-dimensional ideals.
#pragma once

#include <set>
#include <utility>
#include <vector>

#include "artinian/polynomial.hpp"

namespace artinian {

namespace detail {

inline Polynomial make_monic(Polynomial p) {
    if (!p.is_zero()) p *= 1 / p.leading_coefficient();
    return p;
}

/// Full reduction of p by g (grlex). Every term of the result is irreducible.
inline Polynomial reduce_by(Polynomial p, const std::vector<Polynomial>& g) {
    Polynomial rest(p.arity());
    while (!p.is_zero()) {
        Monomial lm = p.leading_monomial();
        Rational lc = p.leading_coefficient();
        bool reduced = false;
        for (const auto& q : g) {
            if (q.is_zero() || !q.leading_monomial().divides(lm)) continue;
            p -= q.mul_monomial(q.leading_monomial().quotient_of(lm), lc / q.leading_coefficient());
            reduced = true;
            break;
        }
        if (!reduced) {
            rest.add_term(lm, lc);
            p.add_term(lm, -lc);
        }
    }
    return rest;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    return f.mul_monomial(f.leading_monomial().quotient_of(l), 1 / f.leading_coefficient()) -
           g.mul_monomial(g.leading_monomial().quotient_of(l), 1 / g.leading_coefficient());
}

}  // namespace detail

/// Reduced grlex Groebner basis of the ideal generated by `gens` in Q[x].
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> g;
    for (const auto& p : gens)
        if (!p.is_zero()) g.push_back(detail::make_monic(p));
    if (g.empty()) return g;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
    while (!pairs.empty()) {
        auto [i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const Monomial& a = g[i].leading_monomial();
        const Monomial& b = g[j].leading_monomial();
        // Coprime leading monomials: the S-polynomial reduces to zero.
        if (a.lcm(b).degree() == a.degree() + b.degree()) continue;
        Polynomial r = detail::reduce_by(detail::s_polynomial(g[i], g[j]), g);
        if (r.is_zero()) continue;
        g.push_back(detail::make_monic(std::move(r)));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace(k, g.size() - 1);
    }
    // Minimalize, then inter-reduce.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !g[j].leading_monomial().divides(g[i].leading_monomial())) continue;
            redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial tail = minimal[i];
        Monomial lm = tail.leading_monomial();
        tail.add_term(lm, -tail.leading_coefficient());
        Polynomial r = detail::reduce_by(tail, others);
        r.add_term(lm, Rational(1));
        reduced.push_back(std::move(r));
    }
    return reduced;
}

/// Number of standard monomials, i.e. dim_Q Q[x]/(gens), counted with multiplicity over C.
inline int global_quotient_dim(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw EmptyIdeal();
    int n = gens.front().arity();
    std::vector<Polynomial> g = groebner_basis(gens);
    if (g.empty()) throw NotZeroDimensional("the zero ideal is not zero-dimensional");
    std::vector<int> bound(static_cast<std::size_t>(n), -1);
    for (const auto& p : g) {
        const Monomial& lm = p.leading_monomial();
        if (lm.degree() == 0) return 0;
        int v = lm.pure_power_variable();
        if (v >= 0) {
            auto& b = bound[static_cast<std::size_t>(v)];
            b = b < 0 ? lm[v] : std::min(b, lm[v]);
        }
    }
    for (int b : bound)
        if (b < 0) throw NotZeroDimensional("some variable has no pure power among the leading monomials");
    int count = 0;
    Monomial m(n);
    // Enumerate the box below the pure-power bounds.
    for (;;) {
        bool standard = true;
        for (const auto& p : g)
            if (p.leading_monomial().divides(m)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        int i = 0;
        while (i < n) {
            if (m[i] + 1 < bound[static_cast<std::size_t>(i)]) {
                m.set(i, m[i] + 1);
                break;
            }
            m.set(i, 0);
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

}  // namespace artinian
