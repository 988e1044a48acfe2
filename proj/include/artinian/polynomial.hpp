// Sparse multivariate polynomials over exact rationals.
#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "artinian/monomial.hpp"
#include "artinian/rational.hpp"

namespace artinian {

/// Canonical sparse polynomial: no stored zero coefficients, terms kept in ascending grlex order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(int arity) : arity_(check_arity(arity)) {}

    static Polynomial constant(int arity, const Rational& c) {
        Polynomial p(arity);
        p.add_term(Monomial(arity), c);
        return p;
    }

    static Polynomial variable(int arity, int index) {
        Polynomial p(arity);
        p.add_term(Monomial::variable(arity, index), Rational(1));
        return p;
    }

    static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1)) {
        Polynomial p(m.arity());
        p.add_term(m, c);
        return p;
    }

    int arity() const noexcept { return arity_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    /// Lowest total degree of a term (the m-adic order); -1 for zero.
    int order() const noexcept {
        int best = -1;
        for (const auto& [m, c] : terms_)
            if (best < 0 || m.degree() < best) best = m.degree();
        return best;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial(arity_)); }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
        return terms_.rbegin()->first;
    }
    const Rational& leading_coefficient() const {
        if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
        return terms_.rbegin()->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.arity() != arity_) throw ArityMismatch("term arity differs from polynomial arity");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const { return *this * Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_arity(b);
        Polynomial r(a.arity_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial mul_monomial(const Monomial& m, const Rational& c = Rational(1)) const {
        Polynomial r(arity_);
        if (c == 0) return r;
        // Multiplication by a monomial preserves the grlex order of terms.
        for (const auto& [t, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, a * c);
        return r;
    }

    bool operator==(const Polynomial& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    void require_same_arity(const Polynomial& o) const {
        if (o.arity_ != arity_) throw ArityMismatch("polynomial arity mismatch");
    }

private:
    static int check_arity(int arity) {
        if (arity < 1 || arity > kMaxArity) throw DomainError("arity must be in 1..8");
        return arity;
    }

    int arity_ = 0;
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial result = Polynomial::constant(p.arity(), Rational(1));
    Polynomial base = p;
    while (k != 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k != 0) base = base * base;
    }
    return result;
}

/// Formal partial derivative with respect to variable `index` (0-based).
inline Polynomial partial_derivative(const Polynomial& p, int index) {
    if (index < 0 || index >= p.arity()) throw DomainError("variable index out of range");
    Polynomial r(p.arity());
    for (const auto& [m, c] : p.terms()) {
        int e = m[index];
        if (e == 0) continue;
        Monomial d = m;
        d.set(index, e - 1);
        r.add_term(d, c * e);
    }
    return r;
}

inline Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != p.arity()) throw ArityMismatch("point length differs from arity");
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (int i = 0; i < p.arity(); ++i)
            if (m[i] != 0) t *= pow(point[static_cast<std::size_t>(i)], static_cast<unsigned>(m[i]));
        sum += t;
    }
    return sum;
}

inline Rational evaluate(const Polynomial& p, std::initializer_list<Rational> point) {
    return evaluate(p, std::span<const Rational>(point.begin(), point.size()));
}

/// Drops every term of total degree > max_degree.
inline Polynomial truncate(const Polynomial& p, int max_degree) {
    Polynomial r(p.arity());
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() > max_degree) break;
        r.add_term(m, c);
    }
    return r;
}

/// Re-embeds p into a ring of `new_arity` variables; variable i goes to slot map[i].
inline Polynomial remap_variables(const Polynomial& p, int new_arity, std::span<const int> map) {
    if (static_cast<int>(map.size()) != p.arity()) throw ArityMismatch("variable map length differs from arity");
    Polynomial r(new_arity);
    for (const auto& [m, c] : p.terms()) {
        Monomial t(new_arity);
        for (int i = 0; i < p.arity(); ++i)
            if (m[i] != 0) t.set(map[static_cast<std::size_t>(i)], t[map[static_cast<std::size_t>(i)]] + m[i]);
        r.add_term(t, c);
    }
    return r;
}

/// Embeds p as the block of variables starting at `offset` in a ring of `new_arity` variables.
inline Polynomial shift_variables(const Polynomial& p, int new_arity, int offset) {
    std::vector<int> map(static_cast<std::size_t>(p.arity()));
    for (int i = 0; i < p.arity(); ++i) map[static_cast<std::size_t>(i)] = offset + i;
    return remap_variables(p, new_arity, map);
}

/// Substitutes polynomials (all of a common arity) for every variable of p.
inline Polynomial compose(const Polynomial& p, std::span<const Polynomial> images) {
    if (static_cast<int>(images.size()) != p.arity()) throw ArityMismatch("one image per variable required");
    int target = images.front().arity();
    Polynomial r(target);
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (int i = 0; i < p.arity(); ++i) {
            int e = m[i];
            if (e == 0) continue;
            auto& cache = powers[static_cast<std::size_t>(i)];
            if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[static_cast<std::size_t>(i)]);
            t = t * cache[static_cast<std::size_t>(e)];
        }
        r += t;
    }
    return r;
}

/// Substitutes a rational value for variable `index`, keeping the arity.
inline Polynomial substitute(const Polynomial& p, int index, const Rational& value) {
    Polynomial r(p.arity());
    for (const auto& [m, c] : p.terms()) {
        Monomial t = m;
        t.set(index, 0);
        r.add_term(t, c * pow(value, static_cast<unsigned>(m[index])));
    }
    return r;
}

/// Drops variable `index` (which must not occur) and returns a polynomial of arity - 1.
inline Polynomial drop_variable(const Polynomial& p, int index) {
    Polynomial r(p.arity() - 1);
    for (const auto& [m, c] : p.terms()) {
        if (m[index] != 0) throw DomainError("dropped variable still occurs");
        Monomial t(p.arity() - 1);
        for (int i = 0, j = 0; i < p.arity(); ++i)
            if (i != index) t.set(j++, m[i]);
        r.add_term(t, c);
    }
    return r;
}

inline bool is_homogeneous(const Polynomial& p) {
    return p.is_zero() || p.order() == p.degree();
}

}  // namespace artinian
