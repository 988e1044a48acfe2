// Dense univariate polynomials over Q, Sturm sequences and certified real root isolation.
#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "artinian/polynomial.hpp"

namespace artinian {

/// Coefficients low to high; no trailing zeros (the zero polynomial is empty).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
    static UPoly x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    /// Converts a polynomial whose only variable (possibly among several slots) is `index`.
    static UPoly from_polynomial(const Polynomial& p, int index) {
        std::vector<Rational> c;
        for (const auto& [m, v] : p.terms()) {
            if (m.degree() != m[index]) throw DomainError("polynomial is not univariate in the given variable");
            auto e = static_cast<std::size_t>(m[index]);
            if (c.size() <= e) c.resize(e + 1);
            c[e] += v;
        }
        return UPoly(std::move(c));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    int sign_at(const Rational& x) const { return sgn((*this)(x)); }

    UPoly derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
        return UPoly(std::move(d));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + b * Rational(-1); }
    friend UPoly operator*(const UPoly& a, const Rational& s) {
        std::vector<Rational> r = a.c_;
        for (auto& v : r) v *= s;
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    /// (quotient, remainder) with deg(remainder) < deg(divisor).
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw DomainError("division by the zero polynomial");
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo;
        if (a.degree() >= b.degree()) quo.resize(static_cast<std::size_t>(a.degree() - b.degree() + 1));
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            Rational q = rem[static_cast<std::size_t>(k + b.degree())] / b.leading();
            quo[static_cast<std::size_t>(k)] = q;
            if (q == 0) continue;
            for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * b[j];
        }
        return {UPoly(std::move(quo)), UPoly(std::move(rem))};
    }

    UPoly monic() const { return is_zero() ? *this : *this * (1 / leading()); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// p / gcd(p, p'): same roots, all simple.
inline UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p;
    UPoly g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

/// 1 + max |a_i / a_n|: every real root lies strictly inside (-bound, bound).
inline Rational cauchy_bound(const UPoly& p) {
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p[i] / p.leading())));
    return m + 1;
}

class SturmSequence {
public:
    explicit SturmSequence(const UPoly& p) {
        if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
        seq_.push_back(p);
        if (p.degree() == 0) return;
        seq_.push_back(p.derivative());
        while (seq_.back().degree() > 0) {
            UPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
            if (r.is_zero()) break;
            // Positive rescaling keeps every sign pattern.
            seq_.push_back(r * (Rational(-1) / abs(r.leading())));
        }
    }

    const UPoly& polynomial() const { return seq_.front(); }

    int variations(const Rational& x) const {
        int count = 0;
        int last = 0;
        for (const auto& q : seq_) {
            int s = q.sign_at(x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    /// Number of distinct real roots in (lo, hi].
    int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

private:
    std::vector<UPoly> seq_;
};

/// A certified isolating interval of a squarefree polynomial: p(lo) and p(hi) are nonzero and
/// [lo, hi] contains exactly one root. `exact` is set once the root is known as a rational.
struct RootInterval {
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return exact ? *exact : (lo + hi) / 2; }
};

/// Halves an isolating interval (keeping exactness information and the invariant).
inline void bisect_root(const UPoly& p, RootInterval& r) {
    Rational mid = (r.lo + r.hi) / 2;
    if (r.exact) {
        Rational quarter = (r.hi - r.lo) / 4;
        // Any sub-interval around the exact root still isolates it.
        r.lo = std::max(r.lo, Rational(*r.exact - quarter));
        r.hi = std::min(r.hi, Rational(*r.exact + quarter));
        return;
    }
    int sm = p.sign_at(mid);
    if (sm == 0) {
        r.exact = mid;
        Rational quarter = (r.hi - r.lo) / 4;
        r.lo = mid - quarter;
        r.hi = mid + quarter;
        return;
    }
    if (sm == p.sign_at(r.lo)) r.lo = mid;
    else r.hi = mid;
}

/// Tests the simplest rational inside the interval as an exact root.
inline bool try_snap_rational(const UPoly& p, RootInterval& r) {
    if (r.exact) return true;
    Rational q = simplest_between(r.lo, r.hi);
    if (p(q) == 0) {
        r.exact = q;
        return true;
    }
    return false;
}

inline void refine_root(const UPoly& p, RootInterval& r, const Rational& max_width) {
    while (r.width() > max_width) bisect_root(p, r);
}

namespace detail {

/// Largest delta <= start such that x is the only root of p in [x - delta, x + delta] and
/// p(x +- delta) != 0. Requires p(x) == 0.
inline Rational exact_root_radius(const SturmSequence& s, const Rational& x, Rational start) {
    const UPoly& p = s.polynomial();
    for (;;) {
        if (p.sign_at(x - start) != 0 && p.sign_at(x + start) != 0 && s.count(x - start, x + start) == 1)
            return start;
        start /= 2;
    }
}

inline void isolate_open(const SturmSequence& s, const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) {
    int n = s.count(lo, hi);
    if (n == 0) return;
    const UPoly& p = s.polynomial();
    if (n == 1) {
        out.push_back({lo, hi, std::nullopt});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (p.sign_at(mid) != 0) {
        isolate_open(s, lo, mid, out);
        isolate_open(s, mid, hi, out);
        return;
    }
    Rational delta = exact_root_radius(s, mid, (hi - lo) / 4);
    isolate_open(s, lo, mid - delta, out);
    out.push_back({mid - delta, mid + delta, mid});
    isolate_open(s, mid + delta, hi, out);
}

}  // namespace detail

/// Isolates every real root of p in the closed interval [lo, hi], ascending.
/// p need not be squarefree; its squarefree part is used.
inline std::vector<RootInterval> isolate_real_roots(const UPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
    if (lo > hi) throw DomainError("empty interval");
    UPoly q = squarefree_part(p);
    std::vector<RootInterval> out;
    if (q.degree() <= 0) return out;
    SturmSequence s(q);
    Rational span = std::max(Rational(hi - lo), Rational(1));
    Rational inner_lo = lo;
    Rational inner_hi = hi;
    std::optional<RootInterval> low_end;
    std::optional<RootInterval> high_end;
    if (q(lo) == 0) {
        Rational d = detail::exact_root_radius(s, lo, span / 4);
        low_end = RootInterval{lo - d, lo + d, lo};
        inner_lo = lo + d;
    }
    if (lo != hi && q(hi) == 0) {
        Rational d = detail::exact_root_radius(s, hi, span / 4);
        high_end = RootInterval{hi - d, hi + d, hi};
        inner_hi = hi - d;
    }
    if (low_end) out.push_back(*low_end);
    if (inner_lo < inner_hi) detail::isolate_open(s, inner_lo, inner_hi, out);
    if (high_end) out.push_back(*high_end);
    for (auto& r : out) try_snap_rational(q, r);
    return out;
}

inline std::vector<RootInterval> isolate_all_real_roots(const UPoly& p) {
    UPoly q = squarefree_part(p);
    if (q.degree() <= 0) return {};
    Rational b = cauchy_bound(q);
    return isolate_real_roots(q, -b, b);
}

/// Univariate polynomials with coefficients in Q[x]: coefficient k multiplies t^k.
using PolyOverUPoly = std::vector<UPoly>;

/// Resultant of f and g (as polynomials in t over Q[x]) via the Sylvester matrix and
/// fraction-free (Bareiss) elimination.
inline UPoly resultant(const PolyOverUPoly& f, const PolyOverUPoly& g) {
    int m = static_cast<int>(f.size()) - 1;
    int n = static_cast<int>(g.size()) - 1;
    if (m < 0 || n < 0) return {};
    if (m == 0 && n == 0) return UPoly::constant(Rational(1));
    int size = m + n;
    std::vector<std::vector<UPoly>> M(static_cast<std::size_t>(size), std::vector<UPoly>(static_cast<std::size_t>(size)));
    // Rows ordered from the highest power of t down.
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g[static_cast<std::size_t>(n - k)];
    UPoly prev = UPoly::constant(Rational(1));
    bool negate = false;
    for (int k = 0; k < size - 1; ++k) {
        auto K = static_cast<std::size_t>(k);
        if (M[K][K].is_zero()) {
            int swap_with = -1;
            for (int r = k + 1; r < size; ++r)
                if (!M[static_cast<std::size_t>(r)][K].is_zero()) {
                    swap_with = r;
                    break;
                }
            if (swap_with < 0) return {};
            std::swap(M[K], M[static_cast<std::size_t>(swap_with)]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i) {
            auto I = static_cast<std::size_t>(i);
            for (int j = k + 1; j < size; ++j) {
                auto J = static_cast<std::size_t>(j);
                UPoly num = M[K][K] * M[I][J] - M[I][K] * M[K][J];
                auto [q, rem] = divmod(num, prev);
                if (!rem.is_zero()) throw Error("Bareiss division was not exact");
                M[I][J] = std::move(q);
            }
            M[I][K] = UPoly();
        }
        prev = M[K][K];
    }
    UPoly det = M[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
    return negate ? det * Rational(-1) : det;
}

/// Views a bivariate polynomial as a polynomial in variable `eliminate` over Q[other].
inline PolyOverUPoly as_poly_over(const Polynomial& p, int eliminate) {
    if (p.arity() != 2) throw ArityMismatch("resultants are implemented for bivariate polynomials");
    int other = 1 - eliminate;
    std::vector<std::vector<Rational>> coeffs;
    for (const auto& [m, c] : p.terms()) {
        auto t = static_cast<std::size_t>(m[eliminate]);
        auto s = static_cast<std::size_t>(m[other]);
        if (coeffs.size() <= t) coeffs.resize(t + 1);
        if (coeffs[t].size() <= s) coeffs[t].resize(s + 1);
        coeffs[t][s] += c;
    }
    PolyOverUPoly out;
    for (auto& c : coeffs) out.emplace_back(std::move(c));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

/// Res_{x_eliminate}(f, g) as a univariate polynomial in the other variable.
inline UPoly resultant(const Polynomial& f, const Polynomial& g, int eliminate) {
    return resultant(as_poly_over(f, eliminate), as_poly_over(g, eliminate));
}

}  // namespace artinian
