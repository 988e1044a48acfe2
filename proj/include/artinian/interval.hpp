// Rational interval arithmetic with outward rounding, and the Krawczyk existence test.
#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "artinian/polynomial.hpp"

namespace artinian {

/// Default number of significant bits kept by outward rounding.
inline constexpr int kDefaultIntervalBits = 128;

namespace detail {

inline Rational mul_2exp(const Rational& q, long e) {
    Rational r;
    if (e >= 0) mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
}

/// Approximate binary exponent of |q| (q != 0), exact to within one.
inline long binary_exponent(const Rational& q) {
    return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

/// Largest dyadic number with about `bits` significant bits that is <= q.
inline Rational round_down(const Rational& q, int bits) {
    if (q == 0) return q;
    long shift = bits - binary_exponent(q);
    if (shift >= 0 && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= static_cast<std::size_t>(shift) &&
        mpz_sizeinbase(q.get_num_mpz_t(), 2) <= static_cast<std::size_t>(bits) + 2)
        return q;
    return mul_2exp(Rational(floor(mul_2exp(q, shift))), -shift);
}

inline Rational round_up(const Rational& q, int bits) { return -round_down(-q, bits); }

}  // namespace detail

class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT: points convert implicitly
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw DomainError("interval lower bound exceeds upper bound");
    }

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
    /// This interval lies in the interior of `outer`.
    bool interior_of(const Interval& outer) const { return outer.lo_ < lo_ && hi_ < outer.hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    /// +1 or -1 when the sign is constant and nonzero on the interval, else 0.
    int certified_sign() const {
        if (lo_ > 0) return 1;
        if (hi_ < 0) return -1;
        return 0;
    }

    /// Smallest |v| over the interval.
    Rational mignitude() const {
        if (contains_zero()) return Rational(0);
        return lo_ > 0 ? lo_ : Rational(-hi_);
    }
    Rational magnitude() const { return std::max(Rational(abs(lo_)), Rational(abs(hi_))); }

    friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }
    friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }
    friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Rational p1 = a.lo_ * b.lo_;
        Rational p2 = a.lo_ * b.hi_;
        Rational p3 = a.hi_ * b.lo_;
        Rational p4 = a.hi_ * b.hi_;
        return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
    }
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }

    /// Division by an interval that excludes zero.
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
        return a * Interval(1 / b.hi_, 1 / b.lo_);
    }

    bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
    Rational lo_;
    Rational hi_;
};

/// Tight power: even powers of an interval straddling zero start at zero.
inline Interval pow(const Interval& x, unsigned k) {
    if (k == 0) return Interval(Rational(1));
    Rational a = pow(x.lo(), k);
    Rational b = pow(x.hi(), k);
    if (k % 2 == 1) return {a, b};
    if (x.contains_zero()) return {Rational(0), std::max(a, b)};
    return {std::min(a, b), std::max(a, b)};
}

inline std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    if (!a.intersects(b)) return std::nullopt;
    return Interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

inline Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

/// Widens both ends to short dyadic numbers (relative precision `bits`).
inline Interval round_outward(const Interval& x, int bits) {
    return {detail::round_down(x.lo(), bits), detail::round_up(x.hi(), bits)};
}

using Box = std::vector<Interval>;

inline Interval evaluate(const Polynomial& p, std::span<const Interval> box, int bits = kDefaultIntervalBits) {
    if (static_cast<int>(box.size()) != p.arity()) throw ArityMismatch("box dimension differs from arity");
    Interval sum(Rational(0));
    for (const auto& [m, c] : p.terms()) {
        Interval t(c);
        for (int i = 0; i < p.arity(); ++i)
            if (m[i] != 0) t = round_outward(t * pow(box[static_cast<std::size_t>(i)], static_cast<unsigned>(m[i])), bits);
        sum = round_outward(sum + t, bits);
    }
    return sum;
}

inline std::vector<Rational> midpoint(const Box& box) {
    std::vector<Rational> m;
    m.reserve(box.size());
    for (const auto& x : box) m.push_back(x.midpoint());
    return m;
}

inline Rational max_width(const Box& box) {
    Rational w(0);
    for (const auto& x : box) w = std::max(w, x.width());
    return w;
}

/// Exact inverse of a square rational matrix, or nullopt when singular.
inline std::optional<std::vector<std::vector<Rational>>> inverse(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational s = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// A square polynomial system together with its Jacobian matrix.
class SquareSystem {
public:
    explicit SquareSystem(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
        if (polys_.empty()) throw DomainError("empty system");
        int n = polys_.front().arity();
        if (static_cast<int>(polys_.size()) != n) throw DomainError("system is not square");
        for (const auto& p : polys_) {
            if (p.arity() != n) throw ArityMismatch("system polynomials differ in arity");
            std::vector<Polynomial> row;
            for (int j = 0; j < n; ++j) row.push_back(partial_derivative(p, j));
            jacobian_.push_back(std::move(row));
        }
    }

    int size() const noexcept { return static_cast<int>(polys_.size()); }
    const std::vector<Polynomial>& polys() const noexcept { return polys_; }
    const Polynomial& jacobian(int i, int j) const {
        return jacobian_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    std::vector<Rational> value(std::span<const Rational> x) const {
        std::vector<Rational> v;
        for (const auto& p : polys_) v.push_back(evaluate(p, x));
        return v;
    }

    std::vector<std::vector<Rational>> jacobian_at(std::span<const Rational> x) const {
        std::vector<std::vector<Rational>> j(polys_.size());
        for (std::size_t r = 0; r < polys_.size(); ++r)
            for (const auto& d : jacobian_[r]) j[r].push_back(evaluate(d, x));
        return j;
    }

    std::vector<std::vector<Interval>> jacobian_on(const Box& box, int bits) const {
        std::vector<std::vector<Interval>> j(polys_.size());
        for (std::size_t r = 0; r < polys_.size(); ++r)
            for (const auto& d : jacobian_[r]) j[r].push_back(evaluate(d, box, bits));
        return j;
    }

    /// True when some component is certified nonzero on the box (no solution there).
    bool excludes(const Box& box, int bits) const {
        for (const auto& p : polys_)
            if (!evaluate(p, box, bits).contains_zero()) return true;
        return false;
    }

private:
    std::vector<Polynomial> polys_;
    std::vector<std::vector<Polynomial>> jacobian_;
};

enum class KrawczykOutcome { unique_root, no_root, inconclusive };

struct KrawczykResult {
    KrawczykOutcome outcome;
    /// K intersected with the input box; every root in the input box lies in it.
    Box contracted;
};

/// One Krawczyk step K = m - Y f(m) + (I - Y J(X))(X - m), Y ~ J(m)^-1.
/// K inside the interior of X proves a unique root in X; K disjoint from X proves none.
inline KrawczykResult krawczyk(const SquareSystem& sys, const Box& box, int bits = kDefaultIntervalBits) {
    auto n = static_cast<std::size_t>(sys.size());
    if (box.size() != n) throw ArityMismatch("box dimension differs from system size");
    std::vector<Rational> m = midpoint(box);
    auto y = inverse(sys.jacobian_at(m));
    if (!y) return {KrawczykOutcome::inconclusive, box};
    for (auto& row : *y)
        for (auto& v : row) v = detail::round_down(v, bits);
    std::vector<Rational> fm = sys.value(m);
    auto jx = sys.jacobian_on(box, bits);
    Box k;
    k.reserve(n);
    bool inside = true;
    Box contracted;
    for (std::size_t i = 0; i < n; ++i) {
        Rational yf(0);
        for (std::size_t j = 0; j < n; ++j) yf += (*y)[i][j] * fm[j];
        Interval ki = round_outward(Interval(m[i] - yf), bits);
        for (std::size_t j = 0; j < n; ++j) {
            // (I - Y J(X))_{ij}
            Interval c(Rational(i == j ? 1 : 0));
            for (std::size_t l = 0; l < n; ++l) c -= round_outward(Interval((*y)[i][l]) * jx[l][j], bits);
            ki += round_outward(c * (box[j] - Interval(m[j])), bits);
        }
        ki = round_outward(ki, bits);
        auto cut = intersect(ki, box[i]);
        if (!cut) return {KrawczykOutcome::no_root, {}};
        if (!ki.interior_of(box[i])) inside = false;
        contracted.push_back(*cut);
    }
    return {inside ? KrawczykOutcome::unique_root : KrawczykOutcome::inconclusive, std::move(contracted)};
}

/// Determinant of an interval matrix by Gaussian elimination with partial pivoting on
/// the largest mignitude. Returns an enclosure of every determinant of a point matrix
/// inside the interval matrix; the enclosure contains zero when no pivot excludes zero.
inline Interval interval_determinant(std::vector<std::vector<Interval>> a, int bits = kDefaultIntervalBits) {
    std::size_t n = a.size();
    Interval det(Rational(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (a[r][col].mignitude() > a[pivot][col].mignitude()) pivot = r;
        if (a[pivot][col].contains_zero()) {
            // Fall back to a hull bound: 0 cannot be excluded.
            Rational bound(1);
            for (std::size_t r = col; r < n; ++r) {
                Rational row_sum(0);
                for (std::size_t j = col; j < n; ++j) row_sum += a[r][j].magnitude();
                bound *= row_sum;
            }
            Interval rest(-bound, bound);
            return round_outward(det * rest, bits);
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det = round_outward(det * a[col][col], bits);
        for (std::size_t r = col + 1; r < n; ++r) {
            Interval f = round_outward(a[r][col] / a[col][col], bits);
            for (std::size_t j = col + 1; j < n; ++j) a[r][j] = round_outward(a[r][j] - f * a[col][j], bits);
        }
    }
    return det;
}

/// Exact determinant of a rational matrix.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

}  // namespace artinian
