// Dense exponent vectors and the graded-lex order used everywhere in the library.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "artinian/errors.hpp"

namespace artinian {

inline constexpr int kMaxArity = 8;

/// x_1^{e_1} ... x_n^{e_n} with n <= kMaxArity. Unused slots are zero.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(int arity) : arity_(check_arity(arity)) {}

    Monomial(int arity, std::initializer_list<int> exponents) : Monomial(arity) {
        if (static_cast<int>(exponents.size()) != arity)
            throw ArityMismatch("exponent list length differs from arity");
        int i = 0;
        for (int e : exponents) set(i++, e);
    }

    static Monomial variable(int arity, int index, int power = 1) {
        Monomial m(arity);
        m.set(index, power);
        return m;
    }

    int arity() const noexcept { return arity_; }
    int degree() const noexcept { return degree_; }
    int operator[](int i) const noexcept { return exps_[static_cast<std::size_t>(i)]; }

    void set(int i, int e) {
        if (i < 0 || i >= arity_) throw DomainError("variable index out of range");
        if (e < 0 || e > 0xFFFF) throw DomainError("exponent out of range");
        degree_ += e - exps_[static_cast<std::size_t>(i)];
        exps_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
    }

    Monomial operator*(const Monomial& other) const {
        require_same_arity(other);
        Monomial r(*this);
        for (int i = 0; i < arity_; ++i) r.set(i, (*this)[i] + other[i]);
        return r;
    }

    bool divides(const Monomial& other) const {
        for (int i = 0; i < arity_; ++i)
            if ((*this)[i] > other[i]) return false;
        return true;
    }

    /// other / this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const {
        Monomial r(arity_);
        for (int i = 0; i < arity_; ++i) r.set(i, other[i] - (*this)[i]);
        return r;
    }

    Monomial lcm(const Monomial& other) const {
        Monomial r(arity_);
        for (int i = 0; i < arity_; ++i) r.set(i, std::max((*this)[i], other[i]));
        return r;
    }

    /// Pure power x_i^e for some i (the constant monomial is not a pure power).
    int pure_power_variable() const noexcept {
        int found = -1;
        for (int i = 0; i < arity_; ++i) {
            if ((*this)[i] == 0) continue;
            if (found >= 0) return -1;
            found = i;
        }
        return found;
    }

    bool operator==(const Monomial& o) const noexcept { return arity_ == o.arity_ && exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const noexcept { return !(*this == o); }

    std::size_t hash() const noexcept {
        std::size_t h = static_cast<std::size_t>(arity_);
        for (int i = 0; i < arity_; ++i) h = h * 1000003U + exps_[static_cast<std::size_t>(i)];
        return h;
    }

    void require_same_arity(const Monomial& other) const {
        if (other.arity_ != arity_) throw ArityMismatch("monomial arity mismatch");
    }

private:
    static int check_arity(int arity) {
        if (arity < 1 || arity > kMaxArity) throw DomainError("arity must be in 1..8");
        return arity;
    }

    std::array<std::uint16_t, kMaxArity> exps_{};
    std::uint8_t arity_ = 0;
    int degree_ = 0;
};

/// Graded lexicographic order with x_1 > x_2 > ... ; strict "less".
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = 0; i < a.arity(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials of total degree exactly `degree`, in ascending grlex order.
inline std::vector<Monomial> monomials_of_degree(int arity, int degree) {
    std::vector<Monomial> out;
    Monomial current(arity);
    // Enumerate in descending lex order of the exponent vector, then reverse.
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == arity - 1) {
            current.set(var, remaining);
            out.push_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current.set(var, e);
            rec(var + 1, remaining - e);
        }
        current.set(var, 0);
    };
    rec(0, degree);
    std::vector<Monomial> asc(out.rbegin(), out.rend());
    return asc;
}

/// All monomials of total degree < `bound`, ascending grlex.
inline std::vector<Monomial> monomials_below(int arity, int bound) {
    std::vector<Monomial> out;
    for (int d = 0; d < bound; ++d) {
        auto layer = monomials_of_degree(arity, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace artinian
