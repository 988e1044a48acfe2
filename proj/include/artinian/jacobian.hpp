// Jacobian ideals, Milnor algebras and the Briancon-Skoda exponent.
#pragma once

#include <vector>

#include "artinian/local_algebra.hpp"

namespace artinian {

/// (df/dx_1, ..., df/dx_n) in variable order. f must vanish at the origin.
inline LocalIdeal jacobian_ideal(const Polynomial& f) {
    if (f.constant_term() != 0) throw DomainError("f must vanish at the origin");
    std::vector<Polynomial> partials;
    partials.reserve(static_cast<std::size_t>(f.arity()));
    for (int i = 0; i < f.arity(); ++i) partials.push_back(partial_derivative(f, i));
    for (const auto& d : partials)
        if (d.constant_term() != 0)
            throw DomainError("f is nonsingular at the origin (a partial derivative is a unit)");
    return LocalIdeal(std::move(partials));
}

struct JacobianData {
    Polynomial f;
    LocalIdeal delta;
    AlgebraPtr milnor_algebra;
};

inline JacobianData jacobian_data(const Polynomial& f, int degree_cap = kDefaultDegreeCap) {
    LocalIdeal delta = jacobian_ideal(f);
    AlgebraPtr milnor = artinian_closure(delta, degree_cap);
    return {f, std::move(delta), std::move(milnor)};
}

/// Least k >= 1 with f^k in the Jacobian ideal of f. Finite whenever the Milnor algebra
/// is Artinian, since the class of f is then a non-unit of a finite local algebra.
inline int bs_exponent(const Polynomial& f, int degree_cap = kDefaultDegreeCap) {
    JacobianData data = jacobian_data(f, degree_cap);
    const AlgebraPtr& milnor = data.milnor_algebra;
    QuotientElement cls = normal_form(milnor, f);
    QuotientElement power = cls;
    for (int k = 1; k <= milnor->dim(); ++k) {
        if (power.is_zero()) return k;
        power = power * cls;
    }
    throw Error("Briancon-Skoda search exceeded the Milnor number; certificate is inconsistent");
}

inline constexpr int kMaxFamilyIndex = 3;

/// f_n = sum_i x_i^{3n-1} + (x_1 ... x_n)^3 for 1 <= n <= 3.
inline Polynomial family(int n) {
    if (n < 1 || n > kMaxFamilyIndex) throw DomainError("family index must be in 1..3");
    Polynomial f(n);
    Monomial product(n);
    for (int i = 0; i < n; ++i) {
        f.add_term(Monomial::variable(n, i, 3 * n - 1), Rational(1));
        product.set(i, 3);
    }
    f.add_term(product, Rational(1));
    return f;
}

}  // namespace artinian
