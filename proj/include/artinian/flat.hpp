// Prolongation ideals, flat elements, Weil-algebra tensor products and pushouts.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "artinian/local_algebra.hpp"

namespace artinian {

/// I^D in variables (x_1..x_n, y_1..y_n): the base generators together with
/// sum_i y_i * dg/dx_i for every base generator g.
///
/// Generators suffice: for f = h*g,
///   sum_i y_i d(hg)/dx_i = h * sum_i y_i dg/dx_i + g * sum_i y_i dh/dx_i,
/// and the second term lies in I(x), so ranging over all f in I adds nothing.
struct ProlongedIdeal {
    LocalIdeal base;
    LocalIdeal prolonged;
};

/// sum_i y_i * dp/dx_i as a polynomial in 2n variables.
inline Polynomial tangent_derivative(const Polynomial& p) {
    int n = p.arity();
    if (2 * n > kMaxArity) throw DomainError("prolongation needs 2n <= 8 variables");
    Polynomial out(2 * n);
    for (int i = 0; i < n; ++i) {
        Polynomial d = shift_variables(partial_derivative(p, i), 2 * n, 0);
        out += d.mul_monomial(Monomial::variable(2 * n, n + i));
    }
    return out;
}

inline ProlongedIdeal prolong(const LocalIdeal& ideal) {
    int n = ideal.arity();
    if (2 * n > kMaxArity) throw DomainError("prolongation needs 2n <= 8 variables");
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(shift_variables(g, 2 * n, 0));
    for (const auto& g : ideal.generators()) gens.push_back(tangent_derivative(g));
    return {ideal, LocalIdeal(std::move(gens))};
}

/// Condition 1 at the origin fiber: sum_i y_i dp/dx_i lies in the prolonged ideal.
///
/// I^D is generated by elements homogeneous in y (degrees 0 and 1), so membership of a
/// y-linear element is decided in y-degree <= 1 and adjoining (y)^2 changes nothing.
/// Unlike I^D itself (whose zero set contains the whole fiber {0} x R^n), I^D + (y)^2
/// is Artinian, so its closure is computable.
inline AlgebraPtr prolonged_closure(const AlgebraPtr& algebra, int degree_cap = kDefaultDegreeCap) {
    int n = algebra->arity();
    ProlongedIdeal pro = prolong(algebra->ideal());
    std::vector<Polynomial> squares;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Monomial m(2 * n);
            m.set(n + i, m[n + i] + 1);
            m.set(n + j, m[n + j] + 1);
            squares.push_back(Polynomial::monomial(m));
        }
    return artinian_closure(pro.prolonged.with(squares), degree_cap);
}

inline bool flat_member_c1(const AlgebraPtr& algebra, const Polynomial& p, int degree_cap = kDefaultDegreeCap) {
    if (p.arity() != algebra->arity()) throw ArityMismatch("element arity differs from algebra arity");
    return member(prolonged_closure(algebra, degree_cap), tangent_derivative(p));
}

/// certified degree + largest generator degree: every ideal element is congruent to one
/// of that degree modulo I^2, whose derivatives already lie in I.
inline int default_flat_budget(const AlgebraPtr& algebra) {
    return algebra->certified_degree() + algebra->ideal().max_generator_degree();
}

/// Condition 2: is there g in I (of total degree <= budget) with d(p - g)/dx_i in I for all i?
///
/// The search runs over g = sum c_{b,k} * b * g_k with b a standard monomial. Any other
/// multiplier m differs from its normal form by an element of I, contributing a term of I^2
/// whose derivatives lie in I, and grlex normal forms never raise degree, so nothing within
/// the budget is lost.
inline bool flat_member_c2(const AlgebraPtr& algebra, const Polynomial& p, std::optional<int> degree_budget = {}) {
    if (p.arity() != algebra->arity()) throw ArityMismatch("element arity differs from algebra arity");
    const int n = algebra->arity();
    const int d = algebra->dim();
    const int budget = degree_budget.value_or(default_flat_budget(algebra));
    auto gradient_class = [&](const Polynomial& q) {
        SparseVector v;
        for (int i = 0; i < n; ++i)
            for (auto& [b, c] : algebra->reduce_sparse(partial_derivative(q, i))) v.emplace_back(i * d + b, c);
        return v;
    };
    SparseVector target = gradient_class(p);
    if (target.empty()) return true;
    Echelon span(n * d);
    for (const auto& g : algebra->ideal().generators()) {
        if (g.is_zero()) continue;
        for (const auto& b : algebra->basis()) {
            if (b.degree() + g.degree() > budget) continue;
            span.insert(gradient_class(g.mul_monomial(b)));
        }
    }
    return span.reduce(target).empty();
}

/// A finite dimensional local algebra presented at the origin.
class WeilAlgebra {
public:
    explicit WeilAlgebra(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    explicit WeilAlgebra(const LocalIdeal& ideal, int degree_cap = kDefaultDegreeCap)
        : algebra_(artinian_closure(ideal, degree_cap)) {}

    /// The reals, presented as k[[t]]/(t) (one dummy variable, dimension 1).
    static WeilAlgebra reals() {
        return WeilAlgebra(LocalIdeal({Polynomial::variable(1, 0)}));
    }

    /// k[[t]]/(t^k).
    static WeilAlgebra truncated_line(int k) {
        return WeilAlgebra(LocalIdeal({Polynomial::monomial(Monomial::variable(1, 0, k))}));
    }

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    int dim() const noexcept { return algebra_->dim(); }
    int arity() const noexcept { return algebra_->arity(); }

    /// Evaluation at the origin: the constant coordinate.
    Rational augmentation(const QuotientElement& e) const { return e.constant_coordinate(); }

private:
    AlgebraPtr algebra_;
};

/// Coproduct of two local quotients: k[[x, y]]/(I(x), J(y)).
inline AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b, int degree_cap = kDefaultDegreeCap) {
    int n = a->arity();
    int m = b->arity();
    if (n + m > kMaxArity) throw DomainError("tensor product needs at most 8 variables");
    std::vector<Polynomial> gens;
    for (const auto& g : a->ideal().generators()) gens.push_back(shift_variables(g, n + m, 0));
    for (const auto& g : b->ideal().generators()) gens.push_back(shift_variables(g, n + m, n));
    AlgebraPtr t = artinian_closure(LocalIdeal(std::move(gens)), degree_cap);
    if (t->dim() != a->dim() * b->dim()) throw Error("tensor dimension is not multiplicative");
    return t;
}

inline AlgebraPtr weil_tensor(const AlgebraPtr& a, const WeilAlgebra& w, int degree_cap = kDefaultDegreeCap) {
    return tensor(a, w.algebra(), degree_cap);
}

/// Image of a (as a polynomial in A's variables) inside a tensor product A (x) B.
inline Polynomial left_embed(const Polynomial& p, int tensor_arity) { return shift_variables(p, tensor_arity, 0); }
inline Polynomial right_embed(const Polynomial& p, int tensor_arity) {
    return shift_variables(p, tensor_arity, tensor_arity - p.arity());
}

/// a (x) b != 0 in A (x) B.
inline bool tensor_of_elements_nonzero(const QuotientElement& a, const QuotientElement& b) {
    AlgebraPtr t = tensor(a.algebra(), b.algebra());
    Polynomial prod = left_embed(a.lift(), t->arity()) * right_embed(b.lift(), t->arity());
    return !member(t, prod);
}

/// Homomorphism of local algebras determined by the images of the source variables.
class AlgebraMorphism {
public:
    AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<Polynomial> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != source_->arity())
            throw ArityMismatch("one image per source variable required");
        for (auto& img : images_) {
            if (img.arity() != target_->arity()) throw ArityMismatch("image arity differs from target arity");
            if (target_->reduce(img).front() != 0)
                throw DomainError("images of variables must lie in the maximal ideal");
        }
        for (const auto& g : source_->ideal().generators())
            if (!member(target_, compose(g, images_)))
                throw DomainError("morphism is not well defined: a source relation does not map to zero");
    }

    AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, const std::vector<QuotientElement>& images)
        : AlgebraMorphism(std::move(source), std::move(target), lifts(images)) {}

    const AlgebraPtr& source() const noexcept { return source_; }
    const AlgebraPtr& target() const noexcept { return target_; }
    const std::vector<Polynomial>& images() const noexcept { return images_; }

    QuotientElement operator()(const QuotientElement& e) const {
        return normal_form(target_, compose(e.lift(), images_));
    }

    static AlgebraMorphism identity(const AlgebraPtr& a) {
        std::vector<Polynomial> images;
        for (int i = 0; i < a->arity(); ++i) images.push_back(Polynomial::variable(a->arity(), i));
        return AlgebraMorphism(a, a, std::move(images));
    }

    /// The augmentation W -> k, with k presented as WeilAlgebra::reals().
    static AlgebraMorphism augmentation(const AlgebraPtr& w) {
        WeilAlgebra k = WeilAlgebra::reals();
        std::vector<Polynomial> images(static_cast<std::size_t>(w->arity()), Polynomial(1));
        return AlgebraMorphism(w, k.algebra(), std::move(images));
    }

private:
    static std::vector<Polynomial> lifts(const std::vector<QuotientElement>& images) {
        std::vector<Polynomial> out;
        for (const auto& e : images) out.push_back(e.lift());
        return out;
    }

    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<Polynomial> images_;
};

struct TensorKernelReport {
    int tensor_dim = 0;
    int kernel_dim = 0;       ///< dim ker(id (x) phi)
    int ideal_dim = 0;        ///< dim of the ideal generated by 1 (x) ker(phi)
    int phi_kernel_dim = 0;   ///< dim ker(phi) inside W
    bool equal = false;
};

/// Compares ker(id (x) phi : A (x) W -> A (x) W') with the ideal generated by 1 (x) ker(phi).
inline TensorKernelReport tensor_kernel_report(const AlgebraPtr& a, const AlgebraMorphism& phi) {
    const AlgebraPtr& w = phi.source();
    const AlgebraPtr& w2 = phi.target();
    AlgebraPtr t = tensor(a, w);
    AlgebraPtr t2 = tensor(a, w2);
    const int n = a->arity();

    // id (x) phi on the joint variables: x_i -> x_i, y_j -> phi(y_j).
    std::vector<Polynomial> joint;
    for (int i = 0; i < n; ++i) joint.push_back(Polynomial::variable(t2->arity(), i));
    for (const auto& img : phi.images()) joint.push_back(right_embed(img, t2->arity()));

    std::vector<SparseVector> images;
    for (const auto& b : t->basis()) images.push_back(t2->reduce_sparse(compose(Polynomial::monomial(b), joint)));
    std::vector<SparseVector> kernel = kernel_basis(images, t2->dim());

    std::vector<SparseVector> phi_images;
    for (const auto& b : w->basis())
        phi_images.push_back(w2->reduce_sparse(compose(Polynomial::monomial(b), phi.images())));
    std::vector<SparseVector> phi_kernel = kernel_basis(phi_images, w2->dim());

    std::vector<SparseVector> generated;
    for (const auto& k : phi_kernel) {
        Polynomial lifted = right_embed(w->lift(dense_from_sparse(k, w->dim())), t->arity());
        for (const auto& b : t->basis()) generated.push_back(t->reduce_sparse(lifted.mul_monomial(b)));
    }

    TensorKernelReport r;
    r.tensor_dim = t->dim();
    r.kernel_dim = static_cast<int>(kernel.size());
    r.ideal_dim = rank_of(generated, t->dim());
    r.phi_kernel_dim = static_cast<int>(phi_kernel.size());
    r.equal = same_span(kernel, generated, t->dim());
    return r;
}

inline bool tensor_kernel_check(const AlgebraPtr& a, const AlgebraMorphism& phi) {
    return tensor_kernel_report(a, phi).equal;
}

/// A (x) B / (a0 - b0).
inline AlgebraPtr pushout(const QuotientElement& a0, const QuotientElement& b0, int degree_cap = kDefaultDegreeCap) {
    const AlgebraPtr& a = a0.algebra();
    const AlgebraPtr& b = b0.algebra();
    int arity = a->arity() + b->arity();
    if (arity > kMaxArity) throw DomainError("pushout needs at most 8 variables");
    std::vector<Polynomial> gens;
    for (const auto& g : a->ideal().generators()) gens.push_back(shift_variables(g, arity, 0));
    for (const auto& g : b->ideal().generators()) gens.push_back(shift_variables(g, arity, a->arity()));
    gens.push_back(left_embed(a0.lift(), arity) - right_embed(b0.lift(), arity));
    return artinian_closure(LocalIdeal(std::move(gens)), degree_cap);
}

/// Is A -> A (x) B / (a0 - b0) injective? Requires a0 and b0 to share a nilpotency index >= 2.
inline bool pushout_injective(const QuotientElement& a0, const QuotientElement& b0, int degree_cap = kDefaultDegreeCap) {
    auto ia = nilpotency_index(a0);
    auto ib = nilpotency_index(b0);
    if (!ia || !ib) throw PreconditionError("pushout elements must be nilpotent");
    if (*ia != *ib) throw PreconditionError("pushout elements have different nilpotency indices");
    if (*ia < 2) throw PreconditionError("pushout elements must be nonzero (nilpotency index >= 2)");
    AlgebraPtr p = pushout(a0, b0, degree_cap);
    const AlgebraPtr& a = a0.algebra();
    std::vector<SparseVector> images;
    for (const auto& m : a->basis()) images.push_back(p->reduce_sparse(left_embed(Polynomial::monomial(m), p->arity())));
    return rank_of(images, p->dim()) == a->dim();
}

}  // namespace artinian
