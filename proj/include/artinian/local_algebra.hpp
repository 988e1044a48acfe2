// Artinian quotients of formal power series rings at the origin.
//
// For an ideal I of k[[x_1..x_n]] and a degree D, k[[x]]/(I + m^D) is the finite
// dimensional space of polynomials of degree < D modulo the span of the truncated
// products m * g (m a monomial, g a generator). Its dimension is nondecreasing in D,
// and equality at D and D + 1 gives m^D = m^{D+1} modulo I, hence m^D is contained in I
// (Nakayama). From then on the truncated quotient *is* k[[x]]/I, exactly.
#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artinian/polynomial.hpp"
#include "artinian/sparse_linalg.hpp"

namespace artinian {

inline constexpr int kDefaultDegreeCap = 40;

/// Generators of an ideal contained in the maximal ideal at the origin.
class LocalIdeal {
public:
    explicit LocalIdeal(std::vector<Polynomial> generators) : generators_(std::move(generators)) {
        if (generators_.empty()) throw EmptyIdeal();
        arity_ = generators_.front().arity();
        for (const auto& g : generators_) {
            if (g.arity() != arity_) throw ArityMismatch("generator arities differ");
            if (g.constant_term() != 0) throw DomainError("generator does not vanish at the origin");
        }
    }

    int arity() const noexcept { return arity_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }

    bool all_zero() const {
        for (const auto& g : generators_)
            if (!g.is_zero()) return false;
        return true;
    }

    int max_generator_degree() const {
        int d = 0;
        for (const auto& g : generators_) d = std::max(d, g.degree());
        return d;
    }

    /// Same generators plus `extra`.
    LocalIdeal with(std::span<const Polynomial> extra) const {
        std::vector<Polynomial> gens = generators_;
        gens.insert(gens.end(), extra.begin(), extra.end());
        return LocalIdeal(std::move(gens));
    }

private:
    int arity_ = 0;
    std::vector<Polynomial> generators_;
};

namespace detail {

/// Span of the truncations of m * g below degree `bound`, over columns = monomials_below(n, bound).
struct TruncatedSpan {
    std::vector<Monomial> columns;
    std::unordered_map<Monomial, int, MonomialHash> index;
    Echelon echelon{0};
    /// (multiplier monomial, generator index) for every inserted vector, in insertion order.
    std::vector<std::pair<Monomial, int>> products;

    int dimension() const { return static_cast<int>(columns.size()) - echelon.rank(); }

    SparseVector to_columns(const Polynomial& p) const {
        SparseVector v;
        for (const auto& [m, c] : p.terms()) {
            if (m.degree() >= static_cast<int>(bound)) break;
            v.emplace_back(index.at(m), c);
        }
        return v;
    }

    int bound = 0;
};

inline TruncatedSpan truncated_span(const LocalIdeal& ideal, int bound, bool track_provenance = false) {
    TruncatedSpan s;
    s.bound = bound;
    s.columns = monomials_below(ideal.arity(), bound);
    s.index.reserve(s.columns.size());
    for (std::size_t i = 0; i < s.columns.size(); ++i) s.index.emplace(s.columns[i], static_cast<int>(i));
    s.echelon = Echelon(static_cast<int>(s.columns.size()), track_provenance);
    for (std::size_t k = 0; k < ideal.generators().size(); ++k) {
        const Polynomial& g = ideal.generators()[k];
        if (g.is_zero()) continue;
        int room = bound - g.order();
        for (int d = 0; d < room; ++d) {
            for (const Monomial& m : monomials_of_degree(ideal.arity(), d)) {
                SparseVector v;
                for (const auto& [t, c] : g.terms()) {
                    int deg = t.degree() + d;
                    if (deg >= bound) break;
                    v.emplace_back(s.index.at(t * m), c);
                }
                // Products with a monomial stay grlex sorted, so v is already ascending.
                SparseVector origin;
                if (track_provenance) origin.emplace_back(static_cast<int>(s.products.size()), Rational(1));
                s.products.emplace_back(m, static_cast<int>(k));
                s.echelon.insert(std::move(v), std::move(origin));
            }
        }
    }
    return s;
}

}  // namespace detail

class QuotientAlgebra;
using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

/// k[[x]]/I for an Artinian local ideal, with its monomial basis and a reduction table
/// giving the normal form of every monomial below the certified degree.
class QuotientAlgebra {
public:
    const LocalIdeal& ideal() const noexcept { return ideal_; }
    int arity() const noexcept { return ideal_.arity(); }

    /// Every monomial of total degree >= certified_degree() lies in the ideal.
    int certified_degree() const noexcept { return certified_degree_; }
    /// dim k[[x]]/(I + m^D) for D = 1, 2, ..., certified_degree() + 1.
    const std::vector<int>& dimension_history() const noexcept { return history_; }

    int dim() const noexcept { return static_cast<int>(basis_.size()); }
    /// Standard monomials (not leading terms of the ideal), ascending grlex; basis()[0] == 1.
    const std::vector<Monomial>& basis() const noexcept { return basis_; }
    /// Leading monomials of the ideal below the certified degree.
    const std::vector<Monomial>& staircase() const noexcept { return staircase_; }

    int basis_index(const Monomial& m) const {
        auto it = basis_index_.find(m);
        return it == basis_index_.end() ? -1 : it->second;
    }

    /// Normal form coordinates (sparse, over basis indices).
    SparseVector reduce_sparse(const Polynomial& p) const {
        if (p.arity() != arity()) throw ArityMismatch("polynomial arity differs from algebra arity");
        SparseVector acc;
        for (const auto& [m, c] : p.terms()) {
            if (m.degree() >= certified_degree_) break;
            axpy(acc, c, table_[static_cast<std::size_t>(column_index_.at(m))]);
        }
        return acc;
    }

    std::vector<Rational> reduce(const Polynomial& p) const { return dense_from_sparse(reduce_sparse(p), dim()); }

    /// The polynomial sum(coords[i] * basis[i]).
    Polynomial lift(std::span<const Rational> coords) const {
        Polynomial p(arity());
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] != 0) p.add_term(basis_[i], coords[i]);
        return p;
    }

    /// Normal form of a single monomial (a row of the reduction table).
    const SparseVector& monomial_normal_form(const Monomial& m) const {
        static const SparseVector zero;
        if (m.degree() >= certified_degree_) return zero;
        return table_[static_cast<std::size_t>(column_index_.at(m))];
    }

    /// Exponent e such that x_i^e is a leading monomial, for each variable.
    std::vector<int> pure_power_exponents() const {
        std::vector<int> out(static_cast<std::size_t>(arity()), certified_degree_);
        for (const auto& m : staircase_) {
            int v = m.pure_power_variable();
            if (v >= 0) out[static_cast<std::size_t>(v)] = std::min(out[static_cast<std::size_t>(v)], m[v]);
        }
        return out;
    }

private:
    friend AlgebraPtr artinian_closure(const LocalIdeal& ideal, int degree_cap);

    explicit QuotientAlgebra(LocalIdeal ideal) : ideal_(std::move(ideal)) {}

    LocalIdeal ideal_;
    int certified_degree_ = 0;
    std::vector<int> history_;
    std::vector<Monomial> basis_;
    std::vector<Monomial> staircase_;
    std::unordered_map<Monomial, int, MonomialHash> basis_index_;
    std::unordered_map<Monomial, int, MonomialHash> column_index_;
    std::vector<SparseVector> table_;
};

/// Certifies that k[[x]]/I is finite dimensional and builds its normal-form data.
/// Throws EmptyIdeal when every generator is zero and NotArtinian when no certificate
/// exists with working degree <= degree_cap.
inline AlgebraPtr artinian_closure(const LocalIdeal& ideal, int degree_cap = kDefaultDegreeCap) {
    if (ideal.all_zero()) throw EmptyIdeal();
    std::vector<int> history;
    std::optional<detail::TruncatedSpan> previous;
    int certified = -1;
    for (int bound = 1; bound <= degree_cap; ++bound) {
        detail::TruncatedSpan current = detail::truncated_span(ideal, bound);
        history.push_back(current.dimension());
        if (previous && previous->dimension() == current.dimension()) {
            certified = bound - 1;
            break;
        }
        previous = std::move(current);
    }
    if (certified < 0) throw NotArtinian(degree_cap);

    auto algebra = std::shared_ptr<QuotientAlgebra>(new QuotientAlgebra(ideal));
    QuotientAlgebra& q = *algebra;
    q.certified_degree_ = certified;
    q.history_ = std::move(history);
    const detail::TruncatedSpan& span = *previous;
    const Echelon& ech = span.echelon;
    for (std::size_t c = 0; c < span.columns.size(); ++c) {
        q.column_index_.emplace(span.columns[c], static_cast<int>(c));
        if (ech.is_pivot(static_cast<int>(c))) {
            q.staircase_.push_back(span.columns[c]);
        } else {
            q.basis_index_.emplace(span.columns[c], static_cast<int>(q.basis_.size()));
            q.basis_.push_back(span.columns[c]);
        }
    }
    // Normal forms by increasing column: a pivot row expresses its pivot monomial through
    // strictly smaller columns, whose normal forms are already known.
    q.table_.resize(span.columns.size());
    for (std::size_t c = 0; c < span.columns.size(); ++c) {
        int col = static_cast<int>(c);
        if (!ech.is_pivot(col)) {
            q.table_[c] = SparseVector{{q.basis_index_.at(span.columns[c]), Rational(1)}};
            continue;
        }
        SparseVector nf;
        for (const auto& [j, x] : ech.row(col)) {
            if (j == col) continue;
            axpy(nf, -x, q.table_[static_cast<std::size_t>(j)]);
        }
        q.table_[c] = std::move(nf);
    }
    return algebra;
}

/// An element of a quotient algebra: coordinates over its monomial basis.
class QuotientElement {
public:
    QuotientElement(AlgebraPtr algebra, std::vector<Rational> coords)
        : algebra_(std::move(algebra)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != algebra_->dim())
            throw ArityMismatch("coordinate length differs from algebra dimension");
    }

    static QuotientElement zero(AlgebraPtr algebra) {
        int d = algebra->dim();
        return QuotientElement(std::move(algebra), std::vector<Rational>(static_cast<std::size_t>(d)));
    }

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const std::vector<Rational>& coordinates() const noexcept { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    /// Coefficient of the basis monomial 1.
    const Rational& constant_coordinate() const { return coords_.front(); }

    Polynomial lift() const { return algebra_->lift(coords_); }

    QuotientElement operator+(const QuotientElement& o) const {
        require_same_algebra(o);
        std::vector<Rational> c = coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
        return {algebra_, std::move(c)};
    }
    QuotientElement operator-(const QuotientElement& o) const { return *this + o * Rational(-1); }
    QuotientElement operator*(const Rational& s) const {
        std::vector<Rational> c = coords_;
        for (auto& x : c) x *= s;
        return {algebra_, std::move(c)};
    }
    QuotientElement operator*(const QuotientElement& o) const {
        require_same_algebra(o);
        return {algebra_, algebra_->reduce(lift() * o.lift())};
    }

    bool operator==(const QuotientElement& o) const { return algebra_ == o.algebra_ && coords_ == o.coords_; }
    bool operator!=(const QuotientElement& o) const { return !(*this == o); }

private:
    void require_same_algebra(const QuotientElement& o) const {
        if (algebra_ != o.algebra_) throw ArityMismatch("elements belong to different algebras");
    }

    AlgebraPtr algebra_;
    std::vector<Rational> coords_;
};

inline QuotientElement normal_form(const AlgebraPtr& algebra, const Polynomial& p) {
    return QuotientElement(algebra, algebra->reduce(p));
}

inline bool member(const AlgebraPtr& algebra, const Polynomial& p) { return algebra->reduce_sparse(p).empty(); }

inline int quotient_dim(const AlgebraPtr& algebra) { return algebra->dim(); }

inline QuotientElement pow(const QuotientElement& e, unsigned k) {
    QuotientElement result = normal_form(e.algebra(), Polynomial::constant(e.algebra()->arity(), Rational(1)));
    for (unsigned i = 0; i < k; ++i) result = result * e;
    return result;
}

/// Least k >= 1 with e^k = 0; nullopt when e is a unit (nonzero constant coordinate).
inline std::optional<int> nilpotency_index(const QuotientElement& e) {
    if (e.constant_coordinate() != 0) return std::nullopt;
    QuotientElement power = e;
    int k = 1;
    // In a local algebra of dimension d every non-unit satisfies e^d = 0.
    while (!power.is_zero()) {
        if (k > e.algebra()->dim()) throw Error("nilpotency search exceeded the algebra dimension");
        power = power * e;
        ++k;
    }
    return k;
}

/// dim_k of the principal ideal (e) = span{ b * e : b in the monomial basis }.
inline int principal_ideal_dim(const QuotientElement& e) {
    const auto& algebra = e.algebra();
    Polynomial lifted = e.lift();
    Echelon span(algebra->dim());
    for (const auto& b : algebra->basis()) span.insert(algebra->reduce_sparse(lifted.mul_monomial(b)));
    return span.rank();
}

}  // namespace artinian
