// Exact sparse row echelon forms over the rationals.
//
// Pivots are always the highest column index of a row. Callers order columns so that
// "highest index" means "largest monomial", which makes reduction degree-decreasing.
#pragma once

#include <climits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "artinian/rational.hpp"

namespace artinian {

/// (index, value) pairs, strictly ascending indices, no zero values.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// y += a * x
inline void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
    if (a == 0 || x.empty()) return;
    SparseVector out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
            out.push_back(std::move(*iy++));
        } else if (iy == y.end() || ix->first < iy->first) {
            out.emplace_back(ix->first, a * ix->second);
            ++ix;
        } else {
            Rational v = iy->second + a * ix->second;
            if (v != 0) out.emplace_back(iy->first, std::move(v));
            ++iy;
            ++ix;
        }
    }
    y = std::move(out);
}

inline SparseVector scaled(const SparseVector& x, const Rational& a) {
    SparseVector out;
    if (a == 0) return out;
    out.reserve(x.size());
    for (const auto& [i, v] : x) out.emplace_back(i, v * a);
    return out;
}

inline SparseVector sparse_from_dense(const std::vector<Rational>& dense) {
    SparseVector out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) out.emplace_back(static_cast<int>(i), dense[i]);
    return out;
}

inline std::vector<Rational> dense_from_sparse(const SparseVector& v, int size) {
    std::vector<Rational> out(static_cast<std::size_t>(size));
    for (const auto& [i, x] : v) out[static_cast<std::size_t>(i)] = x;
    return out;
}

/// Incrementally built row echelon form with optional provenance (which inserted
/// vectors each row is a combination of).
class Echelon {
public:
    explicit Echelon(int columns, bool track_provenance = false)
        : rows_(static_cast<std::size_t>(columns)), provenance_(track_provenance) {}

    int columns() const noexcept { return static_cast<int>(rows_.size()); }
    int rank() const noexcept { return rank_; }
    bool is_pivot(int column) const { return rows_[static_cast<std::size_t>(column)].has_value(); }

    /// Row whose pivot is `column`: monic at the pivot, all other entries at lower columns.
    const SparseVector& row(int column) const { return rows_[static_cast<std::size_t>(column)]->values; }
    const SparseVector& row_provenance(int column) const { return rows_[static_cast<std::size_t>(column)]->origin; }

    /// Adds v to the row space. `origin` is recorded when provenance is tracked.
    /// Returns the new pivot column, or nullopt when v was already in the span.
    std::optional<int> insert(SparseVector v, SparseVector origin = {}) {
        while (!v.empty()) {
            int top = v.back().first;
            const auto& slot = rows_[static_cast<std::size_t>(top)];
            if (!slot) {
                Rational inv = 1 / v.back().second;
                Row r{scaled(v, inv), provenance_ ? scaled(origin, inv) : SparseVector{}};
                r.values.back().second = 1;
                rows_[static_cast<std::size_t>(top)] = std::move(r);
                ++rank_;
                return top;
            }
            Rational c = -v.back().second;
            axpy(v, c, slot->values);
            if (provenance_) axpy(origin, c, slot->origin);
        }
        return std::nullopt;
    }

    /// Fully reduces v: the result has no entry in any pivot column.
    SparseVector reduce(const SparseVector& v) const { return reduce_tracked(v, nullptr); }

    /// Like reduce(), also returning the combination of inserted vectors that was subtracted:
    /// v = reduce(v) + sum(combination[i] * inserted[i]).
    std::pair<SparseVector, SparseVector> reduce_with_provenance(const SparseVector& v) const {
        SparseVector combination;
        SparseVector rest = reduce_tracked(v, &combination);
        return {std::move(rest), std::move(combination)};
    }

private:
    struct Row {
        SparseVector values;
        SparseVector origin;
    };

    SparseVector reduce_tracked(const SparseVector& v, SparseVector* combination) const {
        std::map<int, Rational> acc;
        for (const auto& [i, x] : v) acc.emplace(i, x);
        std::map<int, Rational> used;
        int bound = INT_MAX;
        for (;;) {
            auto it = acc.lower_bound(bound);
            if (it == acc.begin()) break;
            --it;
            int k = it->first;
            bound = k;
            const auto& slot = rows_[static_cast<std::size_t>(k)];
            if (!slot) continue;
            Rational c = it->second;
            acc.erase(it);
            for (const auto& [j, x] : slot->values) {
                if (j == k) continue;
                auto [pos, inserted] = acc.try_emplace(j, -c * x);
                if (!inserted) {
                    pos->second -= c * x;
                    if (pos->second == 0) acc.erase(pos);
                }
            }
            if (combination != nullptr)
                for (const auto& [j, x] : slot->origin) used[j] += c * x;
        }
        if (combination != nullptr) {
            combination->clear();
            for (auto& [j, x] : used)
                if (x != 0) combination->emplace_back(j, x);
        }
        SparseVector out;
        out.reserve(acc.size());
        for (auto& [i, x] : acc) out.emplace_back(i, std::move(x));
        return out;
    }

    std::vector<std::optional<Row>> rows_;
    bool provenance_;
    int rank_ = 0;
};

/// Rank of a list of vectors of the given width.
inline int rank_of(const std::vector<SparseVector>& vectors, int width) {
    Echelon e(width);
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
}

/// Basis of the kernel of the linear map sending basis vector i to images[i].
inline std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& images, int width) {
    Echelon e(width, true);
    std::vector<SparseVector> kernel;
    for (std::size_t i = 0; i < images.size(); ++i) {
        SparseVector unit{{static_cast<int>(i), Rational(1)}};
        auto [rest, combination] = e.reduce_with_provenance(images[i]);
        if (rest.empty()) {
            // images[i] - sum(combination_j * images[j]) = 0
            SparseVector k = unit;
            axpy(k, Rational(-1), combination);
            kernel.push_back(std::move(k));
        } else {
            e.insert(images[i], unit);
        }
    }
    return kernel;
}

/// True iff span(a) == span(b).
inline bool same_span(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b, int width) {
    int ra = rank_of(a, width);
    if (ra != rank_of(b, width)) return false;
    std::vector<SparseVector> both(a);
    both.insert(both.end(), b.begin(), b.end());
    return rank_of(both, width) == ra;
}

}  // namespace artinian
