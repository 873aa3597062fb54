#pragma once

// Dense storage for real symmetric tensors of order m and dimension n.
// Entries are kept in row-major multi-index order (first index slowest) and
// symmetry is exact by construction: every permutation of an index tuple maps
// to the same stored bits.

#include <Eigen/Core>
#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zeig/errors.hpp"

namespace zeig {

namespace detail {

/// n^m as a flat storage size, guarded at 1e8 entries.
inline Eigen::Index storage_size(int order, int dim) {
    std::int64_t size = 1;
    for (int k = 0; k < order; ++k) {
        size *= dim;
        if (size > 100'000'000)
            throw SizeGuard("tensor storage exceeds 1e8 entries");
    }
    return static_cast<Eigen::Index>(size);
}

inline Eigen::Index linear_index(int dim, std::span<const int> idx) {
    Eigen::Index lin = 0;
    for (int i : idx) lin = lin * dim + i;
    return lin;
}

/// Linear index of the sorted (non-decreasing) rearrangement of `idx`.
/// `scratch` must have idx.size() capacity.
inline Eigen::Index canonical_linear_index(int dim, std::span<const int> idx,
                                           std::span<int> scratch) {
    std::copy(idx.begin(), idx.end(), scratch.begin());
    std::sort(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(idx.size()));
    Eigen::Index lin = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) lin = lin * dim + scratch[k];
    return lin;
}

/// Advances a row-major multi-index odometer; returns false after the last.
inline bool next_multi_index(std::span<int> idx, int dim) {
    for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
        if (++idx[k] < dim) return true;
        idx[k] = 0;
    }
    return false;
}

/// Advances a sorted (non-decreasing) multi-index; returns false after the
/// last. Enumerates each index multiset exactly once.
inline bool next_sorted_multi_index(std::span<int> idx, int dim) {
    const int m = static_cast<int>(idx.size());
    for (int k = m - 1; k >= 0; --k) {
        if (idx[k] + 1 < dim) {
            const int v = idx[k] + 1;
            for (int j = k; j < m; ++j) idx[j] = v;
            return true;
        }
    }
    return false;
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (int i = 1; i <= k; ++i) result = result * double(n - k + i) / double(i);
    return result;
}

/// Number of distinct permutations of a sorted index tuple,
/// m! / (prod of multiplicity factorials).
inline double multiset_permutations(std::span<const int> sorted_idx) {
    const int m = static_cast<int>(sorted_idx.size());
    double numerator = 1.0;
    for (int i = 2; i <= m; ++i) numerator *= double(i);
    double denominator = 1.0;
    int run = 1;
    for (int k = 1; k <= m; ++k) {
        if (k < m && sorted_idx[k] == sorted_idx[k - 1]) {
            ++run;
        } else {
            for (int i = 2; i <= run; ++i) denominator *= double(i);
            run = 1;
        }
    }
    return numerator / denominator;
}

}  // namespace detail

template <typename Scalar>
class SymmetricTensor {
public:
    using Vector = Eigen::VectorX<Scalar>;

    SymmetricTensor() = default;

    /// Builds a symmetric tensor by averaging the raw entries over all index
    /// permutations. Idempotent on already-symmetric input.
    static SymmetricTensor symmetrized(int order, int dim, const Vector& raw) {
        const Eigen::Index size = checked_size(order, dim);
        if (raw.size() != size)
            throw SizeMismatch("symmetrized: raw entry count must be dim^order");

        Vector sums = Vector::Zero(size);
        Eigen::VectorX<std::int32_t> counts = Eigen::VectorX<std::int32_t>::Zero(size);
        std::vector<int> idx(static_cast<std::size_t>(order), 0);
        std::vector<int> scratch(static_cast<std::size_t>(order), 0);
        Eigen::Index lin = 0;
        do {
            const Eigen::Index canon = detail::canonical_linear_index(dim, idx, scratch);
            sums(canon) += raw(lin);
            counts(canon) += 1;
            ++lin;
        } while (detail::next_multi_index(idx, dim));

        Vector entries(size);
        std::fill(idx.begin(), idx.end(), 0);
        lin = 0;
        do {
            const Eigen::Index canon = detail::canonical_linear_index(dim, idx, scratch);
            entries(lin) = sums(canon) / Scalar(counts(canon));
            ++lin;
        } while (detail::next_multi_index(idx, dim));

        return SymmetricTensor(order, dim, std::move(entries));
    }

    /// Builds a symmetric tensor from one value per index multiset. The
    /// callable receives the sorted multi-index and its value is replicated
    /// bit-exactly to every permutation.
    template <typename F>
    static SymmetricTensor from_index_generator(int order, int dim, F&& value_at_sorted) {
        const Eigen::Index size = checked_size(order, dim);
        Vector canonical(size);
        std::vector<int> idx(static_cast<std::size_t>(order), 0);
        do {
            canonical(detail::linear_index(dim, idx)) =
                value_at_sorted(std::span<const int>(idx));
        } while (detail::next_sorted_multi_index(idx, dim));

        Vector entries(size);
        std::fill(idx.begin(), idx.end(), 0);
        std::vector<int> scratch(static_cast<std::size_t>(order), 0);
        Eigen::Index lin = 0;
        do {
            entries(lin) = canonical(detail::canonical_linear_index(dim, idx, scratch));
            ++lin;
        } while (detail::next_multi_index(idx, dim));

        return SymmetricTensor(order, dim, std::move(entries));
    }

    int order() const { return order_; }
    int dim() const { return dim_; }
    Eigen::Index size() const { return entries_.size(); }
    const Vector& entries() const { return entries_; }

    Scalar at(std::span<const int> idx) const {
        if (static_cast<int>(idx.size()) != order_)
            throw DimMismatch("at: index length must equal tensor order");
        for (int i : idx)
            if (i < 0 || i >= dim_) throw DimMismatch("at: index out of range");
        return entries_(detail::linear_index(dim_, idx));
    }

    Scalar operator()(std::initializer_list<int> idx) const {
        return at(std::span<const int>(idx.begin(), idx.size()));
    }

private:
    static Eigen::Index checked_size(int order, int dim) {
        if (order < 2) throw DimMismatch("tensor order must be at least 2");
        if (dim < 2) throw DimMismatch("tensor dimension must be at least 2");
        return detail::storage_size(order, dim);
    }

    SymmetricTensor(int order, int dim, Vector entries)
        : order_(order), dim_(dim), entries_(std::move(entries)) {
        if (!entries_.allFinite())
            throw NonFinite("symmetric tensor entries must be finite");
    }

    int order_ = 0;
    int dim_ = 0;
    Vector entries_;
};

using SymmetricTensorXd = SymmetricTensor<double>;

}  // namespace zeig
