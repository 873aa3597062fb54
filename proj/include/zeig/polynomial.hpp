#pragma once

// Homogeneous polynomials as sparse exponent->coefficient maps, and the
// unique symmetric tensor realizing a given polynomial through mu.

#include <map>
#include <numeric>
#include <vector>

#include "zeig/symmetric_tensor.hpp"

namespace zeig {

template <typename Scalar>
class MonomialMap {
public:
    using ExponentVector = std::vector<int>;

    MonomialMap(int degree, int dim) : degree_(degree), dim_(dim) {
        if (degree < 1) throw DegreeMismatch("polynomial degree must be positive");
        if (dim < 1) throw DegreeMismatch("polynomial dimension must be positive");
    }

    /// Adds `coefficient` to the monomial with the given exponents. The
    /// exponents must be nonnegative and sum to the polynomial degree.
    void add_term(ExponentVector exponents, Scalar coefficient) {
        if (static_cast<int>(exponents.size()) != dim_)
            throw DegreeMismatch("monomial exponent vector has wrong length");
        int total = 0;
        for (int e : exponents) {
            if (e < 0) throw DegreeMismatch("monomial exponents must be nonnegative");
            total += e;
        }
        if (total != degree_)
            throw DegreeMismatch("monomial exponents must sum to the degree");
        terms_[std::move(exponents)] += coefficient;
    }

    Scalar coefficient(const ExponentVector& exponents) const {
        auto it = terms_.find(exponents);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    int degree() const { return degree_; }
    int dim() const { return dim_; }
    const std::map<ExponentVector, Scalar>& terms() const { return terms_; }

    Scalar operator()(const Eigen::VectorX<Scalar>& x) const {
        if (x.size() != dim_) throw DimMismatch("polynomial evaluated at wrong dimension");
        Scalar total = 0;
        for (const auto& [exponents, coeff] : terms_) {
            Scalar monomial = coeff;
            for (int j = 0; j < dim_; ++j)
                for (int e = 0; e < exponents[j]; ++e) monomial *= x(j);
            total += monomial;
        }
        return total;
    }

private:
    int degree_;
    int dim_;
    std::map<ExponentVector, Scalar> terms_;
};

using MonomialMapXd = MonomialMap<double>;

/// The unique symmetric tensor T with mu_T(x) = p(x): the coefficient of a
/// monomial with exponent pattern k is spread as c / multinomial(m; k) over
/// all index permutations realizing that pattern.
template <typename Scalar>
SymmetricTensor<Scalar> from_polynomial(const MonomialMap<Scalar>& p) {
    const int m = p.degree();
    const int n = p.dim();
    std::vector<int> exponents(static_cast<std::size_t>(n));
    return SymmetricTensor<Scalar>::from_index_generator(
        m, n, [&](std::span<const int> sorted_idx) -> Scalar {
            std::fill(exponents.begin(), exponents.end(), 0);
            for (int i : sorted_idx) ++exponents[static_cast<std::size_t>(i)];
            const Scalar coeff = p.coefficient(exponents);
            if (coeff == Scalar(0)) return Scalar(0);
            return coeff / Scalar(detail::multiset_permutations(sorted_idx));
        });
}

}  // namespace zeig
