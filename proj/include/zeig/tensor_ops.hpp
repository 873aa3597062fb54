#pragma once

// Multilinear quantities of a symmetric tensor T at a point x: the induced
// polynomial mu, the partial contractions T(I,x,...,x) and T(I,I,x,...,x),
// the spherical-Lagrangian gradient g and Hessian H, the projected Hessian
// H_p, the Jacobian A of g, and the exact higher-order expansion residuals
// used by the Newton corrections. Each quantity is one O(n^m) pass.

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "zeig/dense_linalg.hpp"
#include "zeig/symmetric_tensor.hpp"

namespace zeig {

namespace detail {

/// Contracts the last mode of a flat order-k tensor with x: n^k -> n^(k-1).
template <typename Scalar>
VectorX<Scalar> contract_last_mode(const VectorX<Scalar>& flat, int dim,
                                   const VectorX<Scalar>& x) {
    using RowMajor = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Index rows = flat.size() / dim;
    Eigen::Map<const RowMajor> view(flat.data(), rows, dim);
    return view * x;
}

/// Contracts `count` trailing modes with x.
template <typename Scalar>
VectorX<Scalar> contract_modes(VectorX<Scalar> flat, int dim,
                               const VectorX<Scalar>& x, int count) {
    for (int k = 0; k < count; ++k) flat = contract_last_mode(flat, dim, x);
    return flat;
}

template <typename Scalar>
void require_dim(const SymmetricTensor<Scalar>& tensor,
                 const VectorX<Scalar>& x, const char* where) {
    if (x.size() != tensor.dim())
        throw DimMismatch(std::string(where) + ": vector length must equal tensor dim");
}

template <typename Scalar>
VectorX<Scalar> require_near_unit(const VectorX<Scalar>& x,
                                  const char* where) {
    // 1e-8 in double precision; scaled up for narrower scalar types.
    const Scalar gate = std::max(Scalar(1e-8),
                                 Scalar(100) * std::numeric_limits<Scalar>::epsilon());
    const Scalar norm = x.norm();
    if (std::abs(norm - Scalar(1)) > gate)
        throw NotUnit(std::string(where) + ": point must lie on the unit sphere");
    return x / norm;
}

}  // namespace detail

/// mu(x) = T(x,...,x), the induced degree-m homogeneous polynomial.
template <typename Scalar>
Scalar mu(const SymmetricTensor<Scalar>& tensor,
          const VectorX<Scalar>& x) {
    detail::require_dim(tensor, x, "mu");
    VectorX<Scalar> xv = x;
    return detail::contract_modes(tensor.entries(), tensor.dim(), xv, tensor.order())(0);
}

/// T(I,x,...,x): all modes but the first contracted with x.
template <typename Scalar>
VectorX<Scalar> contract_to_vector(const SymmetricTensor<Scalar>& tensor,
                                   const VectorX<Scalar>& x) {
    detail::require_dim(tensor, x, "contract_to_vector");
    VectorX<Scalar> xv = x;
    return detail::contract_modes(tensor.entries(), tensor.dim(), xv, tensor.order() - 1);
}

/// T(I,I,x,...,x): all modes but the first two contracted with x. The result
/// is bitwise symmetric because the stored entries are.
template <typename Scalar>
MatrixX<Scalar> contract_to_matrix(const SymmetricTensor<Scalar>& tensor,
                                   const VectorX<Scalar>& x) {
    detail::require_dim(tensor, x, "contract_to_matrix");
    const int n = tensor.dim();
    VectorX<Scalar> xv = x;
    VectorX<Scalar> flat =
        detail::contract_modes(tensor.entries(), tensor.dim(), xv, tensor.order() - 2);
    using RowMajor = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    return Eigen::Map<const RowMajor>(flat.data(), n, n);
}

/// g(x) = T(I,x,...,x) - mu(x) x, for x on the unit sphere.
template <typename Scalar>
VectorX<Scalar> gradient(const SymmetricTensor<Scalar>& tensor,
                         const VectorX<Scalar>& x) {
    detail::require_dim(tensor, x, "gradient");
    detail::require_near_unit<Scalar>(x, "gradient");
    VectorX<Scalar> v = contract_to_vector(tensor, x);
    return v - x.dot(v) * x;
}

/// H(x) = (m-1) T(I,I,x,...,x) - mu(x) I.
template <typename Scalar>
MatrixX<Scalar> hessian(const SymmetricTensor<Scalar>& tensor,
                        const VectorX<Scalar>& x) {
    detail::require_dim(tensor, x, "hessian");
    detail::require_near_unit<Scalar>(x, "hessian");
    MatrixX<Scalar> second = contract_to_matrix(tensor, x);
    const Scalar mu_x = x.dot(second * x);
    MatrixX<Scalar> result = Scalar(tensor.order() - 1) * second;
    result.diagonal().array() -= mu_x;
    return result;
}

/// H_p(x) = U_x^T H(x) U_x with U_x the orthonormal complement of x.
template <typename Scalar>
MatrixX<Scalar> projected_hessian(const SymmetricTensor<Scalar>& tensor,
                                  const VectorX<Scalar>& x) {
    detail::require_dim(tensor, x, "projected_hessian");
    VectorX<Scalar> xn = detail::require_near_unit<Scalar>(x, "projected_hessian");
    MatrixX<Scalar> U = orthonormal_complement<Scalar>(xn);
    return U.transpose() * hessian(tensor, xn) * U;
}

/// A(x) = H(x) - m x T(I,x,...,x)^T, the Jacobian of g at x.
template <typename Scalar>
MatrixX<Scalar> jacobian_A(const SymmetricTensor<Scalar>& tensor,
                           const VectorX<Scalar>& x) {
    detail::require_dim(tensor, x, "jacobian_A");
    detail::require_near_unit<Scalar>(x, "jacobian_A");
    MatrixX<Scalar> second = contract_to_matrix(tensor, x);
    VectorX<Scalar> v = second * x;
    const Scalar mu_x = x.dot(v);
    MatrixX<Scalar> result = Scalar(tensor.order() - 1) * second;
    result.diagonal().array() -= mu_x;
    result.noalias() -= Scalar(tensor.order()) * x * v.transpose();
    return result;
}

namespace detail {

/// T(I, x,...,x, y,...,y) with i copies of y and m-1-i copies of x.
template <typename Scalar>
VectorX<Scalar> mixed_contraction(const SymmetricTensor<Scalar>& tensor,
                                  const VectorX<Scalar>& x,
                                  const VectorX<Scalar>& y, int y_count) {
    VectorX<Scalar> flat = contract_modes(tensor.entries(), tensor.dim(), y, y_count);
    return contract_modes(flat, tensor.dim(), x, tensor.order() - 1 - y_count);
}

}  // namespace detail

/// The exact higher-order remainder of expanding the eigen-equation at x + y
/// around x after removing the constant and linear terms:
///   T(I,x+y,...,x+y) - mu(x+y)(x+y) = g(x) + A(x) y - delta_ncm(x, y).
template <typename Scalar>
VectorX<Scalar> delta_ncm(const SymmetricTensor<Scalar>& tensor,
                          const VectorX<Scalar>& x,
                          const VectorX<Scalar>& y) {
    detail::require_dim(tensor, x, "delta_ncm");
    detail::require_dim(tensor, y, "delta_ncm");
    const int m = tensor.order();
    const VectorX<Scalar> xv = x;
    const VectorX<Scalar> yv = y;

    VectorX<Scalar> result = VectorX<Scalar>::Zero(tensor.dim());
    VectorX<Scalar> flat = tensor.entries();
    for (int i = 1; i <= m; ++i) {
        flat = detail::contract_last_mode(flat, tensor.dim(), yv);  // i modes of y
        VectorX<Scalar> with_free =
            detail::contract_modes(flat, tensor.dim(), xv, m - 1 - i);
        Scalar scalar_term;
        if (i == m) {
            scalar_term = with_free(0);  // T(y,...,y); no free mode remains
        } else {
            scalar_term = xv.dot(with_free);  // T(x,...,x,y,...,y)
            if (i >= 2 && i <= m - 1)
                result -= Scalar(detail::binomial(m - 1, i)) * with_free;
        }
        if (i >= 2) result += Scalar(detail::binomial(m, i)) * scalar_term * xv;
        result += Scalar(detail::binomial(m, i)) * scalar_term * yv;
    }
    return result;
}

/// The exact higher-order remainder of the orthogonal-correction expansion:
///   T(I,x+u,...,x+u) - (mu(x)+beta)(x+u)
///     = g(x) + H(x) u - beta x - delta_oncm(x, u, beta).
template <typename Scalar>
VectorX<Scalar> delta_oncm(const SymmetricTensor<Scalar>& tensor,
                           const VectorX<Scalar>& x,
                           const VectorX<Scalar>& u,
                           Scalar beta) {
    detail::require_dim(tensor, x, "delta_oncm");
    detail::require_dim(tensor, u, "delta_oncm");
    const int m = tensor.order();
    const VectorX<Scalar> xv = x;
    const VectorX<Scalar> uv = u;

    VectorX<Scalar> result = beta * uv;
    VectorX<Scalar> flat = tensor.entries();
    for (int i = 1; i <= m - 1; ++i) {
        flat = detail::contract_last_mode(flat, tensor.dim(), uv);
        if (i < 2) continue;
        VectorX<Scalar> with_free =
            detail::contract_modes(flat, tensor.dim(), xv, m - 1 - i);
        result -= Scalar(detail::binomial(m - 1, i)) * with_free;
    }
    return result;
}

/// Basis of the span of the tensor fibers T(:,i2,...,im) and of its
/// orthogonal complement. Singular values below 1e-10 * sigma_max are
/// treated as null.
template <typename Scalar>
struct FiberSpan {
    MatrixX<Scalar> span;        ///< n x r, orthonormal columns
    MatrixX<Scalar> complement;  ///< n x (n-r), orthonormal columns
    VectorX<Scalar> singular_values;
};

template <typename Scalar>
FiberSpan<Scalar> fiber_span(const SymmetricTensor<Scalar>& tensor) {
    using RowMajor = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const int n = tensor.dim();
    const Eigen::Index cols = tensor.size() / n;
    Eigen::Map<const RowMajor> unfolding(tensor.entries().data(), n, cols);

    // SVD of the transposed unfolding; its right singular vectors span the
    // fiber space.
    Eigen::JacobiSVD<MatrixX<Scalar>> svd(unfolding.transpose(), Eigen::ComputeThinV);
    const VectorX<Scalar>& sigma = svd.singularValues();
    const Scalar cutoff = sigma.size() > 0 ? Scalar(1e-10) * sigma(0) : Scalar(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) > cutoff && sigma(i) > Scalar(0)) ++rank;

    FiberSpan<Scalar> result;
    result.singular_values = sigma;
    result.span = svd.matrixV().leftCols(rank);
    result.complement = svd.matrixV().rightCols(n - rank);
    return result;
}

}  // namespace zeig
