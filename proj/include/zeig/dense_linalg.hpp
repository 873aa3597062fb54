#pragma once

// Small dense kernels shared by the solvers: a pivoted general solve, a
// symmetric eigendecomposition and a deterministic orthonormal complement.
// Everything here operates on matrices of size n <= a few dozen.

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "zeig/errors.hpp"

namespace zeig {

template <typename Scalar>
using VectorX = Eigen::VectorX<Scalar>;
template <typename Scalar>
using MatrixX = Eigen::MatrixX<Scalar>;

/// Eigendecomposition of a symmetric matrix, eigenvalues sorted ascending,
/// eigenvectors orthonormal in the columns of `eigenvectors`.
template <typename Scalar>
struct SymmetricEigen {
    VectorX<Scalar> eigenvalues;
    MatrixX<Scalar> eigenvectors;
};

using SymmetricEigenXd = SymmetricEigen<double>;

/// Solves A y = b for a general (possibly nonsymmetric) square A by LU with
/// row pivoting. Throws SingularMatrix when a pivot magnitude falls below
/// 1e-14 * max|A_ij|.
template <typename Scalar>
VectorX<Scalar> solve_general(const MatrixX<Scalar>& A,
                              const VectorX<Scalar>& b) {
    if (A.rows() != A.cols())
        throw DimMismatch("solve_general: matrix must be square");
    if (A.rows() != b.size())
        throw DimMismatch("solve_general: rhs length does not match matrix");

    const Scalar max_abs = A.cwiseAbs().maxCoeff();
    Eigen::PartialPivLU<MatrixX<Scalar>> lu(A);
    const Scalar min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(min_pivot > Scalar(1e-14) * max_abs))
        throw SingularMatrix("solve_general: pivot below 1e-14 * max|A|");
    return lu.solve(b);
}

/// Eigendecomposition of a (nearly) symmetric matrix. The input is
/// symmetrized as (A + A^T)/2 before factorization.
template <typename Scalar>
SymmetricEigen<Scalar> symmetric_eigen(const MatrixX<Scalar>& A) {
    if (A.rows() != A.cols())
        throw DimMismatch("symmetric_eigen: matrix must be square");
    if (!A.allFinite())
        throw NonFinite("symmetric_eigen: input contains NaN or Inf");

    MatrixX<Scalar> sym = Scalar(0.5) * (A + A.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> solver(sym);
    if (solver.info() != Eigen::Success)
        throw Error("symmetric_eigen: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Returns an n x (n-1) matrix U with orthonormal columns spanning the
/// subspace orthogonal to the unit vector x, so that U^T x = 0 and
/// U U^T = I - x x^T. Built from the Householder reflector mapping x to
/// -sign(x_0) e_0; deterministic for fixed input bits.
template <typename Scalar>
MatrixX<Scalar> orthonormal_complement(const VectorX<Scalar>& x) {
    const Eigen::Index n = x.size();
    if (n < 1) throw DimMismatch("orthonormal_complement: empty vector");
    const Scalar gate = std::max(Scalar(1e-12),
                                 Scalar(100) * std::numeric_limits<Scalar>::epsilon());
    if (std::abs(x.norm() - Scalar(1)) > gate)
        throw NotUnit("orthonormal_complement: input is not unit length");

    const Scalar sigma = (x(0) >= Scalar(0)) ? Scalar(1) : Scalar(-1);
    VectorX<Scalar> w = x;
    w(0) += sigma;  // |w|^2 = 2 (1 + |x_0|) is bounded away from zero
    const Scalar scale = Scalar(2) / w.squaredNorm();

    MatrixX<Scalar> U(n, n - 1);
    for (Eigen::Index j = 1; j < n; ++j) {
        // Column j of H = I - scale * w w^T.
        U.col(j - 1) = -scale * w(j) * w;
        U(j, j - 1) += Scalar(1);
    }
    return U;
}

using Eigen::MatrixXd;
using Eigen::VectorXd;

}  // namespace zeig
