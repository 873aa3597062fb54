#pragma once

// Newton corrections for the tensor eigen-problem. The plain correction
// (NCM) solves A(x) y = -g(x) in R^n and renormalizes x + y; the orthogonal
// correction (O-NCM) restricts the step to the tangent space at x by solving
// H_p(x) z = -U_x^T g(x), which stays well posed at eigenvalue zero. The
// bordered system in (u, beta) is the equivalent n+1 formulation of the
// orthogonal step. Steps are deliberately undamped: the overshoot of a
// near-singular solve is what carries the iteration away from spurious
// stationary points of |g|^2.

#include <cmath>

#include "zeig/solver.hpp"
#include "zeig/tensor_ops.hpp"

namespace zeig {

namespace detail {

/// Evaluates g, H and A at a unit point with a single tensor pass.
template <typename Scalar>
struct LocalModel {
    VectorX<Scalar> v;  ///< T(I,x,...,x)
    Scalar mu = 0;
    VectorX<Scalar> g;
    MatrixX<Scalar> H;

    LocalModel(const SymmetricTensor<Scalar>& tensor, const VectorX<Scalar>& x) {
        MatrixX<Scalar> second = contract_to_matrix(tensor, x);
        v = second * x;
        mu = x.dot(v);
        g = v - mu * x;
        H = Scalar(tensor.order() - 1) * second;
        H.diagonal().array() -= mu;
    }
};

}  // namespace detail

/// One NCM step: x' = (x + y)/|x + y| with y = -A(x)^{-1} g(x). There is no
/// step-length cap. Throws StepFailure when A(x) is singular at the pivot
/// floor or when x + y vanishes.
template <typename Scalar>
VectorX<Scalar> ncm_step(const SymmetricTensor<Scalar>& tensor,
                         const VectorX<Scalar>& x) {
    detail::require_dim(tensor, x, "ncm_step");
    VectorX<Scalar> xn = detail::require_near_unit<Scalar>(x, "ncm_step");
    detail::LocalModel<Scalar> model(tensor, xn);
    MatrixX<Scalar> A = model.H;
    A.noalias() -= Scalar(tensor.order()) * xn * model.v.transpose();
    VectorX<Scalar> y;
    try {
        y = solve_general<Scalar>(A, -model.g);
    } catch (const SingularMatrix& failure) {
        throw StepFailure(std::string("ncm_step: ") + failure.what());
    }
    VectorX<Scalar> next = xn + y;
    const Scalar norm = next.norm();
    if (norm <= Scalar(1e-14))
        throw StepFailure("ncm_step: corrected point vanished");
    return next / norm;
}

/// One O-NCM step: x' = (x + u)/|x + u| with u = -U H_p^{-1} U^T g, so that
/// x^T u = 0 and |x + u| = sqrt(1 + |u|^2) >= 1.
template <typename Scalar>
VectorX<Scalar> oncm_step(const SymmetricTensor<Scalar>& tensor,
                          const VectorX<Scalar>& x) {
    detail::require_dim(tensor, x, "oncm_step");
    VectorX<Scalar> xn = detail::require_near_unit<Scalar>(x, "oncm_step");
    detail::LocalModel<Scalar> model(tensor, xn);
    MatrixX<Scalar> U = orthonormal_complement<Scalar>(xn);
    MatrixX<Scalar> Hp = U.transpose() * model.H * U;
    VectorX<Scalar> z;
    try {
        z = solve_general<Scalar>(Hp, -(U.transpose() * model.g));
    } catch (const SingularMatrix& failure) {
        throw StepFailure(std::string("oncm_step: ") + failure.what());
    }
    VectorX<Scalar> next = xn + U * z;
    return next / next.norm();
}

/// Solves the bordered system [[H(x), -x], [x^T, 0]] (u, beta) = (-g(x), 0).
/// The solution satisfies x^T u = 0 and beta = x^T H(x) u.
template <typename Scalar>
std::pair<VectorX<Scalar>, Scalar> solve_bordered(
    const SymmetricTensor<Scalar>& tensor,
    const VectorX<Scalar>& x) {
    detail::require_dim(tensor, x, "solve_bordered");
    VectorX<Scalar> xn = detail::require_near_unit<Scalar>(x, "solve_bordered");
    detail::LocalModel<Scalar> model(tensor, xn);
    const Eigen::Index n = xn.size();
    MatrixX<Scalar> bordered(n + 1, n + 1);
    bordered.topLeftCorner(n, n) = model.H;
    bordered.topRightCorner(n, 1) = -xn;
    bordered.bottomLeftCorner(1, n) = xn.transpose();
    bordered(n, n) = Scalar(0);
    VectorX<Scalar> rhs(n + 1);
    rhs.head(n) = -model.g;
    rhs(n) = Scalar(0);
    VectorX<Scalar> solution;
    try {
        solution = solve_general<Scalar>(bordered, rhs);
    } catch (const SingularMatrix& failure) {
        throw StepFailure(std::string("solve_bordered: ") + failure.what());
    }
    return {solution.head(n), solution(n)};
}

/// The Gauss-Newton objective f(x) = |g(x)|^2 / 2, zero exactly at
/// eigenvectors.
template <typename Scalar>
Scalar gauss_newton_objective(const SymmetricTensor<Scalar>& tensor,
                              const VectorX<Scalar>& x) {
    return gradient(tensor, x).squaredNorm() / Scalar(2);
}

/// Runs NCM or O-NCM from x0. Stops when |x_k - x_{k-1}| < delta
/// (converged), at k_max steps (iteration-cap), or on a singular linear
/// solve (step-failure, recorded rather than thrown).
template <typename Scalar>
SolveOutcome<Scalar> run_newton(const SymmetricTensor<Scalar>& tensor,
                                const VectorX<Scalar>& x0,
                                const SolverConfig<Scalar>& config) {
    SolveOutcome<Scalar> outcome;
    VectorX<Scalar> x = x0.normalized();
    if (config.trace) outcome.trace.push_back(x);

    for (int k = 1; k <= config.k_max; ++k) {
        VectorX<Scalar> next;
        try {
            switch (config.method) {
                case Method::Ncm:
                    next = ncm_step(tensor, x);
                    break;
                case Method::Oncm:
                    next = oncm_step(tensor, x);
                    break;
                default:
                    throw Error("run_newton: not a Newton-correction variant");
            }
        } catch (const StepFailure& failure) {
            outcome.status = SolveStatus::StepFailure;
            outcome.failure = failure.what();
            outcome.iterations = k - 1;
            detail::finalize_outcome(tensor, x, outcome);
            return outcome;
        }
        const Scalar change = (next - x).norm();
        x = next;
        if (config.trace) outcome.trace.push_back(x);
        if (change < config.delta) {
            outcome.status = SolveStatus::Converged;
            outcome.iterations = k;
            detail::finalize_outcome(tensor, x, outcome);
            return outcome;
        }
    }
    outcome.status = SolveStatus::IterationCap;
    outcome.iterations = config.k_max;
    detail::finalize_outcome(tensor, x, outcome);
    return outcome;
}

}  // namespace zeig
