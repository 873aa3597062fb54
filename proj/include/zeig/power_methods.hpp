#pragma once

// Higher-order power iterations: the plain map x -> T(I,x,...,x)/|.|, its
// fixed-shift variant, and the adaptive shift that keeps the local Hessian
// definite so the iteration ascends (direction max) or descends (direction
// min) the induced polynomial mu.

#include <cmath>

#include "zeig/solver.hpp"
#include "zeig/tensor_ops.hpp"

namespace zeig {

template <typename Scalar>
VectorX<Scalar> hopm_step(const SymmetricTensor<Scalar>& tensor,
                          const VectorX<Scalar>& x) {
    VectorX<Scalar> v = contract_to_vector(tensor, x);
    const Scalar norm = v.norm();
    if (norm <= Scalar(1e-14))
        throw ZeroIterate("hopm_step: iterate vanished");
    return v / norm;
}

template <typename Scalar>
VectorX<Scalar> shifted_hopm_step(const SymmetricTensor<Scalar>& tensor,
                                  const VectorX<Scalar>& x,
                                  Scalar alpha) {
    VectorX<Scalar> v = contract_to_vector(tensor, x);
    v += alpha * x;
    const Scalar norm = v.norm();
    if (norm <= Scalar(1e-14))
        throw ZeroIterate("shifted_hopm_step: iterate vanished");
    return v / norm;
}

/// Shift making the shifted objective mu_alpha = mu + alpha |x|^m locally
/// convex (direction max) or concave (direction min) around x with margin
/// tau. Since the Hessian of mu is m(m-1) T(I,I,x,...,x) and the shift term
/// contributes at least alpha m I on the sphere,
///   alpha_k = max(0, (tau - lambda_min(grad^2 mu(x))) / m)
/// guarantees grad^2 mu_alpha(x) >= tau I; the min direction mirrors it.
/// Monotonicity of mu along the resulting iteration needs the full grad^2 mu
/// here, not the sphere-Lagrangian Hessian H, whose -mu(x) I offset leaves
/// the shift too small to convexify.
template <typename Scalar>
Scalar adaptive_shift(const SymmetricTensor<Scalar>& tensor,
                      const VectorX<Scalar>& x, Scalar tau,
                      ShiftDirection direction) {
    detail::require_dim(tensor, x, "adaptive_shift");
    detail::require_near_unit<Scalar>(x, "adaptive_shift");
    const Scalar m = Scalar(tensor.order());
    const auto eigen =
        symmetric_eigen<Scalar>(MatrixX<Scalar>(contract_to_matrix(tensor, x)));
    if (direction == ShiftDirection::Max) {
        const Scalar hess_min = m * (m - 1) * eigen.eigenvalues(0);
        return std::max(Scalar(0), (tau - hess_min) / m);
    }
    const Scalar hess_max =
        m * (m - 1) * eigen.eigenvalues(eigen.eigenvalues.size() - 1);
    return std::min(Scalar(0), -(tau + hess_max) / m);
}

/// Runs the configured power variant from x0 until the step change drops
/// below delta or k_max is reached. ZeroIterate aborts become step-failure
/// outcomes, not exceptions.
template <typename Scalar>
SolveOutcome<Scalar> run_power(const SymmetricTensor<Scalar>& tensor,
                               const VectorX<Scalar>& x0,
                               const SolverConfig<Scalar>& config) {
    SolveOutcome<Scalar> outcome;
    VectorX<Scalar> x = x0.normalized();
    if (config.trace) outcome.trace.push_back(x);

    for (int k = 1; k <= config.k_max; ++k) {
        VectorX<Scalar> next;
        try {
            switch (config.method) {
                case Method::Hopm:
                    next = hopm_step(tensor, x);
                    break;
                case Method::ShiftedHopm:
                    next = shifted_hopm_step(tensor, x, config.alpha);
                    break;
                case Method::AdaptiveHopm:
                    next = shifted_hopm_step(
                        tensor, x,
                        adaptive_shift(tensor, x, config.tau, config.direction));
                    // Concave branch: at a descending fixed point the shifted
                    // image is a negative multiple of x, so the iterate is
                    // negated to make minimizers fixed points of the map.
                    if (config.direction == ShiftDirection::Min) next = -next;
                    break;
                default:
                    throw Error("run_power: not a power-method variant");
            }
        } catch (const ZeroIterate& failure) {
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
