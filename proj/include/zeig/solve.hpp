#pragma once

#include "zeig/newton_methods.hpp"
#include "zeig/power_methods.hpp"

namespace zeig {

template <typename Scalar>
SolveOutcome<Scalar> run_solver(const SymmetricTensor<Scalar>& tensor,
                                const VectorX<Scalar>& x0,
                                const SolverConfig<Scalar>& config) {
    switch (config.method) {
        case Method::Ncm:
        case Method::Oncm:
            return run_newton(tensor, x0, config);
        default:
            return run_power(tensor, x0, config);
    }
}

}  // namespace zeig
