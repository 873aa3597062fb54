#pragma once

// Shared configuration and outcome types for the iterative eigenpair
// solvers. All iterations stop when |x_k - x_{k-1}| < delta or after k_max
// steps; lambda is always reported as mu of the final iterate.

#include <string>
#include <vector>

#include "zeig/dense_linalg.hpp"
#include "zeig/tensor_ops.hpp"

namespace zeig {

enum class Method { Ncm, Oncm, Hopm, ShiftedHopm, AdaptiveHopm };

enum class ShiftDirection { Max, Min };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Ncm: return "ncm";
        case Method::Oncm: return "oncm";
        case Method::Hopm: return "hopm";
        case Method::ShiftedHopm: return "shopm";
        default: return "ashopm";
    }
}

inline Method parse_method(const std::string& name) {
    if (name == "ncm") return Method::Ncm;
    if (name == "oncm") return Method::Oncm;
    if (name == "hopm") return Method::Hopm;
    if (name == "shopm") return Method::ShiftedHopm;
    if (name == "ashopm") return Method::AdaptiveHopm;
    throw ParseError("unknown method: " + name);
}

template <typename Scalar>
struct SolverConfig {
    Method method = Method::Oncm;
    Scalar delta = Scalar(1e-10);  ///< step-change stopping tolerance
    int k_max = 200;               ///< iteration cap
    Scalar tau = Scalar(1e-6);     ///< definiteness margin of the adaptive shift
    Scalar alpha = Scalar(0);      ///< fixed shift for the shifted power method
    ShiftDirection direction = ShiftDirection::Max;
    bool trace = false;            ///< record the full iterate sequence
};

using SolverConfigXd = SolverConfig<double>;

enum class SolveStatus { Converged, IterationCap, StepFailure };

inline const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::IterationCap: return "iteration-cap";
        default: return "step-failure";
    }
}

template <typename Scalar>
struct SolveOutcome {
    SolveStatus status = SolveStatus::IterationCap;
    VectorX<Scalar> x;      ///< final unit iterate
    Scalar lambda = 0;      ///< mu(x)
    int iterations = 0;     ///< steps taken
    Scalar residual = 0;    ///< |g(x)| at the final iterate
    std::vector<VectorX<Scalar>> trace;  ///< iterates incl. x0, when requested
    std::string failure;    ///< diagnostic for step-failure outcomes
};

using SolveOutcomeXd = SolveOutcome<double>;

namespace detail {

template <typename Scalar>
void finalize_outcome(const SymmetricTensor<Scalar>& tensor, const VectorX<Scalar>& x,
                      SolveOutcome<Scalar>& outcome) {
    outcome.x = x;
    VectorX<Scalar> v = contract_to_vector(tensor, x);
    outcome.lambda = x.dot(v);
    outcome.residual = (v - outcome.lambda * x).norm();
}

}  // namespace detail

}  // namespace zeig
