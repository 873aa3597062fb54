#pragma once

// Eigenpair validation, spectral stability classification, sign
// canonicalization, dedup distance and empirical convergence-order fitting.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "zeig/dense_linalg.hpp"
#include "zeig/tensor_ops.hpp"

namespace zeig {

/// A validated eigenpair in its canonical sign class: the first coordinate
/// with |x_i| > 1e-10 is positive.
template <typename Scalar>
struct Eigenpair {
    VectorX<Scalar> x;
    Scalar lambda = 0;
    Scalar residual = 0;
    std::string source;
};

using EigenpairXd = Eigenpair<double>;

enum class PowerClass { PositiveStable, NegativeStable, Unstable };

inline const char* power_class_name(PowerClass c) {
    switch (c) {
        case PowerClass::PositiveStable: return "positive-stable";
        case PowerClass::NegativeStable: return "negative-stable";
        default: return "power-unstable";
    }
}

/// Spectral stability report of an eigenpair: the spectrum of the projected
/// Hessian, its numerical rank, the margin gamma = min |mu_i| and the
/// power-method / Newton classifications.
template <typename Scalar>
struct StabilityReport {
    VectorX<Scalar> hp_spectrum;  ///< ascending eigenvalues of H_p(x*)
    Scalar gamma = 0;             ///< min |hp_spectrum|
    int rank = 0;                 ///< eigenvalues above the rank tolerance
    Scalar rank_tolerance = 0;    ///< 1e-7 * max(1, ||H_p||)
    PowerClass power_class = PowerClass::Unstable;
    bool newton_stable = false;
};

using StabilityReportXd = StabilityReport<double>;

template <typename Scalar>
struct EigenpairValidation {
    VectorX<Scalar> x;  ///< renormalized input
    Scalar lambda = 0;
    Scalar residual = 0;
    bool ok = false;
};

/// Checks T(I,x,...,x) = lambda x with lambda = mu(x). The input is
/// renormalized internally; ok means the residual is within `tol`.
template <typename Scalar>
EigenpairValidation<Scalar> validate_eigenpair(const SymmetricTensor<Scalar>& tensor,
                                               const VectorX<Scalar>& x,
                                               Scalar tol = Scalar(1e-8)) {
    EigenpairValidation<Scalar> result;
    const Scalar norm = x.norm();
    if (!(norm > Scalar(0)) || !x.allFinite()) {
        result.x = x;
        result.residual = std::numeric_limits<Scalar>::infinity();
        return result;
    }
    result.x = x / norm;
    VectorX<Scalar> v = contract_to_vector(tensor, result.x);
    result.lambda = result.x.dot(v);
    result.residual = (v - result.lambda * result.x).norm();
    result.ok = result.residual <= tol;
    return result;
}

/// Canonical sign representative: flips (x, lambda) -> (-x, (-1)^m lambda)
/// when the first coordinate with |x_i| > 1e-10 is negative.
template <typename Scalar>
void canonical_sign_inplace(VectorX<Scalar>& x, Scalar& lambda, int order) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(x(i)) <= Scalar(1e-10)) continue;
        if (x(i) < Scalar(0)) {
            x = -x;
            if (order % 2 != 0) lambda = -lambda;
        }
        return;
    }
}

/// Stability classification of a validated eigenpair. Throws NotEigenpair if
/// the point does not validate at 1e-8. The report describes the canonical
/// sign representative, so x and -x classify identically.
template <typename Scalar>
StabilityReport<Scalar> classify(const SymmetricTensor<Scalar>& tensor,
                                 const VectorX<Scalar>& x) {
    const auto validation = validate_eigenpair(tensor, x);
    if (!validation.ok)
        throw NotEigenpair("classify: point is not an eigenvector at tolerance 1e-8");

    VectorX<Scalar> canonical = validation.x;
    Scalar lambda = validation.lambda;
    canonical_sign_inplace(canonical, lambda, tensor.order());
    MatrixX<Scalar> hp = projected_hessian(tensor, canonical);
    const auto eigen = symmetric_eigen<Scalar>(hp);

    StabilityReport<Scalar> report;
    report.hp_spectrum = eigen.eigenvalues;
    const Scalar spectral_norm = report.hp_spectrum.cwiseAbs().maxCoeff();
    report.rank_tolerance = Scalar(1e-7) * std::max(Scalar(1), spectral_norm);
    report.gamma = report.hp_spectrum.cwiseAbs().minCoeff();
    report.rank = 0;
    for (Eigen::Index i = 0; i < report.hp_spectrum.size(); ++i)
        if (std::abs(report.hp_spectrum(i)) > report.rank_tolerance) ++report.rank;
    report.newton_stable = report.gamma > report.rank_tolerance;

    const Scalar smallest = report.hp_spectrum(0);
    const Scalar largest = report.hp_spectrum(report.hp_spectrum.size() - 1);
    if (smallest > report.rank_tolerance)
        report.power_class = PowerClass::PositiveStable;
    else if (largest < -report.rank_tolerance)
        report.power_class = PowerClass::NegativeStable;
    else
        report.power_class = PowerClass::Unstable;
    return report;
}

template <typename Scalar>
Eigenpair<Scalar> canonical_sign(const VectorX<Scalar>& x,
                                 Scalar lambda, int order) {
    Eigenpair<Scalar> pair;
    pair.x = x;
    pair.lambda = lambda;
    canonical_sign_inplace(pair.x, pair.lambda, order);
    return pair;
}

template <typename Scalar>
Eigenpair<Scalar> canonical_sign(Eigenpair<Scalar> pair, int order) {
    canonical_sign_inplace(pair.x, pair.lambda, order);
    return pair;
}

/// True when two canonical eigenpairs coincide up to `tol` in the sign class
/// metric min(|x_p - x_q|, |x_p + x_q|).
template <typename Scalar>
bool same_eigenpair(const Eigenpair<Scalar>& p, const Eigenpair<Scalar>& q,
                    Scalar tol = Scalar(1e-6)) {
    if (p.x.size() != q.x.size()) return false;
    const Scalar dist = std::min((p.x - q.x).norm(), (p.x + q.x).norm());
    return dist <= tol;
}

/// Fits the empirical convergence order from an iterate trace: the
/// least-squares slope of log e_{k+1} against log e_k, restricted to the
/// window 1e-12 <= e <= 1e-1 that excludes the floating-point floor.
/// Requires at least 4 iterates and 2 admissible consecutive pairs.
template <typename Scalar>
Scalar convergence_order(const std::vector<VectorX<Scalar>>& trace,
                         const VectorX<Scalar>& x_star) {
    if (trace.size() < 4)
        throw InsufficientTrace("convergence_order: need at least 4 iterates");

    std::vector<Scalar> log_errors;
    log_errors.reserve(trace.size());
    for (const auto& iterate : trace)
        log_errors.push_back(std::log((x_star - iterate).norm()));

    const Scalar lo = std::log(Scalar(1e-12));
    const Scalar hi = std::log(Scalar(1e-1));
    std::vector<std::pair<Scalar, Scalar>> points;
    for (std::size_t k = 0; k + 1 < log_errors.size(); ++k) {
        const Scalar a = log_errors[k];
        const Scalar b = log_errors[k + 1];
        if (a >= lo && a <= hi && b >= lo && b <= hi) points.emplace_back(a, b);
    }
    if (points.size() < 2)
        throw InsufficientTrace("convergence_order: too few iterates in the fit window");

    Scalar sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [a, b] : points) {
        sx += a;
        sy += b;
        sxx += a * a;
        sxy += a * b;
    }
    const Scalar count = Scalar(points.size());
    const Scalar denom = count * sxx - sx * sx;
    if (std::abs(denom) < Scalar(1e-30))
        throw InsufficientTrace("convergence_order: degenerate fit window");
    return (count * sxy - sx * sy) / denom;
}

}  // namespace zeig
