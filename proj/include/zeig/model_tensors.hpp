#pragma once

// Analytic and random test tensors. The omega family
//   T_omega = sum_i e_i^(x3) + omega * ones^(x3)
// has all real eigenpairs in closed form: besides the universal pair
// 1/sqrt(n), every eigenvector is proportional to alpha 1_A + 1_{A^c} for a
// subset A, where alpha solves the per-subset quadratic
//   omega s^2 a^2 + (2 omega s (n-s) - 1) a + omega (n-s)^2 = 0,  s = |A|.
// The discriminant D = 1 - 4 omega s (n-s) controls how many real roots each
// subset size contributes, which yields the exact census of real eigenpairs.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "zeig/polynomial.hpp"
#include "zeig/spectral.hpp"
#include "zeig/symmetric_tensor.hpp"
#include "zeig/tensor_ops.hpp"

namespace zeig {

template <typename Scalar>
SymmetricTensor<Scalar> t_omega(int n, Scalar omega) {
    return SymmetricTensor<Scalar>::from_index_generator(
        3, n, [omega](std::span<const int> idx) -> Scalar {
            const bool diagonal = idx[0] == idx[1] && idx[1] == idx[2];
            return diagonal ? Scalar(1) + omega : omega;
        });
}

/// The l = floor(n/2) thresholds omega_i = 1 / (4 (l-i) (n-l+i)), strictly
/// increasing; the count of real eigenpairs drops at each one.
inline std::vector<double> omega_thresholds(int n) {
    const int l = n / 2;
    std::vector<double> thresholds;
    thresholds.reserve(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        thresholds.push_back(1.0 / (4.0 * double(l - i) * double(n - l + i)));
    return thresholds;
}

/// One family of closed-form eigenpairs of T_omega: all subsets of a given
/// size sharing one quadratic root. The eigenvector pattern is
/// coeff_subset on A and coeff_complement on A^c, already normalized.
struct OmegaOracleEntry {
    int subset_size = 0;                ///< |A|; 0 for the universal pair
    std::optional<double> alpha;        ///< quadratic root, absent for the 1_A branch at omega = 0
    double coeff_subset = 0;
    double coeff_complement = 0;
    double lambda = 0;
    double multiplicity = 0;            ///< count of distinct eigenpairs in the family
    double discriminant = 0;
    bool threshold = false;             ///< |D| at the double-root tolerance
};

struct OmegaCensus {
    double omega = 0;
    int n = 0;
    std::vector<int> roots_per_size;    ///< index s-1 holds the root count for |A| = s
    std::vector<bool> threshold_flags;  ///< per size, |D| <= 1e-12
    long total = 0;                     ///< N(omega), distinct real eigenpairs
};

struct OmegaOracle {
    std::vector<OmegaOracleEntry> entries;
    std::vector<EigenpairXd> pairs;  ///< fully materialized, canonical sign
    OmegaCensus census;
};

namespace detail {

constexpr double kDiscriminantZeroTol = 1e-12;

/// Real roots of the per-subset quadratic for subset size s, excluding
/// alpha = 1 (which materializes the universal pair). At omega = 0 the
/// quadratic degenerates; the two branches are alpha = 0 (vector 1_{A^c})
/// and the formal root at infinity (vector 1_A), reported as absent alpha.
struct SubsetRoots {
    std::vector<std::optional<double>> alphas;
    double discriminant = 1.0;
    bool threshold = false;
};

inline SubsetRoots omega_subset_roots(int n, double omega, int s) {
    SubsetRoots roots;
    if (omega == 0.0) {
        roots.alphas = {std::optional<double>(0.0), std::nullopt};
        return roots;
    }
    const double a = omega * double(s) * double(s);
    const double b = 2.0 * omega * double(s) * double(n - s) - 1.0;
    const double c = omega * double(n - s) * double(n - s);
    roots.discriminant = 1.0 - 4.0 * omega * double(s) * double(n - s);
    if (std::abs(roots.discriminant) <= kDiscriminantZeroTol) {
        roots.threshold = true;
        roots.alphas = {std::optional<double>(-b / (2.0 * a))};
    } else if (roots.discriminant > 0.0) {
        const double sq = std::sqrt(roots.discriminant);
        // Stable quadratic roots: b < 0 whenever D > 0 and omega > 0.
        const double q = -0.5 * (b - sq);
        roots.alphas = {std::optional<double>(q / a), std::optional<double>(c / q)};
    }
    // A root at alpha = 1 coincides with the universal eigenvector.
    std::erase_if(roots.alphas, [](const std::optional<double>& alpha) {
        return alpha && std::abs(*alpha - 1.0) <= 1e-12;
    });
    return roots;
}

/// Pattern coefficients (on 1_A, on 1_{A^c}), normalized, plus the
/// eigenvalue, for a root alpha (absent alpha means the 1_A branch).
inline OmegaOracleEntry materialize_entry(int n, double omega, int s,
                                          const std::optional<double>& alpha) {
    OmegaOracleEntry entry;
    entry.subset_size = s;
    entry.alpha = alpha;
    double on_subset = 1.0, on_complement = 0.0;
    if (alpha) {
        on_subset = *alpha;
        on_complement = 1.0;
    }
    const double norm = std::sqrt(double(s) * on_subset * on_subset +
                                  double(n - s) * on_complement * on_complement);
    entry.coeff_subset = on_subset / norm;
    entry.coeff_complement = on_complement / norm;
    const double bar_alpha = double(s) * on_subset + double(n - s) * on_complement;
    // lambda x_i = x_i^2 + omega bar^2 holds per coordinate on the
    // unnormalized pattern; read lambda off the larger coefficient.
    const double ref =
        (std::abs(on_subset) >= std::abs(on_complement)) ? on_subset : on_complement;
    const double unnormalized_lambda = (ref * ref + omega * bar_alpha * bar_alpha) / ref;
    entry.lambda = unnormalized_lambda / norm;
    return entry;
}

inline void for_each_subset(int n, int s, bool fix_first,
                            const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> subset(static_cast<std::size_t>(s));
    const int first = fix_first ? 1 : 0;
    std::function<void(int, int)> recurse = [&](int pos, int start) {
        if (pos == s) {
            visit(subset);
            return;
        }
        for (int v = start; v < n; ++v) {
            subset[static_cast<std::size_t>(pos)] = v;
            recurse(pos + 1, v + 1);
        }
    };
    if (fix_first) subset[0] = 0;
    recurse(fix_first ? 1 : 0, first);
}

}  // namespace detail

/// Census of the real eigenpairs of T_omega via the discriminant of the
/// per-subset quadratic. For even n the size-n/2 families are deduplicated
/// against their complements.
inline OmegaCensus count_real_eigenpairs(int n, double omega) {
    if (n < 2) throw DimMismatch("count_real_eigenpairs: n must be at least 2");
    OmegaCensus census;
    census.omega = omega;
    census.n = n;
    census.total = 1;  // the universal pair 1/sqrt(n)
    const int l = n / 2;
    for (int s = 1; s <= l; ++s) {
        const auto roots = detail::omega_subset_roots(n, omega, s);
        census.roots_per_size.push_back(static_cast<int>(roots.alphas.size()));
        census.threshold_flags.push_back(roots.threshold);
        double subsets = detail::binomial(n, s);
        if (2 * s == n) subsets /= 2.0;  // A and A^c carry the same vectors
        census.total += static_cast<long>(std::llround(
            double(roots.alphas.size()) * subsets));
    }
    return census;
}

/// Closed-form eigenpairs of T_omega: per-size quadratic roots plus the
/// universal pair, materialized over every admissible subset. Every
/// returned pair satisfies |g(x)| <= 1e-10 against t_omega(n, omega).
inline OmegaOracle omega_eigenpair_oracle(int n, double omega) {
    if (n < 2) throw DimMismatch("omega_eigenpair_oracle: n must be at least 2");
    OmegaOracle oracle;
    oracle.census = count_real_eigenpairs(n, omega);

    OmegaOracleEntry universal;
    universal.subset_size = 0;
    universal.alpha = 1.0;
    universal.coeff_subset = universal.coeff_complement = 1.0 / std::sqrt(double(n));
    universal.lambda = (1.0 + omega * double(n) * double(n)) / std::sqrt(double(n));
    universal.multiplicity = 1;
    oracle.entries.push_back(universal);

    EigenpairXd universal_pair;
    universal_pair.x = Eigen::VectorXd::Constant(n, universal.coeff_subset);
    universal_pair.lambda = universal.lambda;
    universal_pair.source = "oracle";
    oracle.pairs.push_back(universal_pair);

    const int l = n / 2;
    for (int s = 1; s <= l; ++s) {
        const auto roots = detail::omega_subset_roots(n, omega, s);
        const bool dedup = (2 * s == n);
        for (const auto& alpha : roots.alphas) {
            OmegaOracleEntry entry = detail::materialize_entry(n, omega, s, alpha);
            entry.discriminant = roots.discriminant;
            entry.threshold = roots.threshold;
            entry.multiplicity = detail::binomial(n, s) / (dedup ? 2.0 : 1.0);
            oracle.entries.push_back(entry);

            detail::for_each_subset(n, s, dedup, [&](const std::vector<int>& subset) {
                EigenpairXd pair;
                pair.x = Eigen::VectorXd::Constant(n, entry.coeff_complement);
                for (int i : subset) pair.x(i) = entry.coeff_subset;
                pair.lambda = entry.lambda;
                pair.source = "oracle";
                canonical_sign_inplace(pair.x, pair.lambda, 3);
                oracle.pairs.push_back(pair);
            });
        }
    }

    const SymmetricTensorXd tensor = t_omega<double>(n, omega);
    for (auto& pair : oracle.pairs) {
        const auto validation = validate_eigenpair(tensor, pair.x);
        pair.residual = validation.residual;
    }
    return oracle;
}

/// Random symmetric tensor with i.i.d. N(0,1) entries up to the symmetry
/// constraints: one draw per index multiset, replicated to all permutations.
/// Deterministic for a fixed seed.
template <typename Scalar = double>
SymmetricTensor<Scalar> random_gaussian_symmetric(int order, int dim, std::uint64_t seed) {
    static_assert(std::is_floating_point_v<Scalar>);
    std::mt19937_64 engine(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    std::normal_distribution<Scalar> normal(Scalar(0), Scalar(1));
    return SymmetricTensor<Scalar>::from_index_generator(
        order, dim, [&](std::span<const int>) { return normal(engine); });
}

/// The Motzkin sextic as a symmetric tensor (m = 6, n = 3):
/// mu(x) = x1^4 x2^2 + x1^2 x2^4 + x3^6 - 3 x1^2 x2^2 x3^2.
/// It has 17 real eigenpairs; six carry lambda = 0 (the four Motzkin zeros
/// (1,±1,±1)/sqrt(3) with full-rank projected Hessian plus e1 and e2 whose
/// projected Hessian is rank deficient with a quintically flat direction).
inline SymmetricTensorXd motzkin_sextic_tensor() {
    MonomialMapXd p(6, 3);
    p.add_term({4, 2, 0}, 1.0);
    p.add_term({2, 4, 0}, 1.0);
    p.add_term({0, 0, 6}, 1.0);
    p.add_term({2, 2, 2}, -3.0);
    return from_polynomial(p);
}

/// Pairwise-difference quartic model tensor (m = 4, n = 6) with
/// mu(x) = sum_{i<j} (x_j - x_i)^4. Its fibers are all orthogonal to the
/// all-ones direction.
inline SymmetricTensorXd pairwise_difference_quartic() {
    const int n = 6;
    MonomialMapXd p(4, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // (x_j - x_i)^4 expanded.
            for (int k = 0; k <= 4; ++k) {
                std::vector<int> exponents(n, 0);
                exponents[static_cast<std::size_t>(j)] = 4 - k;
                exponents[static_cast<std::size_t>(i)] = k;
                const double sign = (k % 2 == 0) ? 1.0 : -1.0;
                p.add_term(std::move(exponents), sign * detail::binomial(4, k));
            }
        }
    }
    return from_polynomial(p);
}

}  // namespace zeig
