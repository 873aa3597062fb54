// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Usage: zeig_acceptance [--only K] [--workers N]
//
// Every tolerance and budget is pinned here; nothing is calibrated at run
// time. Seeds are fixed so reruns are reproducible.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "zeig/zeig.hpp"

using namespace zeig;

namespace {

int g_workers = 2;

struct CriterionResult {
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

using CriterionFn = CriterionResult (*)();

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

bool check(bool condition, std::string& detail, const std::string& message) {
    if (!condition) {
        if (!detail.empty()) detail += "; ";
        detail += message;
    }
    return condition;
}

std::string fmt(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof(buffer), format, args);
    va_end(args);
    return buffer;
}

// --------------------------------------------------------------------------
// Criterion 1: closed-form census of the omega family vs O-NCM enumeration,
// pairwise agreement to 1e-6. 5000 starts per case, total runtime <= 60 s.
CriterionResult criterion1() {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.pass = true;

    struct Case {
        int n;
        double omega;
        long expected;
    };
    const Case cases[] = {{5, 0.02, 31}, {3, 0.125, 4}, {5, 0.07, 1}, {5, 0.05, 11}};

    for (const auto& c : cases) {
        const auto oracle = omega_eigenpair_oracle(c.n, c.omega);
        result.pass &= check(oracle.census.total == c.expected, result.detail,
                             fmt("oracle count n=%d omega=%g: %ld != %ld", c.n,
                                 c.omega, oracle.census.total, c.expected));

        const SymmetricTensorXd tensor = t_omega<double>(c.n, c.omega);
        SolverConfigXd config;
        config.method = Method::Oncm;
        const auto enumeration =
            enumerate_eigenpairs(tensor, config, 5000, 101, g_workers);
        result.pass &= check(
            static_cast<long>(enumeration.pairs.size()) == c.expected, result.detail,
            fmt("enumeration n=%d omega=%g: %zu distinct != %ld", c.n, c.omega,
                enumeration.pairs.size(), c.expected));

        // Pairwise matching at 1e-6: every oracle pair hit by exactly one
        // enumerated pair and vice versa.
        long matched = 0;
        for (const auto& expected : oracle.pairs) {
            int hits = 0;
            for (const auto& found : enumeration.pairs)
                if (same_eigenpair(expected, found.pair, 1e-6)) ++hits;
            if (hits == 1) ++matched;
        }
        result.pass &= check(matched == c.expected &&
                                 matched == static_cast<long>(enumeration.pairs.size()),
                             result.detail,
                             fmt("pairwise match n=%d omega=%g: %ld of %ld", c.n,
                                 c.omega, matched, c.expected));
        if (c.n == 5 && c.omega == 0.02) {
            result.detail += fmt("[saturation: last discovery at start %ld of %ld%s] ",
                                 enumeration.last_discovery_start, enumeration.starts,
                                 enumeration.saturated ? ", saturated" : "");
        }
    }

    result.seconds = seconds_since(start);
    result.pass &= check(result.seconds <= 60.0, result.detail,
                         fmt("runtime %.1f s > 60 s", result.seconds));
    return result;
}

// --------------------------------------------------------------------------
// Criterion 2: threshold closed forms at n=3, omega=1/8. The pair
// x = (2,1,1)/sqrt(6), lambda = sqrt(3/2) validates at 1e-10; H_p is rank
// deficient with null direction matching the projection of (1,-1,-1) to
// 1e-6, and v^T H v = 0 to 1e-8 for v = 1_A - 1_{A^c}.
CriterionResult criterion2() {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.pass = true;

    const SymmetricTensorXd tensor = t_omega<double>(3, 0.125);
    Eigen::Vector3d pattern(2, 1, 1);
    const Eigen::VectorXd x = pattern / pattern.norm();

    const auto validation = validate_eigenpair(tensor, x, 1e-10);
    result.pass &= check(validation.ok, result.detail,
                         fmt("residual %.2e > 1e-10", validation.residual));
    result.pass &= check(std::abs(validation.lambda - std::sqrt(1.5)) <= 1e-10,
                         result.detail,
                         fmt("lambda %.12f != sqrt(1.5)", validation.lambda));

    const auto report = classify(tensor, x);
    result.pass &= check(!report.newton_stable && report.rank < 2, result.detail,
                         fmt("H_p not reported rank-deficient (rank %d)", report.rank));

    // Null direction of H_p vs the projected rank-deficiency witness.
    Eigen::Vector3d v(1, -1, -1);  // 1_A - 1_{A^c} for A = {0}
    const Eigen::MatrixXd H = hessian(tensor, x);
    const double quad = v.transpose() * H * v;
    result.pass &= check(std::abs(quad) <= 1e-8, result.detail,
                         fmt("v^T H v = %.2e > 1e-8", std::abs(quad)));

    const Eigen::MatrixXd U = orthonormal_complement<double>(x);
    const auto hp_eigen =
        symmetric_eigen<double>(MatrixX<double>(U.transpose() * H * U));
    Eigen::Index null_index = 0;
    hp_eigen.eigenvalues.cwiseAbs().minCoeff(&null_index);
    const Eigen::VectorXd null_direction = U * hp_eigen.eigenvectors.col(null_index);
    const Eigen::VectorXd witness =
        (Eigen::MatrixXd::Identity(3, 3) - x * x.transpose()) * v;
    const Eigen::VectorXd witness_unit = witness / witness.norm();
    const double distance = std::min((null_direction - witness_unit).norm(),
                                     (null_direction + witness_unit).norm());
    result.pass &= check(distance <= 1e-6, result.detail,
                         fmt("null direction off witness by %.2e", distance));

    result.seconds = seconds_since(start);
    return result;
}

// --------------------------------------------------------------------------
// Criterion 3: exact expansion identities and the bordered/reduced
// equivalence, 100 random instances each over m in {3,4,5}, n in {2..6},
// relative tolerance 1e-10, runtime <= 30 s.
CriterionResult criterion3() {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.pass = true;

    const int orders[] = {3, 4, 5};
    const int dims[] = {2, 3, 4, 5, 6};
    double worst_ncm = 0, worst_oncm = 0, worst_bordered = 0;
    int count = 0;
    std::mt19937_64 engine(303);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto random_vec = [&](int n) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v(i) = normal(engine);
        return v;
    };

    while (count < 100) {
        const int m = orders[count % 3];
        const int n = dims[(count / 3) % 5];
        const auto tensor =
            random_gaussian_symmetric(m, n, 5000 + static_cast<std::uint64_t>(count));
        const Eigen::VectorXd x = random_vec(n).normalized();
        const Eigen::VectorXd y = 0.8 * random_vec(n);
        const double beta = normal(engine);

        // NCM expansion: T(I,x+y,..) - mu(x+y)(x+y) = g + A y - delta.
        const Eigen::VectorXd z = x + y;
        const Eigen::VectorXd lhs_ncm =
            contract_to_vector(tensor, z) - mu(tensor, z) * z;
        const Eigen::VectorXd rhs_ncm = gradient(tensor, x) +
                                        jacobian_A(tensor, x) * y -
                                        delta_ncm(tensor, x, y);
        const double scale_ncm = std::max(1.0, lhs_ncm.norm());
        worst_ncm = std::max(worst_ncm, (lhs_ncm - rhs_ncm).norm() / scale_ncm);

        // O-NCM expansion: T(I,x+u,..) - (mu(x)+beta)(x+u)
        //                  = g + H u - beta x - delta_tilde.
        const Eigen::VectorXd u = 0.8 * random_vec(n);
        const Eigen::VectorXd zu = x + u;
        const Eigen::VectorXd lhs_oncm =
            contract_to_vector(tensor, zu) - (mu(tensor, x) + beta) * zu;
        const Eigen::VectorXd rhs_oncm = gradient(tensor, x) +
                                         hessian(tensor, x) * u - beta * x -
                                         delta_oncm(tensor, x, u, beta);
        const double scale_oncm = std::max(1.0, lhs_oncm.norm());
        worst_oncm = std::max(worst_oncm, (lhs_oncm - rhs_oncm).norm() / scale_oncm);

        // Bordered (n+1) system vs reduced tangent system.
        try {
            const auto [u_bordered, beta_bordered] = solve_bordered(tensor, x);
            const Eigen::MatrixXd U = orthonormal_complement<double>(x);
            const Eigen::VectorXd zvec = solve_general<double>(
                MatrixX<double>(U.transpose() * hessian(tensor, x) * U),
                VectorX<double>(-(U.transpose() * gradient(tensor, x))));
            const Eigen::VectorXd u_reduced = U * zvec;
            const double scale = std::max(1.0, u_reduced.norm());
            worst_bordered =
                std::max(worst_bordered, (u_bordered - u_reduced).norm() / scale);
        } catch (const StepFailure&) {
            continue;  // singular H_p: the equivalence only speaks to nonsingular systems
        } catch (const SingularMatrix&) {
            continue;
        }
        ++count;
    }

    result.pass &= check(worst_ncm <= 1e-10, result.detail,
                         fmt("NCM expansion residual %.2e > 1e-10", worst_ncm));
    result.pass &= check(worst_oncm <= 1e-10, result.detail,
                         fmt("O-NCM expansion residual %.2e > 1e-10", worst_oncm));
    result.pass &= check(worst_bordered <= 1e-10, result.detail,
                         fmt("bordered/reduced gap %.2e > 1e-10", worst_bordered));
    result.detail += fmt("[worst: ncm %.1e, oncm %.1e, bordered %.1e] ", worst_ncm,
                         worst_oncm, worst_bordered);

    result.seconds = seconds_since(start);
    result.pass &= check(result.seconds <= 30.0, result.detail,
                         fmt("runtime %.1f s > 30 s", result.seconds));
    return result;
}

// --------------------------------------------------------------------------
// Criterion 4: quadratic rate. 20 random m=4, n=6 tensors; every found
// Newton-stable pair is perturbed by a 1e-3 tangent step; each probe run
// must converge within 8 iterations, and the convergence order fitted by
// least squares over the pooled (log e_k, log e_{k+1}) points in the window
// [1e-12, 1e-1] must be >= 1.8 for O-NCM on all pairs and for NCM on pairs
// with |lambda| >= 0.1. Runtime <= 120 s.
CriterionResult criterion4() {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.pass = true;

    const double window_low = std::log(1e-12);
    const double window_high = std::log(1e-1);
    struct Fit {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        long count = 0;
        void add(double a, double b) {
            sx += a;
            sy += b;
            sxx += a * a;
            sxy += a * b;
            ++count;
        }
        double slope() const {
            return (double(count) * sxy - sx * sy) / (double(count) * sxx - sx * sx);
        }
    };
    Fit fit_oncm, fit_ncm;
    long probes = 0, slow = 0;

    for (std::uint64_t seed = 900; seed < 920; ++seed) {
        const auto tensor = random_gaussian_symmetric(4, 6, seed);
        SolverConfigXd survey;
        survey.method = Method::Oncm;
        const auto found =
            enumerate_eigenpairs(tensor, survey, 200, seed * 7 + 1, g_workers);

        for (const auto& pair : found.pairs) {
            if (!pair.stability.newton_stable) continue;
            // Pin the reference eigenvector to machine precision.
            Eigen::VectorXd x_star = oncm_step(tensor, pair.pair.x);
            x_star = oncm_step(tensor, x_star);
            const Eigen::MatrixXd U = orthonormal_complement<double>(x_star);
            auto rng = start_stream(seed * 13 + 3, 1);
            const Eigen::VectorXd tangent = U * sample_unit_sphere(5, rng);
            const Eigen::VectorXd x0 = (x_star + 1e-3 * tangent).normalized();

            for (const Method method : {Method::Oncm, Method::Ncm}) {
                if (method == Method::Ncm && std::abs(pair.pair.lambda) < 0.1)
                    continue;
                SolverConfigXd config;
                config.method = method;
                config.trace = true;
                const auto probe = run_newton(tensor, x0, config);
                ++probes;
                if (probe.status != SolveStatus::Converged || probe.iterations > 8) {
                    ++slow;
                    continue;
                }
                std::vector<double> log_err;
                for (const auto& iterate : probe.trace)
                    log_err.push_back(std::log((iterate - x_star).norm()));
                Fit& fit = method == Method::Oncm ? fit_oncm : fit_ncm;
                for (std::size_t k = 0; k + 1 < log_err.size(); ++k)
                    if (log_err[k] >= window_low && log_err[k] <= window_high &&
                        log_err[k + 1] >= window_low && log_err[k + 1] <= window_high)
                        fit.add(log_err[k], log_err[k + 1]);
            }
        }
    }

    result.pass &= check(slow == 0, result.detail,
                         fmt("%ld of %ld probes missed convergence in 8 iterations",
                             slow, probes));
    result.pass &= check(fit_oncm.count >= 2 && fit_oncm.slope() >= 1.8,
                         result.detail,
                         fmt("O-NCM fitted order %.3f < 1.8", fit_oncm.slope()));
    result.pass &= check(fit_ncm.count >= 2 && fit_ncm.slope() >= 1.8, result.detail,
                         fmt("NCM fitted order %.3f < 1.8", fit_ncm.slope()));
    result.detail += fmt("[probes %ld, fitted order oncm %.3f (%ld pts), ncm %.3f "
                         "(%ld pts)] ",
                         probes, fit_oncm.slope(), fit_oncm.count, fit_ncm.slope(),
                         fit_ncm.count);

    result.seconds = seconds_since(start);
    result.pass &= check(result.seconds <= 120.0, result.detail,
                         fmt("runtime %.1f s > 120 s", result.seconds));
    return result;
}

// --------------------------------------------------------------------------
// Criterion 5: the ternary sextic example. O-NCM enumeration with 2e4 starts
// must find exactly 17 distinct real eigenpairs, of which 6 have
// |lambda| <= 1e-8, and exactly 2 of those 6 have H_p numerical rank 2.
CriterionResult criterion5() {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.pass = true;

    const SymmetricTensorXd tensor = motzkin_sextic_tensor();
    SolverConfigXd config;
    config.method = Method::Oncm;
    const auto enumeration =
        enumerate_eigenpairs(tensor, config, 20000, 505, g_workers);

    int zero_pairs = 0;
    int zero_rank2 = 0;
    for (const auto& found : enumeration.pairs) {
        if (std::abs(found.pair.lambda) <= 1e-8) {
            ++zero_pairs;
            if (found.stability.rank == 2) ++zero_rank2;
        }
    }

    result.pass &= check(enumeration.pairs.size() == 17, result.detail,
                         fmt("%zu distinct pairs != 17", enumeration.pairs.size()));
    result.pass &= check(zero_pairs == 6, result.detail,
                         fmt("%d zero pairs != 6", zero_pairs));
    result.pass &= check(zero_rank2 == 2, result.detail,
                         fmt("%d zero pairs of H_p rank 2 != 2", zero_rank2));
    result.detail += fmt("[found %zu distinct, %d zero, %d zero-rank-2, %ld "
                         "failures of %ld starts] ",
                         enumeration.pairs.size(), zero_pairs, zero_rank2,
                         enumeration.failures, enumeration.starts);

    result.seconds = seconds_since(start);
    return result;
}

// --------------------------------------------------------------------------
// Criterion 6: the pairwise-difference quartic. (1,1,0,0,-1,-1)/2 validates
// with lambda = 4.5 +- 1e-10; (1,...,1)/sqrt(6) validates with lambda = 0
// and |H_p| <= 1e-8; the fiber-span complement is exactly that
// one-dimensional subspace to 1e-10.
CriterionResult criterion6() {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.pass = true;

    const SymmetricTensorXd tensor = pairwise_difference_quartic();

    Eigen::VectorXd x(6);
    x << 1, 1, 0, 0, -1, -1;
    x /= 2.0;
    const auto val = validate_eigenpair(tensor, x, 1e-10);
    result.pass &= check(val.ok && std::abs(val.lambda - 4.5) <= 1e-10, result.detail,
                         fmt("family pair: ok=%d lambda=%.12f", int(val.ok),
                             val.lambda));

    const Eigen::VectorXd ones = Eigen::VectorXd::Constant(6, 1.0 / std::sqrt(6.0));
    const auto val_ones = validate_eigenpair(tensor, ones, 1e-10);
    result.pass &= check(val_ones.ok && std::abs(val_ones.lambda) <= 1e-10,
                         result.detail,
                         fmt("trivial pair: ok=%d lambda=%.2e", int(val_ones.ok),
                             val_ones.lambda));
    const Eigen::MatrixXd hp = projected_hessian(tensor, ones);
    result.pass &= check(hp.norm() <= 1e-8, result.detail,
                         fmt("|H_p| = %.2e > 1e-8", hp.norm()));

    const auto span = fiber_span(tensor);
    result.pass &= check(span.complement.cols() == 1, result.detail,
                         fmt("complement dimension %ld != 1",
                             long(span.complement.cols())));
    if (span.complement.cols() == 1) {
        const double align = std::abs(span.complement.col(0).dot(ones));
        result.pass &= check(std::abs(align - 1.0) <= 1e-10, result.detail,
                             fmt("complement misaligned by %.2e",
                                 std::abs(align - 1.0)));
    }

    result.seconds = seconds_since(start);
    return result;
}

// --------------------------------------------------------------------------
// Criterion 7: genericity. 20 random m=3, n=3 tensors with 1e4 O-NCM starts
// each: every found pair has gamma > 1e-6, the distinct count never exceeds
// the generic bound 7, and no rank-deficient pair is ever found.
CriterionResult criterion7() {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.pass = true;

    double min_gamma = 1e300;
    std::size_t max_count = 0;
    long rank_deficient = 0;
    for (std::uint64_t seed = 700; seed < 720; ++seed) {
        const auto tensor = random_gaussian_symmetric(3, 3, seed);
        SolverConfigXd config;
        config.method = Method::Oncm;
        const auto enumeration =
            enumerate_eigenpairs(tensor, config, 10000, seed, g_workers);
        max_count = std::max(max_count, enumeration.pairs.size());
        for (const auto& found : enumeration.pairs) {
            min_gamma = std::min(min_gamma, found.stability.gamma);
            if (!found.stability.newton_stable) ++rank_deficient;
        }
    }

    result.pass &= check(min_gamma > 1e-6, result.detail,
                         fmt("min gamma %.2e <= 1e-6", min_gamma));
    result.pass &= check(max_count <= 7, result.detail,
                         fmt("distinct count %zu > 7", max_count));
    result.pass &= check(rank_deficient == 0, result.detail,
                         fmt("%ld rank-deficient pairs found", rank_deficient));
    result.detail += fmt("[min gamma %.2e, max distinct %zu] ", min_gamma, max_count);

    result.seconds = seconds_since(start);
    return result;
}

// --------------------------------------------------------------------------
// Criterion 8: robustness. Random m=4 tensors with n in {4,...,8}, 1e4 O-NCM
// starts each: failure fraction <= 2%. Runtime <= 600 s.
CriterionResult criterion8() {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.pass = true;

    for (int n = 4; n <= 8; ++n) {
        const auto tensor =
            random_gaussian_symmetric(4, n, 800 + static_cast<std::uint64_t>(n));
        SolverConfigXd config;
        config.method = Method::Oncm;
        const auto enumeration = enumerate_eigenpairs(
            tensor, config, 10000, 808 + static_cast<std::uint64_t>(n), g_workers);
        const double failure_fraction =
            double(enumeration.failures) / double(enumeration.starts);
        result.pass &= check(failure_fraction <= 0.02, result.detail,
                             fmt("n=%d failure fraction %.4f > 0.02", n,
                                 failure_fraction));
        result.detail += fmt("[n=%d: %ld/%ld failed] ", n, enumeration.failures,
                             enumeration.starts);
    }

    result.seconds = seconds_since(start);
    result.pass &= check(result.seconds <= 600.0, result.detail,
                         fmt("runtime %.1f s > 600 s", result.seconds));
    return result;
}

// --------------------------------------------------------------------------
// Criterion 9: small-eigenvalue ordering. One random m=4, n=8 tensor with
// 1e5 starts per method: NCM's aggregate hit fraction on the pairs in the
// lowest-|lambda| decile is strictly below O-NCM's on the same pairs.
CriterionResult criterion9() {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.pass = true;

    const auto tensor = random_gaussian_symmetric(4, 8, 909);
    const long starts = 100000;
    SolverConfigXd config;
    config.method = Method::Oncm;
    const auto oncm = enumerate_eigenpairs(tensor, config, starts, 91, g_workers);
    config.method = Method::Ncm;
    const auto ncm = enumerate_eigenpairs(tensor, config, starts, 92, g_workers);

    // Union of discovered pairs, ranked by |lambda|.
    std::vector<EigenpairXd> all;
    auto absorb = [&](const EnumerationResult& run) {
        for (const auto& found : run.pairs) {
            bool known = false;
            for (const auto& pair : all)
                if (same_eigenpair(pair, found.pair)) known = true;
            if (!known) all.push_back(found.pair);
        }
    };
    absorb(oncm);
    absorb(ncm);
    std::sort(all.begin(), all.end(), [](const EigenpairXd& a, const EigenpairXd& b) {
        return std::abs(a.lambda) < std::abs(b.lambda);
    });
    const std::size_t decile = (all.size() + 9) / 10;

    auto hits_on = [&](const EnumerationResult& run, std::size_t limit) {
        long hits = 0;
        for (std::size_t i = 0; i < limit; ++i)
            for (const auto& found : run.pairs)
                if (same_eigenpair(all[i], found.pair)) hits += found.hits;
        return hits;
    };
    const long hits_oncm = hits_on(oncm, decile);
    const long hits_ncm = hits_on(ncm, decile);
    const double fraction_oncm = double(hits_oncm) / double(starts);
    const double fraction_ncm = double(hits_ncm) / double(starts);

    result.pass &= check(fraction_ncm < fraction_oncm, result.detail,
                         fmt("NCM fraction %.5f not below O-NCM %.5f", fraction_ncm,
                             fraction_oncm));
    result.detail += fmt("[%zu pairs, decile %zu: ncm %.5f vs oncm %.5f] ",
                         all.size(), decile, fraction_ncm, fraction_oncm);

    result.seconds = seconds_since(start);
    return result;
}

// --------------------------------------------------------------------------
// Criterion 10: power-method exclusion. Adaptive shifted HOPM, both
// directions, 1e4 starts on each tensor of criterion 7: no converged run may
// terminate at a pair classified power-unstable.
CriterionResult criterion10() {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.pass = true;

    long converged = 0, unstable_hits = 0;
    for (std::uint64_t seed = 700; seed < 720; ++seed) {
        const auto tensor = random_gaussian_symmetric(3, 3, seed);
        for (const ShiftDirection direction :
             {ShiftDirection::Max, ShiftDirection::Min}) {
            SolverConfigXd config;
            config.method = Method::AdaptiveHopm;
            config.direction = direction;
            const auto enumeration = enumerate_eigenpairs(
                tensor, config, 10000,
                seed * 2 + (direction == ShiftDirection::Max ? 0 : 1), g_workers);
            for (const auto& found : enumeration.pairs) {
                converged += found.hits;
                if (found.stability.power_class == PowerClass::Unstable)
                    unstable_hits += found.hits;
            }
        }
    }

    result.pass &= check(unstable_hits == 0, result.detail,
                         fmt("%ld converged hits on power-unstable pairs",
                             unstable_hits));
    result.detail += fmt("[%ld converged hits, all on power-stable pairs] ",
                         converged);

    result.seconds = seconds_since(start);
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc)
            g_workers = std::max(1, std::atoi(argv[++i]));
    }

    const CriterionFn criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                    criterion5, criterion6, criterion7, criterion8,
                                    criterion9, criterion10};
    const char* names[] = {
        "omega census vs enumeration (31/4/1/11 pairs)",
        "threshold closed form and rank-deficiency witness",
        "expansion identities and bordered/reduced equivalence",
        "quadratic convergence order >= 1.8 within 8 iterations",
        "ternary sextic: 17 pairs, 6 zero, 2 of rank 2",
        "pairwise quartic: lambda 4.5 pair, trivial pair, fiber span",
        "genericity: gamma > 1e-6 and generic bound 7",
        "failure fraction <= 2% for n = 4..8",
        "NCM underweights the smallest-|lambda| decile vs O-NCM",
        "adaptive power method never converges power-unstable",
    };

    int failures = 0;
    for (int k = 0; k < 10; ++k) {
        if (only != 0 && only != k + 1) continue;
        const CriterionResult result = criteria[k]();
        std::printf("[%s] criterion %2d: %s (%.1f s) %s\n",
                    result.pass ? "PASS" : "FAIL", k + 1, names[k], result.seconds,
                    result.detail.c_str());
        std::fflush(stdout);
        if (!result.pass) ++failures;
    }
    return failures;
}
