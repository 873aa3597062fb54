#pragma once

// Multi-start enumeration of real eigenpairs. Every start draws its initial
// point from an RNG stream derived from (seed, start index), so the result
// is identical for any worker count: workers only decide which thread runs
// which start, and merging always scans starts in index order.

#include <chrono>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "zeig/solve.hpp"
#include "zeig/spectral.hpp"

namespace zeig {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t state) {
    state += 0x9e3779b97f4a7c15ULL;
    state = (state ^ (state >> 30)) * 0xbf58476d1ce4e5b9ULL;
    state = (state ^ (state >> 27)) * 0x94d049bb133111ebULL;
    return state ^ (state >> 31);
}

}  // namespace detail

/// RNG stream for one start: a mt19937_64 whose seed mixes (seed, index).
inline std::mt19937_64 start_stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(detail::splitmix64(detail::splitmix64(seed) ^ (index + 1)));
}

/// Uniform point on the unit sphere: a standard normal vector, normalized.
/// The measure-zero zero draw is resampled.
inline Eigen::VectorXd sample_unit_sphere(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd x(n);
    double norm = 0.0;
    do {
        for (int i = 0; i < n; ++i) x(i) = normal(rng);
        norm = x.norm();
    } while (norm <= 1e-300);
    return x / norm;
}

struct FoundPair {
    EigenpairXd pair;               ///< canonical representative
    StabilityReportXd stability;
    long hits = 0;
};

struct EnumerationResult {
    std::string tensor_descriptor;
    int order = 0;
    int dim = 0;
    Method method = Method::Oncm;
    long starts = 0;    ///< starts actually consumed
    long failures = 0;  ///< iteration-cap + step-failure (+ unvalidated) starts
    std::uint64_t seed = 0;
    double duration_seconds = 0;
    std::vector<FoundPair> pairs;  ///< sorted by canonical representative

    // Saturation statistic: index of the start that discovered the newest
    // pair; saturated means no discovery in the second half of the starts.
    long last_discovery_start = -1;
    bool saturated = false;

    // Oracle-driven runs only.
    bool oracle_stop = false;
    bool oracle_complete = false;
    long budget = 0;
};

namespace detail {

struct StartRecord {
    bool valid = false;
    Eigen::VectorXd x;
    double lambda = 0;
    double residual = 0;
};

/// Runs starts [0, count) in parallel and returns one record per start.
/// A record is valid only when the run converged and the limit validates at
/// 1e-8; everything else counts as a failure downstream.
inline std::vector<StartRecord> run_starts(const SymmetricTensorXd& tensor,
                                           const SolverConfigXd& config,
                                           long first, long count,
                                           std::uint64_t seed, int workers) {
    std::vector<StartRecord> records(static_cast<std::size_t>(count));
    workers = std::max(1, workers);
    auto body = [&](long begin, long end) {
        for (long i = begin; i < end; ++i) {
            auto rng = start_stream(seed, static_cast<std::uint64_t>(first + i));
            const Eigen::VectorXd x0 = sample_unit_sphere(tensor.dim(), rng);
            const SolveOutcomeXd outcome = run_solver(tensor, x0, config);
            if (outcome.status != SolveStatus::Converged) continue;
            const auto validation = validate_eigenpair(tensor, outcome.x);
            if (!validation.ok) continue;
            auto& record = records[static_cast<std::size_t>(i)];
            record.valid = true;
            record.x = validation.x;
            record.lambda = validation.lambda;
            record.residual = validation.residual;
        }
    };
    if (workers == 1 || count < 2) {
        body(0, count);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (count + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long begin = w * chunk;
            const long end = std::min(count, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(body, begin, end);
        }
        for (auto& thread : pool) thread.join();
    }
    return records;
}

inline void sort_pairs(EnumerationResult& result) {
    std::sort(result.pairs.begin(), result.pairs.end(),
              [](const FoundPair& a, const FoundPair& b) {
                  for (Eigen::Index i = 0; i < a.pair.x.size(); ++i) {
                      if (a.pair.x(i) != b.pair.x(i)) return a.pair.x(i) < b.pair.x(i);
                  }
                  return a.pair.lambda < b.pair.lambda;
              });
}

}  // namespace detail

/// Multi-start enumeration: deterministic for fixed (seed, starts) regardless
/// of `workers`. Hits + failures always equals starts, and every reported
/// pair validates at 1e-8.
inline EnumerationResult enumerate_eigenpairs(const SymmetricTensorXd& tensor,
                                              const SolverConfigXd& config,
                                              long starts, std::uint64_t seed,
                                              int workers = 1,
                                              const std::string& descriptor = "") {
    const auto clock_start = std::chrono::steady_clock::now();
    EnumerationResult result;
    result.tensor_descriptor = descriptor;
    result.order = tensor.order();
    result.dim = tensor.dim();
    result.method = config.method;
    result.starts = starts;
    result.seed = seed;

    const auto records = detail::run_starts(tensor, config, 0, starts, seed, workers);
    for (long i = 0; i < starts; ++i) {
        const auto& record = records[static_cast<std::size_t>(i)];
        if (!record.valid) {
            ++result.failures;
            continue;
        }
        EigenpairXd candidate =
            canonical_sign<double>(record.x, record.lambda, tensor.order());
        candidate.residual = record.residual;
        candidate.source = method_name(config.method);
        bool merged = false;
        for (auto& found : result.pairs) {
            if (same_eigenpair(found.pair, candidate)) {
                ++found.hits;
                merged = true;
                break;
            }
        }
        if (!merged) {
            result.pairs.push_back({candidate, StabilityReportXd{}, 1});
            result.last_discovery_start = i;
        }
    }
    for (auto& found : result.pairs)
        found.stability = classify(tensor, found.pair.x);
    detail::sort_pairs(result);
    result.saturated = result.last_discovery_start < starts / 2;
    result.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start)
            .count();
    return result;
}

/// Enumeration that stops as soon as every oracle pair has been hit,
/// consuming starts in index order; the result covers exactly the consumed
/// starts. When the budget runs out first, oracle_complete stays false.
inline EnumerationResult enumerate_until_oracle(
    const SymmetricTensorXd& tensor, const SolverConfigXd& config,
    const std::vector<EigenpairXd>& oracle_pairs, long budget, std::uint64_t seed,
    int workers = 1, const std::string& descriptor = "") {
    if (oracle_pairs.empty())
        throw Error("enumerate_until_oracle: oracle pair list is empty");
    const auto clock_start = std::chrono::steady_clock::now();
    EnumerationResult result;
    result.tensor_descriptor = descriptor;
    result.order = tensor.order();
    result.dim = tensor.dim();
    result.method = config.method;
    result.seed = seed;
    result.oracle_stop = true;
    result.budget = budget;

    std::vector<bool> covered(oracle_pairs.size(), false);
    std::size_t covered_count = 0;
    long consumed = 0;
    const long batch = std::max<long>(64, 64L * std::max(1, workers));

    while (consumed < budget && covered_count < covered.size()) {
        const long count = std::min(batch, budget - consumed);
        const auto records =
            detail::run_starts(tensor, config, consumed, count, seed, workers);
        for (long i = 0; i < count; ++i) {
            const auto& record = records[static_cast<std::size_t>(i)];
            ++consumed;
            if (!record.valid) {
                ++result.failures;
            } else {
                EigenpairXd candidate =
                    canonical_sign<double>(record.x, record.lambda, tensor.order());
                candidate.residual = record.residual;
                candidate.source = method_name(config.method);
                bool merged = false;
                for (auto& found : result.pairs) {
                    if (same_eigenpair(found.pair, candidate)) {
                        ++found.hits;
                        merged = true;
                        break;
                    }
                }
                if (!merged) {
                    result.pairs.push_back({candidate, StabilityReportXd{}, 1});
                    result.last_discovery_start = consumed - 1;
                }
                for (std::size_t k = 0; k < oracle_pairs.size(); ++k) {
                    if (!covered[k] && same_eigenpair(oracle_pairs[k], candidate)) {
                        covered[k] = true;
                        ++covered_count;
                    }
                }
            }
            if (covered_count == covered.size()) break;
        }
    }

    result.starts = consumed;
    result.oracle_complete = covered_count == covered.size();
    for (auto& found : result.pairs)
        found.stability = classify(tensor, found.pair.x);
    detail::sort_pairs(result);
    result.saturated = result.last_discovery_start < consumed / 2;
    result.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start)
            .count();
    return result;
}

struct HistogramRow {
    double abs_lambda = 0;
    long hits = 0;
    std::string method;
};

/// One row per distinct pair: (|lambda|, hits, method), sorted by |lambda|.
inline std::vector<HistogramRow> hit_histogram(const EnumerationResult& result) {
    std::vector<HistogramRow> rows;
    rows.reserve(result.pairs.size());
    for (const auto& found : result.pairs)
        rows.push_back({std::abs(found.pair.lambda), found.hits,
                        method_name(result.method)});
    std::sort(rows.begin(), rows.end(),
              [](const HistogramRow& a, const HistogramRow& b) {
                  return a.abs_lambda < b.abs_lambda;
              });
    return rows;
}

}  // namespace zeig
