// Command-line driver: build model tensors, print the closed-form omega
// oracle, run single solves, enumerate eigenpairs with multi-start, classify
// stored pairs, scan basins of attraction, and sweep the omega census.
//
// Exit codes: 0 success, 1 usage/input error, 2 numeric failure.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zeig/zeig.hpp"

namespace {

using namespace zeig;

SolverConfigXd make_config(const std::string& method, double delta, int kmax,
                           double tau, double alpha, const std::string& direction) {
    SolverConfigXd config;
    config.method = parse_method(method);
    config.delta = delta;
    config.k_max = kmax;
    config.tau = tau;
    config.alpha = alpha;
    if (direction == "max") config.direction = ShiftDirection::Max;
    else if (direction == "min") config.direction = ShiftDirection::Min;
    else throw ParseError("direction must be max or min");
    return config;
}

Eigen::VectorXd parse_vector(const std::string& csv) {
    std::vector<double> values;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            values.push_back(std::stod(token));
        } catch (const std::exception&) {
            throw ParseError("--x0 expects comma-separated numbers");
        }
    }
    if (values.empty()) throw ParseError("--x0 is empty");
    Eigen::VectorXd x(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        x(static_cast<Eigen::Index>(i)) = values[i];
    return x;
}

int run_model(const std::string& family, int order, int dim, double omega,
              std::uint64_t seed, const std::string& out, const std::string& format) {
    TensorDocument doc;
    if (family == "omega") {
        doc = dense_document(t_omega<double>(dim, omega), "omega", omega);
    } else if (family == "motzkin") {
        doc = dense_document(motzkin_sextic_tensor(), "motzkin");
    } else if (family == "pairdiff") {
        doc = dense_document(pairwise_difference_quartic(), "pairdiff");
    } else if (family == "random") {
        doc = dense_document(random_gaussian_symmetric(order, dim, seed), "random", 0.0,
                             seed);
    } else {
        throw ParseError("unknown family: " + family +
                         " (expected omega|motzkin|pairdiff|random)");
    }
    if (format == "json") write_tensor_document(doc, out);
    else if (format == "txt") write_tensor_text(doc, out);
    else throw ParseError("unknown tensor format: " + format);
    std::cout << "wrote " << family << " tensor (m=" << doc.order << ", n=" << doc.dim
              << ") to " << out << "\n";
    return 0;
}

int run_oracle(int n, double omega) {
    const OmegaOracle oracle = omega_eigenpair_oracle(n, omega);
    const SymmetricTensorXd tensor = t_omega<double>(n, omega);

    std::cout << "omega oracle: n=" << n << " omega=" << format_double(omega) << "\n";
    const auto thresholds = omega_thresholds(n);
    std::cout << "thresholds:";
    for (double t : thresholds) std::cout << " " << format_double(t);
    std::cout << "\n";
    std::cout << "N = " << oracle.census.total << "\n";
    for (std::size_t s = 0; s < oracle.census.roots_per_size.size(); ++s) {
        std::cout << "  |A|=" << (s + 1) << ": " << oracle.census.roots_per_size[s]
                  << " real root(s)"
                  << (oracle.census.threshold_flags[s] ? " [threshold: double root]" : "")
                  << "\n";
    }
    std::cout << "entries:\n";
    for (const auto& entry : oracle.entries) {
        std::cout << "  |A|=" << entry.subset_size << " alpha=";
        if (entry.alpha) std::cout << format_double(*entry.alpha);
        else std::cout << "inf";
        std::cout << " pattern=(" << format_double(entry.coeff_subset) << ", "
                  << format_double(entry.coeff_complement) << ")"
                  << " lambda=" << format_double(entry.lambda)
                  << " multiplicity=" << entry.multiplicity;
        if (entry.subset_size > 0)
            std::cout << " D=" << format_double(entry.discriminant);
        std::cout << "\n";
    }
    std::cout << "pairs:\n";
    int rank_deficient = 0;
    for (std::size_t id = 0; id < oracle.pairs.size(); ++id) {
        const auto& pair = oracle.pairs[id];
        const auto report = classify(tensor, pair.x);
        const bool deficient = report.rank < pair.x.size() - 1;
        if (deficient) ++rank_deficient;
        std::cout << "  " << id << ": lambda=" << format_double(pair.lambda)
                  << " residual=" << format_double(pair.residual) << " x=[";
        for (Eigen::Index i = 0; i < pair.x.size(); ++i) {
            if (i > 0) std::cout << " ";
            std::cout << format_double(pair.x(i));
        }
        std::cout << "] gamma=" << format_double(report.gamma) << " rank=" << report.rank
                  << "/" << (pair.x.size() - 1) << " " << power_class_name(report.power_class)
                  << (report.newton_stable ? " newton-stable" : " RANK-DEFICIENT") << "\n";
    }
    std::cout << "rank-deficient pairs: " << rank_deficient << "\n";
    return 0;
}

int run_solve(const std::string& tensor_path, const SolverConfigXd& base_config,
              bool trace, std::uint64_t seed, const std::string& x0_csv) {
    const SymmetricTensorXd tensor = read_tensor(tensor_path);
    SolverConfigXd config = base_config;
    config.trace = trace;
    Eigen::VectorXd x0;
    if (!x0_csv.empty()) {
        x0 = parse_vector(x0_csv);
        if (x0.size() != tensor.dim())
            throw ParseError("--x0 length does not match tensor dimension");
    } else {
        auto rng = start_stream(seed, 0);
        x0 = sample_unit_sphere(tensor.dim(), rng);
    }

    const SolveOutcomeXd outcome = run_solver(tensor, x0, config);
    std::cout << "status: " << solve_status_name(outcome.status) << "\n"
              << "iterations: " << outcome.iterations << "\n"
              << "lambda: " << format_double(outcome.lambda) << "\n"
              << "residual: " << format_double(outcome.residual) << "\n"
              << "x:";
    for (Eigen::Index i = 0; i < outcome.x.size(); ++i)
        std::cout << " " << format_double(outcome.x(i));
    std::cout << "\n";
    if (!outcome.failure.empty()) std::cout << "failure: " << outcome.failure << "\n";
    if (trace) {
        for (std::size_t k = 0; k < outcome.trace.size(); ++k) {
            std::cout << "iterate " << k << ":";
            for (Eigen::Index i = 0; i < outcome.trace[k].size(); ++i)
                std::cout << " " << format_double(outcome.trace[k](i));
            std::cout << "\n";
        }
    }
    return outcome.status == SolveStatus::Converged ? 0 : 2;
}

int run_enumerate(const std::string& tensor_path, const SolverConfigXd& config,
                  long starts, std::uint64_t seed, int jobs, bool stop_at_oracle,
                  const std::string& out, const std::string& format) {
    const TensorDocument doc = read_tensor_document(tensor_path);
    const SymmetricTensorXd tensor = to_tensor(doc);

    EnumerationResult result;
    if (stop_at_oracle) {
        if (doc.family != "omega")
            throw ParseError(
                "--stop-at-oracle needs a tensor document from the omega family");
        const OmegaOracle oracle = omega_eigenpair_oracle(doc.dim, doc.omega);
        result = enumerate_until_oracle(tensor, config, oracle.pairs, starts, seed,
                                        jobs, tensor_path);
        std::cout << (result.oracle_complete ? "oracle complete" : "budget exhausted")
                  << " after " << result.starts << " starts\n";
        if (!result.oracle_complete) {
            std::cout << "distinct pairs: " << result.pairs.size() << "\n";
            if (!out.empty()) write_result(result, out, format);
            throw BudgetExhausted("oracle coverage incomplete within budget");
        }
    } else {
        result = enumerate_eigenpairs(tensor, config, starts, seed, jobs, tensor_path);
    }

    std::cout << "method: " << method_name(result.method) << "\n"
              << "starts: " << result.starts << "\n"
              << "failures: " << result.failures << "\n"
              << "distinct pairs: " << result.pairs.size() << "\n"
              << "last discovery at start: " << result.last_discovery_start << "\n"
              << "saturated: " << (result.saturated ? "yes" : "no") << "\n"
              << "duration_seconds: " << result.duration_seconds << "\n";
    for (std::size_t id = 0; id < result.pairs.size(); ++id) {
        const auto& found = result.pairs[id];
        std::cout << "  " << id << ": lambda=" << format_double(found.pair.lambda)
                  << " hits=" << found.hits << " gamma="
                  << format_double(found.stability.gamma)
                  << (found.stability.newton_stable ? "" : " [rank-deficient]") << "\n";
    }
    if (!out.empty()) {
        write_result(result, out, format);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int run_classify(const std::string& tensor_path, const std::string& pairs_path) {
    const SymmetricTensorXd tensor = read_tensor(tensor_path);
    const EnumerationResult stored = read_result(pairs_path);
    std::cout << "id,lambda,residual,ok,gamma,rank,power_class,newton_stable\n";
    for (std::size_t id = 0; id < stored.pairs.size(); ++id) {
        const auto& pair = stored.pairs[id].pair;
        const auto validation = validate_eigenpair(tensor, pair.x);
        std::cout << id << "," << format_double(validation.lambda) << ","
                  << format_double(validation.residual) << ","
                  << (validation.ok ? "true" : "false");
        if (validation.ok) {
            const auto report = classify(tensor, pair.x);
            std::cout << "," << format_double(report.gamma) << "," << report.rank << ","
                      << power_class_name(report.power_class) << ","
                      << (report.newton_stable ? "true" : "false");
        } else {
            std::cout << ",,,,";
        }
        std::cout << "\n";
    }
    return 0;
}

int run_basin(const std::string& tensor_path, const SolverConfigXd& config,
              int resolution, const std::string& out) {
    const SymmetricTensorXd tensor = read_tensor(tensor_path);
    const BasinGrid grid = basin_map(tensor, config, resolution);
    if (out.empty()) {
        std::cout << basin_to_csv(grid);
    } else {
        write_basin_csv(grid, out);
        std::cout << "wrote " << grid.cells.size() << " cells, "
                  << grid.pairs.size() << " pairs to " << out << "\n";
    }
    return 0;
}

int run_sweep(int n, double omega_min, double omega_max, int steps,
              const std::string& out) {
    if (steps < 1) throw ParseError("--steps must be positive");
    std::ostringstream csv;
    csv << "omega,n_real_eigenpairs,eigenvalues\n";
    for (int k = 0; k < steps; ++k) {
        const double omega =
            steps == 1 ? omega_min
                       : omega_min + (omega_max - omega_min) * double(k) / double(steps - 1);
        const OmegaOracle oracle = omega_eigenpair_oracle(n, omega);
        std::vector<double> lambdas;
        for (const auto& pair : oracle.pairs) lambdas.push_back(pair.lambda);
        std::sort(lambdas.begin(), lambdas.end());
        lambdas.erase(std::unique(lambdas.begin(), lambdas.end(),
                                  [](double a, double b) { return std::abs(a - b) <= 1e-9; }),
                      lambdas.end());
        csv << format_double(omega) << "," << oracle.census.total << ",";
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            if (i > 0) csv << ";";
            csv << format_double(lambdas[i]);
        }
        csv << "\n";
    }
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw IoError("cannot open " + out + " for writing");
        file << csv.str();
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real eigenpairs of symmetric tensors via Newton corrections and "
                 "power iterations"};
    app.require_subcommand(1);

    std::string family = "omega", tensor_path, pairs_path, out_path, x0_csv;
    std::string method = "oncm", direction = "max", format = "json";
    int order = 3, dim = 3, kmax = 200, jobs = 1, resolution = 60, steps = 10;
    double omega = 0.0, delta = 1e-10, tau = 1e-6, alpha = 0.0;
    double omega_min = 0.0, omega_max = 0.125;
    std::uint64_t seed = 0;
    long starts = 1000;
    bool stop_at_oracle = false, trace = false;

    auto* model = app.add_subcommand("model", "Emit a model tensor to a file");
    model->add_option("--family", family, "omega|motzkin|pairdiff|random")
        ->capture_default_str();
    model->add_option("--n", dim, "dimension")->capture_default_str();
    model->add_option("--m", order, "order (random family)")->capture_default_str();
    model->add_option("--omega", omega, "omega family parameter")->capture_default_str();
    model->add_option("--seed", seed, "random family seed")->capture_default_str();
    model->add_option("-o,--output", out_path, "output path")->required();
    model->add_option("--format", format, "json|txt")->capture_default_str();

    auto* oracle = app.add_subcommand(
        "oracle", "Closed-form census and eigenpairs of the omega family");
    oracle->add_option("--n", dim, "dimension")->required();
    oracle->add_option("--omega", omega, "omega parameter")->required();

    auto* solve = app.add_subcommand("solve", "One solver run on a stored tensor");
    solve->add_option("--tensor", tensor_path, "tensor document path")->required();
    solve->add_option("--method", method, "ncm|oncm|hopm|shopm|ashopm")
        ->capture_default_str();
    solve->add_option("--seed", seed, "seed for the random start")->capture_default_str();
    solve->add_option("--x0", x0_csv, "explicit start, comma-separated");
    solve->add_option("--delta", delta, "stopping tolerance")->capture_default_str();
    solve->add_option("--kmax", kmax, "iteration cap")->capture_default_str();
    solve->add_option("--tau", tau, "adaptive shift margin")->capture_default_str();
    solve->add_option("--alpha", alpha, "fixed shift (shopm)")->capture_default_str();
    solve->add_option("--direction", direction, "max|min (ashopm)")
        ->capture_default_str();
    solve->add_flag("--trace", trace, "print every iterate");

    auto* enumerate = app.add_subcommand(
        "enumerate", "Multi-start enumeration with deduplication");
    enumerate->add_option("--tensor", tensor_path, "tensor document path")->required();
    enumerate->add_option("--method", method, "ncm|oncm|hopm|shopm|ashopm")
        ->capture_default_str();
    enumerate->add_option("--starts", starts, "number of random starts (budget with "
                          "--stop-at-oracle)")
        ->capture_default_str();
    enumerate->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    enumerate->add_option("--seed", seed, "RNG seed")->capture_default_str();
    enumerate->add_flag("--stop-at-oracle", stop_at_oracle,
                        "stop once all closed-form pairs are found (omega family)");
    enumerate->add_option("--delta", delta, "stopping tolerance")->capture_default_str();
    enumerate->add_option("--kmax", kmax, "iteration cap")->capture_default_str();
    enumerate->add_option("--tau", tau, "adaptive shift margin")->capture_default_str();
    enumerate->add_option("--alpha", alpha, "fixed shift (shopm)")->capture_default_str();
    enumerate->add_option("--direction", direction, "max|min (ashopm)")
        ->capture_default_str();
    enumerate->add_option("-o,--output", out_path, "result output path");
    enumerate->add_option("--format", format, "json|csv")->capture_default_str();

    auto* classify_cmd = app.add_subcommand(
        "classify", "Validate and classify pairs from a result file");
    classify_cmd->add_option("--tensor", tensor_path, "tensor document path")
        ->required();
    classify_cmd->add_option("--pairs", pairs_path, "enumeration result JSON")
        ->required();

    auto* basin = app.add_subcommand(
        "basin", "Basin-of-attraction grid over the sphere (n=3)");
    basin->add_option("--tensor", tensor_path, "tensor document path")->required();
    basin->add_option("--method", method, "ncm|oncm|hopm|shopm|ashopm")
        ->capture_default_str();
    basin->add_option("--grid", resolution, "grid resolution R (R x 2R cells)")
        ->capture_default_str();
    basin->add_option("--delta", delta, "stopping tolerance")->capture_default_str();
    basin->add_option("--kmax", kmax, "iteration cap")->capture_default_str();
    basin->add_option("--tau", tau, "adaptive shift margin")->capture_default_str();
    basin->add_option("--direction", direction, "max|min (ashopm)")
        ->capture_default_str();
    basin->add_option("-o,--output", out_path, "CSV output path");

    auto* sweep = app.add_subcommand(
        "sweep-omega", "CSV of (omega, N, eigenvalues) over an omega range");
    sweep->add_option("--n", dim, "dimension")->required();
    sweep->add_option("--omega-min", omega_min, "range start")->capture_default_str();
    sweep->add_option("--omega-max", omega_max, "range end")->capture_default_str();
    sweep->add_option("--steps", steps, "number of omega samples")
        ->capture_default_str();
    sweep->add_option("-o,--output", out_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& parse) {
        const int code = app.exit(parse);
        return code == 0 ? 0 : 1;
    }

    try {
        const SolverConfigXd config =
            make_config(method, delta, kmax, tau, alpha, direction);
        if (model->parsed())
            return run_model(family, order, dim, omega, seed, out_path, format);
        if (oracle->parsed()) return run_oracle(dim, omega);
        if (solve->parsed())
            return run_solve(tensor_path, config, trace, seed, x0_csv);
        if (enumerate->parsed())
            return run_enumerate(tensor_path, config, starts, seed, jobs,
                                 stop_at_oracle, out_path, format);
        if (classify_cmd->parsed()) return run_classify(tensor_path, pairs_path);
        if (basin->parsed()) return run_basin(tensor_path, config, resolution, out_path);
        if (sweep->parsed())
            return run_sweep(dim, omega_min, omega_max, steps, out_path);
    } catch (const ParseError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const IoError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const AsymmetricInput& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const ConflictingEntries& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const DimNot3& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const DimMismatch& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const SizeGuard& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const Error& error) {
        std::cerr << "numeric failure: " << error.what() << "\n";
        return 2;
    }
    return 1;
}
