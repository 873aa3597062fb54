#include "zeig/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zeig/polynomial.hpp"

namespace zeig {

using nlohmann::json;

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

Eigen::Index vector_index(int dim, const std::vector<int>& idx) {
    Eigen::Index lin = 0;
    for (int i : idx) lin = lin * dim + i;
    return lin;
}

void check_indices(const TensorDocument& doc, const std::vector<int>& idx,
                   const char* what) {
    if (static_cast<int>(idx.size()) != doc.order)
        throw ParseError(std::string(what) + ": index tuple length must equal order");
    for (int i : idx)
        if (i < 0 || i >= doc.dim)
            throw ParseError(std::string(what) + ": index out of range");
}

SymmetricTensorXd dense_to_tensor(const TensorDocument& doc) {
    const Eigen::Index size = detail::storage_size(doc.order, doc.dim);
    if (doc.dense.size() != size)
        throw ParseError("dense payload length must be dim^order");

    // Reject input that is asymmetric beyond 1e-12, then make it exact.
    const double scale = std::max(1.0, doc.dense.cwiseAbs().maxCoeff());
    std::vector<int> idx(static_cast<std::size_t>(doc.order), 0);
    std::vector<int> scratch(static_cast<std::size_t>(doc.order), 0);
    Eigen::Index lin = 0;
    do {
        const Eigen::Index canon = detail::canonical_linear_index(doc.dim, idx, scratch);
        if (std::abs(doc.dense(lin) - doc.dense(canon)) > 1e-12 * scale)
            throw AsymmetricInput("dense payload is asymmetric beyond 1e-12");
        ++lin;
    } while (detail::next_multi_index(idx, doc.dim));
    return SymmetricTensorXd::symmetrized(doc.order, doc.dim, doc.dense);
}

SymmetricTensorXd coordinate_to_tensor(const TensorDocument& doc) {
    const Eigen::Index size = detail::storage_size(doc.order, doc.dim);
    Eigen::VectorXd canonical = Eigen::VectorXd::Zero(size);
    std::vector<bool> assigned(static_cast<std::size_t>(size), false);
    std::vector<int> sorted;
    for (const auto& [idx, value] : doc.coordinates) {
        check_indices(doc, idx, "coordinate entry");
        sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        const Eigen::Index canon = vector_index(doc.dim, sorted);
        if (assigned[static_cast<std::size_t>(canon)] && canonical(canon) != value)
            throw ConflictingEntries(
                "coordinate entries disagree within one permutation class");
        assigned[static_cast<std::size_t>(canon)] = true;
        canonical(canon) = value;
    }
    std::vector<int> idx(static_cast<std::size_t>(doc.order), 0);
    return SymmetricTensorXd::from_index_generator(
        doc.order, doc.dim, [&](std::span<const int> sorted_idx) {
            Eigen::Index lin = 0;
            for (int i : sorted_idx) lin = lin * doc.dim + i;
            return canonical(lin);
        });
}

SymmetricTensorXd polynomial_to_tensor(const TensorDocument& doc) {
    MonomialMapXd p(doc.order, doc.dim);
    for (const auto& [exponents, coeff] : doc.monomials) p.add_term(exponents, coeff);
    return from_polynomial(p);
}

json document_to_json(const TensorDocument& doc) {
    json out;
    out["order"] = doc.order;
    out["dim"] = doc.dim;
    if (!doc.family.empty()) {
        out["family"] = doc.family;
        if (doc.family == "omega") out["omega"] = doc.omega;
        if (doc.family == "random") out["seed"] = doc.seed;
    }
    switch (doc.format) {
        case TensorDocument::Format::Dense: {
            out["format"] = "dense";
            json entries = json::array();
            for (Eigen::Index i = 0; i < doc.dense.size(); ++i)
                entries.push_back(doc.dense(i));
            out["entries"] = std::move(entries);
            break;
        }
        case TensorDocument::Format::Coordinate: {
            out["format"] = "coordinate";
            json entries = json::array();
            for (const auto& [idx, value] : doc.coordinates)
                entries.push_back({{"indices", idx}, {"value", value}});
            out["entries"] = std::move(entries);
            break;
        }
        case TensorDocument::Format::Polynomial: {
            out["format"] = "polynomial";
            json terms = json::array();
            for (const auto& [exponents, coeff] : doc.monomials)
                terms.push_back({{"exponents", exponents}, {"coefficient", coeff}});
            out["terms"] = std::move(terms);
            break;
        }
    }
    return out;
}

TensorDocument document_from_json(const json& in) {
    TensorDocument doc;
    try {
        doc.order = in.at("order").get<int>();
        doc.dim = in.at("dim").get<int>();
        doc.family = in.value("family", std::string());
        doc.omega = in.value("omega", 0.0);
        doc.seed = in.value("seed", std::uint64_t(0));
        const std::string format = in.at("format").get<std::string>();
        if (format == "dense") {
            doc.format = TensorDocument::Format::Dense;
            const auto& entries = in.at("entries");
            doc.dense.resize(static_cast<Eigen::Index>(entries.size()));
            Eigen::Index k = 0;
            for (const auto& value : entries) doc.dense(k++) = value.get<double>();
        } else if (format == "coordinate") {
            doc.format = TensorDocument::Format::Coordinate;
            for (const auto& entry : in.at("entries"))
                doc.coordinates.emplace_back(entry.at("indices").get<std::vector<int>>(),
                                             entry.at("value").get<double>());
        } else if (format == "polynomial") {
            doc.format = TensorDocument::Format::Polynomial;
            for (const auto& term : in.at("terms"))
                doc.monomials.emplace_back(term.at("exponents").get<std::vector<int>>(),
                                           term.at("coefficient").get<double>());
        } else {
            throw ParseError("unknown tensor format: " + format);
        }
    } catch (const json::exception& error) {
        throw ParseError(std::string("tensor document: ") + error.what());
    }
    return doc;
}

TensorDocument document_from_text(const std::string& content) {
    TensorDocument doc;
    doc.format = TensorDocument::Format::Coordinate;
    std::istringstream stream(content);
    std::string line;
    int max_index = -1;
    bool saw_header = false;
    while (std::getline(stream, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string token;
        while (fields >> token) tokens.push_back(token);
        if (tokens.empty()) continue;
        try {
            if (tokens.size() == 2 && !saw_header && doc.coordinates.empty()) {
                // Optional "order dim" header; data lines have >= 3 tokens.
                doc.order = std::stoi(tokens[0]);
                doc.dim = std::stoi(tokens[1]);
                saw_header = true;
                continue;
            }
            if (tokens.size() < 3)
                throw ParseError("coordinate line needs at least two indices and a value");
            std::vector<int> idx;
            for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
                idx.push_back(std::stoi(tokens[k]));
                max_index = std::max(max_index, idx.back());
            }
            const double value = std::stod(tokens.back());
            if (doc.order == 0) doc.order = static_cast<int>(idx.size());
            if (static_cast<int>(idx.size()) != doc.order)
                throw ParseError("coordinate lines have inconsistent index counts");
            doc.coordinates.emplace_back(std::move(idx), value);
        } catch (const std::invalid_argument&) {
            throw ParseError("coordinate line is not numeric: " + line);
        } catch (const std::out_of_range&) {
            throw ParseError("coordinate value out of range: " + line);
        }
    }
    if (doc.coordinates.empty()) throw ParseError("no coordinate entries found");
    if (!saw_header) doc.dim = max_index + 1;
    if (doc.dim <= max_index)
        throw ParseError("coordinate index exceeds declared dimension");
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

SymmetricTensorXd to_tensor(const TensorDocument& doc) {
    if (doc.order < 2 || doc.dim < 2)
        throw ParseError("tensor document needs order >= 2 and dim >= 2");
    switch (doc.format) {
        case TensorDocument::Format::Dense: return dense_to_tensor(doc);
        case TensorDocument::Format::Coordinate: return coordinate_to_tensor(doc);
        default: return polynomial_to_tensor(doc);
    }
}

TensorDocument dense_document(const SymmetricTensorXd& tensor, std::string family,
                              double omega, std::uint64_t seed) {
    TensorDocument doc;
    doc.order = tensor.order();
    doc.dim = tensor.dim();
    doc.format = TensorDocument::Format::Dense;
    doc.dense = tensor.entries();
    doc.family = std::move(family);
    doc.omega = omega;
    doc.seed = seed;
    return doc;
}

TensorDocument read_tensor_document(const std::string& path) {
    const std::string content = read_file(path);
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        json parsed;
        try {
            parsed = json::parse(content);
        } catch (const json::exception& error) {
            throw ParseError(std::string("invalid JSON in ") + path + ": " + error.what());
        }
        return document_from_json(parsed);
    }
    return document_from_text(content);
}

SymmetricTensorXd read_tensor(const std::string& path) {
    return to_tensor(read_tensor_document(path));
}

void write_tensor_document(const TensorDocument& doc, const std::string& path) {
    write_file(path, document_to_json(doc).dump(2) + "\n");
}

void write_tensor_text(const TensorDocument& doc, const std::string& path) {
    std::ostringstream out;
    out << doc.order << " " << doc.dim << "\n";
    auto emit = [&](std::span<const int> idx, double value) {
        for (int i : idx) out << i << " ";
        out << format_double(value) << "\n";
    };
    if (doc.format == TensorDocument::Format::Coordinate) {
        for (const auto& [idx, value] : doc.coordinates) emit(idx, value);
    } else {
        // Emit one line per index multiset of the materialized tensor.
        const SymmetricTensorXd tensor = to_tensor(doc);
        std::vector<int> idx(static_cast<std::size_t>(doc.order), 0);
        do {
            const double value = tensor.at(idx);
            if (value != 0.0) emit(idx, value);
        } while (detail::next_sorted_multi_index(idx, doc.dim));
    }
    write_file(path, out.str());
}

namespace {

json stability_to_json(const StabilityReportXd& report) {
    json out;
    json spectrum = json::array();
    for (Eigen::Index i = 0; i < report.hp_spectrum.size(); ++i)
        spectrum.push_back(report.hp_spectrum(i));
    out["hp_spectrum"] = std::move(spectrum);
    out["gamma"] = report.gamma;
    out["rank"] = report.rank;
    out["rank_tolerance"] = report.rank_tolerance;
    out["power_class"] = power_class_name(report.power_class);
    out["newton_stable"] = report.newton_stable;
    return out;
}

StabilityReportXd stability_from_json(const json& in) {
    StabilityReportXd report;
    const auto& spectrum = in.at("hp_spectrum");
    report.hp_spectrum.resize(static_cast<Eigen::Index>(spectrum.size()));
    Eigen::Index k = 0;
    for (const auto& value : spectrum) report.hp_spectrum(k++) = value.get<double>();
    report.gamma = in.at("gamma").get<double>();
    report.rank = in.at("rank").get<int>();
    report.rank_tolerance = in.at("rank_tolerance").get<double>();
    report.newton_stable = in.at("newton_stable").get<bool>();
    const std::string power = in.at("power_class").get<std::string>();
    if (power == "positive-stable") report.power_class = PowerClass::PositiveStable;
    else if (power == "negative-stable") report.power_class = PowerClass::NegativeStable;
    else report.power_class = PowerClass::Unstable;
    return report;
}

}  // namespace

std::string result_to_json(const EnumerationResult& result) {
    json out;
    out["tensor"] = {{"descriptor", result.tensor_descriptor},
                     {"order", result.order},
                     {"dim", result.dim}};
    out["method"] = method_name(result.method);
    out["starts"] = result.starts;
    out["failures"] = result.failures;
    out["seed"] = result.seed;
    out["duration_seconds"] = result.duration_seconds;
    out["last_discovery_start"] = result.last_discovery_start;
    out["saturated"] = result.saturated;
    if (result.oracle_stop) {
        out["oracle_stop"] = true;
        out["oracle_complete"] = result.oracle_complete;
        out["budget"] = result.budget;
    }
    json pairs = json::array();
    for (std::size_t id = 0; id < result.pairs.size(); ++id) {
        const auto& found = result.pairs[id];
        json x = json::array();
        for (Eigen::Index i = 0; i < found.pair.x.size(); ++i)
            x.push_back(found.pair.x(i));
        pairs.push_back({{"id", id},
                         {"x", std::move(x)},
                         {"lambda", found.pair.lambda},
                         {"residual", found.pair.residual},
                         {"source", found.pair.source},
                         {"hits", found.hits},
                         {"stability", stability_to_json(found.stability)}});
    }
    out["pairs"] = std::move(pairs);
    return out.dump(2) + "\n";
}

std::string result_to_csv(const EnumerationResult& result) {
    std::ostringstream out;
    out << "id,lambda,abs_lambda,residual,hits,gamma,rank,power_class,newton_stable";
    for (int i = 0; i < result.dim; ++i) out << ",x" << i;
    out << "\n";
    for (std::size_t id = 0; id < result.pairs.size(); ++id) {
        const auto& found = result.pairs[id];
        out << id << "," << format_double(found.pair.lambda) << ","
            << format_double(std::abs(found.pair.lambda)) << ","
            << format_double(found.pair.residual) << "," << found.hits << ","
            << format_double(found.stability.gamma) << "," << found.stability.rank
            << "," << power_class_name(found.stability.power_class) << ","
            << (found.stability.newton_stable ? "true" : "false");
        for (Eigen::Index i = 0; i < found.pair.x.size(); ++i)
            out << "," << format_double(found.pair.x(i));
        out << "\n";
    }
    return out.str();
}

void write_result(const EnumerationResult& result, const std::string& path,
                  const std::string& format) {
    if (format == "json") {
        write_file(path, result_to_json(result));
    } else if (format == "csv") {
        write_file(path, result_to_csv(result));
    } else {
        throw ParseError("unknown result format: " + format);
    }
}

EnumerationResult read_result(const std::string& path) {
    json in;
    try {
        in = json::parse(read_file(path));
    } catch (const json::exception& error) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + error.what());
    }
    EnumerationResult result;
    try {
        result.tensor_descriptor = in.at("tensor").at("descriptor").get<std::string>();
        result.order = in.at("tensor").at("order").get<int>();
        result.dim = in.at("tensor").at("dim").get<int>();
        result.method = parse_method(in.at("method").get<std::string>());
        result.starts = in.at("starts").get<long>();
        result.failures = in.at("failures").get<long>();
        result.seed = in.at("seed").get<std::uint64_t>();
        result.duration_seconds = in.at("duration_seconds").get<double>();
        result.last_discovery_start = in.at("last_discovery_start").get<long>();
        result.saturated = in.at("saturated").get<bool>();
        result.oracle_stop = in.value("oracle_stop", false);
        result.oracle_complete = in.value("oracle_complete", false);
        result.budget = in.value("budget", long(0));
        for (const auto& entry : in.at("pairs")) {
            FoundPair found;
            const auto& x = entry.at("x");
            found.pair.x.resize(static_cast<Eigen::Index>(x.size()));
            Eigen::Index k = 0;
            for (const auto& value : x) found.pair.x(k++) = value.get<double>();
            found.pair.lambda = entry.at("lambda").get<double>();
            found.pair.residual = entry.at("residual").get<double>();
            found.pair.source = entry.at("source").get<std::string>();
            found.hits = entry.at("hits").get<long>();
            found.stability = stability_from_json(entry.at("stability"));
            result.pairs.push_back(std::move(found));
        }
    } catch (const json::exception& error) {
        throw ParseError(std::string("result document: ") + error.what());
    }
    return result;
}

BasinGrid basin_map(const SymmetricTensorXd& tensor, const SolverConfigXd& config,
                    int resolution) {
    if (tensor.dim() != 3)
        throw DimNot3("basin_map: tensor dimension must be 3");
    if (resolution < 1) throw ParseError("basin_map: resolution must be positive");

    BasinGrid grid;
    grid.resolution = resolution;
    grid.cells.reserve(static_cast<std::size_t>(resolution) * 2 * resolution);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < resolution; ++i) {
        const double theta = pi * (i + 0.5) / resolution;
        for (int j = 0; j < 2 * resolution; ++j) {
            const double phi = pi * j / resolution;
            Eigen::Vector3d x0(std::sin(theta) * std::cos(phi),
                               std::sin(theta) * std::sin(phi), std::cos(theta));
            const SolveOutcomeXd outcome = run_solver<double>(tensor, x0, config);
            BasinCell cell{i, j, -1, outcome.iterations};
            if (outcome.status == SolveStatus::Converged) {
                const auto validation = validate_eigenpair(tensor, outcome.x);
                if (validation.ok) {
                    EigenpairXd candidate = canonical_sign<double>(
                        validation.x, validation.lambda, tensor.order());
                    candidate.residual = validation.residual;
                    candidate.source = method_name(config.method);
                    cell.pair_id = -1;
                    for (std::size_t id = 0; id < grid.pairs.size(); ++id) {
                        if (same_eigenpair(grid.pairs[id], candidate)) {
                            cell.pair_id = static_cast<int>(id);
                            break;
                        }
                    }
                    if (cell.pair_id < 0) {
                        cell.pair_id = static_cast<int>(grid.pairs.size());
                        grid.pairs.push_back(std::move(candidate));
                    }
                }
            }
            grid.cells.push_back(cell);
        }
    }
    return grid;
}

std::string basin_to_csv(const BasinGrid& grid) {
    std::ostringstream out;
    out << "# basin grid R=" << grid.resolution << " pairs=" << grid.pairs.size()
        << "\n";
    for (std::size_t id = 0; id < grid.pairs.size(); ++id) {
        out << "# pair " << id << " lambda=" << format_double(grid.pairs[id].lambda)
            << " x=";
        for (Eigen::Index i = 0; i < grid.pairs[id].x.size(); ++i) {
            if (i > 0) out << " ";
            out << format_double(grid.pairs[id].x(i));
        }
        out << "\n";
    }
    out << "theta_index,phi_index,pair_id,iterations\n";
    for (const auto& cell : grid.cells)
        out << cell.theta_index << "," << cell.phi_index << "," << cell.pair_id << ","
            << cell.iterations << "\n";
    return out.str();
}

void write_basin_csv(const BasinGrid& grid, const std::string& path) {
    write_file(path, basin_to_csv(grid));
}

}  // namespace zeig
