#pragma once

// Serialization surface: tensor documents (JSON dense / coordinate /
// polynomial plus a plain-text coordinate format), enumeration results as
// JSON or CSV, and the spherical basin-of-attraction grid for n = 3.
// All emission is byte-deterministic; floats are printed with 17 significant
// digits so read-back is exact.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zeig/enumeration.hpp"
#include "zeig/symmetric_tensor.hpp"

namespace zeig {

struct TensorDocument {
    enum class Format { Dense, Coordinate, Polynomial };

    int order = 0;
    int dim = 0;
    Format format = Format::Dense;

    Eigen::VectorXd dense;  ///< dim^order entries, row-major
    std::vector<std::pair<std::vector<int>, double>> coordinates;  ///< 0-based indices
    std::vector<std::pair<std::vector<int>, double>> monomials;    ///< exponents -> coeff

    // Optional provenance; lets downstream commands rebuild the closed-form
    // oracle for analytic families.
    std::string family;
    double omega = 0;
    std::uint64_t seed = 0;
};

/// Shortest 17-significant-digit decimal form, round-trip exact for doubles.
std::string format_double(double value);

/// Materializes a document as a symmetric tensor. Dense payloads are
/// rejected when asymmetric beyond 1e-12; coordinate entries are replicated
/// to all index permutations and conflicting duplicates are rejected.
SymmetricTensorXd to_tensor(const TensorDocument& doc);

TensorDocument dense_document(const SymmetricTensorXd& tensor, std::string family = "",
                              double omega = 0, std::uint64_t seed = 0);

/// Reads a tensor document: JSON when the content starts with '{', otherwise
/// plain-text coordinate lines "i1 ... im value" (0-based, '#' comments).
TensorDocument read_tensor_document(const std::string& path);
SymmetricTensorXd read_tensor(const std::string& path);

void write_tensor_document(const TensorDocument& doc, const std::string& path);
void write_tensor_text(const TensorDocument& doc, const std::string& path);

std::string result_to_json(const EnumerationResult& result);
std::string result_to_csv(const EnumerationResult& result);
void write_result(const EnumerationResult& result, const std::string& path,
                  const std::string& format);
EnumerationResult read_result(const std::string& path);

/// Basin-of-attraction scan over the sphere for n = 3 tensors: node
/// (i, j) is x(theta_i, phi_j) with theta_i = pi (i + 1/2) / R covering
/// [0, pi] in R steps and phi_j = 2 pi j / (2R) covering [0, 2 pi) in 2R
/// steps. pair_id indexes the deduplicated list discovered during the scan,
/// -1 for failures.
struct BasinCell {
    int theta_index = 0;
    int phi_index = 0;
    int pair_id = -1;
    int iterations = 0;
};

struct BasinGrid {
    int resolution = 0;
    std::vector<EigenpairXd> pairs;
    std::vector<BasinCell> cells;
};

BasinGrid basin_map(const SymmetricTensorXd& tensor, const SolverConfigXd& config,
                    int resolution);
std::string basin_to_csv(const BasinGrid& grid);
void write_basin_csv(const BasinGrid& grid, const std::string& path);

}  // namespace zeig
