#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "coherence/benchmark.hpp"
#include "coherence/bounds.hpp"

namespace coherence::io {

using nlohmann::json;

inline constexpr double kIngestSumTol = 1e-6;

// State and basis literals: {"dim": d, "re": [...], "im": [...]}, flat arrays,
// row-major for matrices. A length-d literal is a pure state; a length-d²
// literal is a density matrix (for a basis, column j is |b_j>).
json to_json(const PureState& phi);
json to_json(const DensityMatrix& rho);
json to_json(const Basis& basis);

DensityMatrix parse_state(const json& j);
Basis parse_basis(const json& j);

/// {"p": [...], "q": [...], "qprime": [...]}. Sums off by up to 1e-6 are
/// renormalized and reported in `warnings`; anything worse is rejected.
StatisticsTriple parse_statistics(const json& j, std::vector<std::string>* warnings);

bool is_statistics(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Six significant digits; magnitudes below 1e-12 print as 0.
std::string format_number(double x);

std::vector<BenchmarkConfig> parse_benchmark_config(const json& j);
json to_json(const BenchmarkConfig& config);
json to_json(const BenchmarkReport& report);

std::string benchmark_csv_header();
std::string benchmark_csv_row(const BenchmarkReport& report);
std::string format_grid(const Grid& grid, Strategy strategy);

}  // namespace coherence::io
