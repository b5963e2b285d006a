#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "krongraph/chung_lu.hpp"
#include "krongraph/generator_matrix.hpp"
#include "krongraph/metrics.hpp"
#include "krongraph/skg.hpp"
#include "krongraph/spectrum.hpp"

namespace krongraph {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ModelChoice { skg, nskg, cl };

// Named metrics accepted by analyze/compare: degree, cc, eig, assort, core.
extern const std::vector<std::string> kAllMetrics;

struct GenerateConfig {
  ModelChoice model = ModelChoice::skg;
  std::string preset;                        // empty = explicit matrix
  std::optional<GeneratorMatrix> generator;
  std::optional<int> levels;
  std::optional<std::uint64_t> edges;
  double noise = 0.1;                        // nskg only
  std::optional<std::filesystem::path> degree_file;  // cl only: explicit weights
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = ".";
  std::uint64_t chunk_size = 1 << 16;
  int threads = 1;
};

// One vertex per line: "out_weight [in_weight]" ('#' comments allowed);
// in defaults to out. Drives model cl without SKG parameters.
DegreeSequence parse_degree_file(const std::filesystem::path& path);

// Writes "<model>_<preset|custom>_l<levels>_s<seed>.tsv" with a provenance
// header sufficient to regenerate the file byte-identically. For model cl the
// weights are the associated CL sequence of the SKG parameters. Returns the
// file path.
std::filesystem::path cmd_generate(const GenerateConfig& config);

struct AnalyzeConfig {
  std::filesystem::path input;
  std::vector<std::string> metrics;   // empty = all
  int eigenvalue_count = 25;
  std::uint64_t eigen_seed = 0;
  std::uint64_t spy_resolution = 0;   // 0 = no raster
  std::filesystem::path out_dir = ".";
};

// Symmetrizes the parsed edge list and writes one CSV per requested metric:
// degree.csv, cc.csv, eig.csv, assort.csv, core.csv (and spy.csv when a
// raster was requested). Returns the computed report.
MetricReport cmd_analyze(const AnalyzeConfig& config);

struct CompareConfig {
  std::filesystem::path input_a;
  std::filesystem::path input_b;
  std::vector<std::string> metrics;
  int eigenvalue_count = 25;
  std::uint64_t eigen_seed = 0;
  std::filesystem::path out_dir = ".";
};

// Analyzes both inputs, then writes gap_summary.csv plus paired per-metric
// CSVs (degree_pair.csv, cc_pair.csv, eig_pair.csv, assort_pair.csv,
// core_pair.csv) for overlay plots.
ComparisonSummary cmd_compare(const CompareConfig& config);

struct FitClConfig {
  std::filesystem::path input;
  std::optional<std::uint64_t> edges;  // default: observed undirected edge count
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = ".";
  std::uint64_t chunk_size = 1 << 16;
  int threads = 1;
};

// CL fit of a real graph: observed degrees as weights, m' sampled insertions.
std::filesystem::path cmd_fit_cl(const FitClConfig& config);

struct SpectrumConfig {
  GeneratorMatrix generator;
  int levels = 18;
  std::uint64_t edges = 0;        // recorded in summary only
  double mass_threshold = 1e-20;
  std::filesystem::path out_dir = ".";
};

struct SpectrumSummary {
  double theorem_gap = 0.0;
  double skg_mass_below = 0.0;
  double cl_mass_below = 0.0;
  std::size_t skg_distinct_values = 0;
  std::size_t cl_distinct_values = 0;
};

// Writes skg_spectrum.csv / cl_spectrum.csv (merged values), skg_classes.csv /
// cl_classes.csv (per-class multiplicities), bins.csv, and summary.csv.
SpectrumSummary cmd_spectrum(const SpectrumConfig& config);

}  // namespace krongraph
