#include "krongraph/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "krongraph/chung_lu.hpp"
#include "krongraph/edge_io.hpp"
#include "krongraph/eigenvalues.hpp"
#include "krongraph/errors.hpp"
#include "krongraph/graph.hpp"
#include "krongraph/presets.hpp"
#include "krongraph/raster.hpp"

namespace krongraph {

const std::vector<std::string> kAllMetrics = {"degree", "cc", "eig", "assort", "core"};

namespace {

const char* model_name(ModelChoice model) {
  switch (model) {
    case ModelChoice::skg:
      return "skg";
    case ModelChoice::nskg:
      return "nskg";
    case ModelChoice::cl:
      return "cl";
  }
  return "unknown";
}

struct ResolvedParams {
  GeneratorMatrix generator;
  int levels = 0;
  std::uint64_t edges = 0;
  std::string preset_name;  // "custom" when explicit
};

ResolvedParams resolve_params(const GenerateConfig& config) {
  ResolvedParams resolved;
  if (!config.preset.empty()) {
    const Preset* preset = find_preset(config.preset);
    if (preset == nullptr) {
      throw InvalidParamsError("unknown preset \"" + config.preset + "\"");
    }
    resolved.preset_name = preset->name;
    resolved.generator = preset->generator;
    resolved.levels = config.levels.value_or(preset->default_levels);
    resolved.edges = config.edges.value_or(preset_edge_count(*preset, resolved.levels));
  } else {
    if (!config.generator || !config.levels) {
      throw InvalidParamsError("either --preset or all of --t1..--t4 and --levels are required");
    }
    resolved.preset_name = "custom";
    resolved.generator = *config.generator;
    resolved.levels = *config.levels;
    if (!config.edges) {
      throw InvalidParamsError("--edges is required with explicit parameters");
    }
    resolved.edges = *config.edges;
  }
  validate_generator(resolved.generator.t1, resolved.generator.t2, resolved.generator.t3,
                     resolved.generator.t4);
  return resolved;
}

void append_matrix_lines(std::vector<std::string>& header, const std::string& key,
                         const GeneratorMatrix& t) {
  header.push_back(key + ": " + format_double(t.t1) + " " + format_double(t.t2) + " " +
                   format_double(t.t3) + " " + format_double(t.t4));
}

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  return out;
}

bool metric_requested(const std::vector<std::string>& metrics, const std::string& name) {
  if (metrics.empty()) return true;
  return std::find(metrics.begin(), metrics.end(), name) != metrics.end();
}

MetricReport analyze_graph(const Graph& g, const std::vector<std::string>& metrics,
                           int eigenvalue_count, std::uint64_t eigen_seed) {
  MetricReport report;
  if (metric_requested(metrics, "degree")) {
    report.degree_histogram = degree_distribution(g);
  }
  if (metric_requested(metrics, "cc")) {
    report.clustering = clustering_by_degree(g);
  }
  if (metric_requested(metrics, "eig")) {
    int k = eigenvalue_count;
    if (static_cast<std::uint64_t>(k) > g.n) {
      std::cerr << "warning: clamping eigenvalue count " << k << " to n = " << g.n << "\n";
      k = static_cast<int>(g.n);
    }
    EigenOptions options;
    options.seed = eigen_seed;
    report.top_eigenvalues = top_eigenvalues(g, k, options);
  }
  if (metric_requested(metrics, "assort")) {
    report.assortativity = assortativity_profile(g);
  }
  if (metric_requested(metrics, "core")) {
    report.cores = core_decomposition(g);
  }
  return report;
}

void write_report_csvs(const MetricReport& report, const std::vector<std::string>& metrics,
                       const std::filesystem::path& out_dir) {
  if (metric_requested(metrics, "degree")) {
    auto out = open_csv(out_dir / "degree.csv");
    out << "degree,count\n";
    for (const auto& [d, count] : report.degree_histogram) out << d << "," << count << "\n";
  }
  if (metric_requested(metrics, "cc")) {
    auto out = open_csv(out_dir / "cc.csv");
    out << "degree,mean_cc,vertex_count\n";
    for (const auto& [d, cls] : report.clustering) {
      out << d << "," << format_double(cls.mean_cc) << "," << cls.vertex_count << "\n";
    }
  }
  if (metric_requested(metrics, "eig")) {
    auto out = open_csv(out_dir / "eig.csv");
    out << "rank,value\n";
    for (std::size_t r = 0; r < report.top_eigenvalues.size(); ++r) {
      out << (r + 1) << "," << format_double(report.top_eigenvalues[r]) << "\n";
    }
  }
  if (metric_requested(metrics, "assort")) {
    auto out = open_csv(out_dir / "assort.csv");
    out << "degree,mean_neighbor_degree\n";
    for (const auto& [d, xd] : report.assortativity) {
      out << d << "," << format_double(xd) << "\n";
    }
  }
  if (metric_requested(metrics, "core")) {
    auto out = open_csv(out_dir / "core.csv");
    out << "k,size\n";
    for (const auto& [k, size] : report.cores.core_sizes) out << k << "," << size << "\n";
  }
}

}  // namespace

DegreeSequence parse_degree_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  DegreeSequence degrees;
  std::string line;
  std::size_t line_number = 0;
  double out_total = 0.0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    double out = 0.0;
    if (!(fields >> out) || out < 0.0) {
      throw MalformedLineError(
          "malformed degree at line " + std::to_string(line_number) + ": \"" + line + "\"",
          line_number);
    }
    double in_weight = out;
    fields >> in_weight;
    degrees.out_weights.push_back(out);
    degrees.in_weights.push_back(in_weight);
    out_total += out;
  }
  if (degrees.out_weights.empty()) {
    throw EmptyInputError("degree file holds no data lines");
  }
  degrees.total = out_total;
  return degrees;
}

std::filesystem::path cmd_generate(const GenerateConfig& config) {
  GenerateOptions options;
  options.chunk_size = config.chunk_size;
  options.threads = config.threads;

  std::vector<std::string> header;
  header.push_back(std::string("krongraph ") + kToolVersion);
  header.push_back(std::string("model: ") + model_name(config.model));

  EdgeList edges;
  std::string stem;
  if (config.model == ModelChoice::cl && config.degree_file) {
    const DegreeSequence degrees = parse_degree_file(*config.degree_file);
    const std::uint64_t m = config.edges.value_or(
        static_cast<std::uint64_t>(std::llround(degrees.total)));
    header.push_back("degrees: " + config.degree_file->filename().string());
    header.push_back("vertices: " + std::to_string(degrees.out_weights.size()));
    header.push_back("edges: " + std::to_string(m));
    header.push_back("seed: " + std::to_string(config.seed));
    header.push_back("chunk_size: " + std::to_string(config.chunk_size));
    edges = generate_cl(degrees, m, config.seed, options);
    stem = "cl_degrees_s" + std::to_string(config.seed);
  } else {
    const ResolvedParams resolved = resolve_params(config);
    const SkgParams params =
        make_skg_params(resolved.generator, resolved.levels, resolved.edges);
    header.push_back("preset: " + resolved.preset_name);
    append_matrix_lines(header, "generator", resolved.generator);
    header.push_back("levels: " + std::to_string(resolved.levels));
    header.push_back("vertices: " + std::to_string(params.vertex_count()));
    header.push_back("edges: " + std::to_string(resolved.edges));
    header.push_back("seed: " + std::to_string(config.seed));
    header.push_back("chunk_size: " + std::to_string(config.chunk_size));

    switch (config.model) {
      case ModelChoice::skg: {
        edges = generate_skg(params, config.seed, options);
        break;
      }
      case ModelChoice::nskg: {
        auto [schedule, generated] = generate_nskg(params, config.noise, config.seed, options);
        header.push_back("noise: " + format_double(config.noise));
        for (std::size_t i = 0; i < schedule.per_level.size(); ++i) {
          append_matrix_lines(header, "level_matrix " + std::to_string(i + 1),
                              schedule.per_level[i]);
        }
        edges = std::move(generated);
        break;
      }
      case ModelChoice::cl: {
        const DegreeSequence degrees =
            associated_cl(resolved.generator, resolved.levels, resolved.edges);
        edges = generate_cl(degrees, resolved.edges, config.seed, options);
        break;
      }
    }
    stem = std::string(model_name(config.model)) + "_" + resolved.preset_name + "_l" +
           std::to_string(resolved.levels) + "_s" + std::to_string(config.seed);
  }
  header.push_back("columns: source<TAB>sink");

  std::filesystem::create_directories(config.out_dir);
  const std::filesystem::path path = config.out_dir / (stem + ".tsv");
  write_edge_list_file(path, header, edges);
  return path;
}

MetricReport cmd_analyze(const AnalyzeConfig& config) {
  const ParsedEdgeList parsed = parse_edge_list_file(config.input);
  const Graph g = symmetrize(parsed.edges, parsed.vertex_count);
  const MetricReport report =
      analyze_graph(g, config.metrics, config.eigenvalue_count, config.eigen_seed);
  std::filesystem::create_directories(config.out_dir);
  write_report_csvs(report, config.metrics, config.out_dir);

  if (config.spy_resolution > 0) {
    // Raster over the next power-of-two bounding box so arbitrary inputs work.
    VertexId box = 1;
    while (box < parsed.vertex_count) box <<= 1;
    const std::uint64_t resolution = std::min<std::uint64_t>(config.spy_resolution, box);
    const auto grid = spy_raster(parsed.edges, box, resolution);
    auto out = open_csv(config.out_dir / "spy.csv");
    for (const auto& row : grid) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << row[c] << (c + 1 < row.size() ? "," : "");
      }
      out << "\n";
    }
  }
  return report;
}

ComparisonSummary cmd_compare(const CompareConfig& config) {
  const ParsedEdgeList parsed_a = parse_edge_list_file(config.input_a);
  const ParsedEdgeList parsed_b = parse_edge_list_file(config.input_b);
  const Graph graph_a = symmetrize(parsed_a.edges, parsed_a.vertex_count);
  const Graph graph_b = symmetrize(parsed_b.edges, parsed_b.vertex_count);
  const MetricReport a =
      analyze_graph(graph_a, config.metrics, config.eigenvalue_count, config.eigen_seed);
  const MetricReport b =
      analyze_graph(graph_b, config.metrics, config.eigenvalue_count, config.eigen_seed);
  const ComparisonSummary summary = compare_reports(a, b);

  std::filesystem::create_directories(config.out_dir);

  if (metric_requested(config.metrics, "degree")) {
    auto out = open_csv(config.out_dir / "degree_pair.csv");
    out << "degree,count_a,count_b\n";
    auto ia = a.degree_histogram.begin();
    auto ib = b.degree_histogram.begin();
    while (ia != a.degree_histogram.end() || ib != b.degree_histogram.end()) {
      if (ib == b.degree_histogram.end() ||
          (ia != a.degree_histogram.end() && ia->first < ib->first)) {
        out << ia->first << "," << ia->second << ",0\n";
        ++ia;
      } else if (ia == a.degree_histogram.end() || ib->first < ia->first) {
        out << ib->first << ",0," << ib->second << "\n";
        ++ib;
      } else {
        out << ia->first << "," << ia->second << "," << ib->second << "\n";
        ++ia;
        ++ib;
      }
    }
  }
  if (metric_requested(config.metrics, "cc")) {
    auto out = open_csv(config.out_dir / "cc_pair.csv");
    out << "degree,mean_cc_a,count_a,mean_cc_b,count_b\n";
    for (const auto& [d, cls] : a.clustering) {
      auto it = b.clustering.find(d);
      if (it == b.clustering.end()) continue;
      out << d << "," << format_double(cls.mean_cc) << "," << cls.vertex_count << ","
          << format_double(it->second.mean_cc) << "," << it->second.vertex_count << "\n";
    }
  }
  if (metric_requested(config.metrics, "eig")) {
    auto out = open_csv(config.out_dir / "eig_pair.csv");
    out << "rank,value_a,value_b\n";
    const std::size_t ranks = std::min(a.top_eigenvalues.size(), b.top_eigenvalues.size());
    for (std::size_t r = 0; r < ranks; ++r) {
      out << (r + 1) << "," << format_double(a.top_eigenvalues[r]) << ","
          << format_double(b.top_eigenvalues[r]) << "\n";
    }
  }
  if (metric_requested(config.metrics, "assort")) {
    auto out = open_csv(config.out_dir / "assort_pair.csv");
    out << "degree,xd_a,xd_b\n";
    for (const auto& [d, xd] : a.assortativity) {
      auto it = b.assortativity.find(d);
      if (it == b.assortativity.end()) continue;
      out << d << "," << format_double(xd) << "," << format_double(it->second) << "\n";
    }
  }
  if (metric_requested(config.metrics, "core")) {
    auto out = open_csv(config.out_dir / "core_pair.csv");
    out << "k,size_a,size_b\n";
    for (const auto& [k, size] : a.cores.core_sizes) {
      auto it = b.cores.core_sizes.find(k);
      if (it == b.cores.core_sizes.end()) continue;
      out << k << "," << size << "," << it->second << "\n";
    }
  }

  auto out = open_csv(config.out_dir / "gap_summary.csv");
  out << "metric,value\n";
  out << "max_cc_gap," << format_double(summary.max_cc_gap) << "\n";
  out << "max_cc_gap_min50," << format_double(max_clustering_gap(a, b, 50)) << "\n";
  out << "max_eigenvalue_rel_gap," << format_double(summary.max_eigenvalue_rel_gap) << "\n";
  out << "max_core_size_rel_gap," << format_double(summary.max_core_size_rel_gap) << "\n";
  out << "degree_tv_distance," << format_double(summary.degree_tv_distance) << "\n";
  return summary;
}

std::filesystem::path cmd_fit_cl(const FitClConfig& config) {
  const ParsedEdgeList parsed = parse_edge_list_file(config.input);
  const Graph g = symmetrize(parsed.edges, parsed.vertex_count);
  const DegreeSequence degrees = observed_degrees(g);
  const std::uint64_t edges = config.edges.value_or(g.edge_count);

  GenerateOptions options;
  options.chunk_size = config.chunk_size;
  options.threads = config.threads;
  const EdgeList sample = generate_cl(degrees, edges, config.seed, options);

  std::vector<std::string> header;
  header.push_back(std::string("krongraph ") + kToolVersion);
  header.push_back("model: cl-fit");
  header.push_back("source: " + config.input.filename().string());
  header.push_back("source_vertices: " + std::to_string(g.n));
  header.push_back("source_edges_dedup: " + std::to_string(g.edge_count));
  header.push_back("source_self_loops_dropped: " + std::to_string(g.self_loops_dropped));
  header.push_back("source_duplicates_dropped: " + std::to_string(g.duplicates_dropped));
  header.push_back("edges: " + std::to_string(edges));
  header.push_back("seed: " + std::to_string(config.seed));
  header.push_back("chunk_size: " + std::to_string(config.chunk_size));
  header.push_back("columns: source<TAB>sink");

  std::filesystem::create_directories(config.out_dir);
  const std::filesystem::path path =
      config.out_dir / ("clfit_" + config.input.stem().string() + "_s" +
                        std::to_string(config.seed) + ".tsv");
  write_edge_list_file(path, header, sample);
  return path;
}

SpectrumSummary cmd_spectrum(const SpectrumConfig& config) {
  validate_generator(config.generator.t1, config.generator.t2, config.generator.t3,
                     config.generator.t4);
  const ValueSpectrum skg = skg_spectrum(config.generator, config.levels);
  const ValueSpectrum cl = cl_spectrum(config.generator, config.levels);
  const BinReport bins = bin_skg_into_cl(skg, cl);

  SpectrumSummary summary;
  summary.theorem_gap = theorem_gap(config.generator, config.levels);
  summary.skg_mass_below = mass_below(skg, config.mass_threshold);
  summary.cl_mass_below = mass_below(cl, config.mass_threshold);
  summary.skg_distinct_values = skg.entries.size();
  summary.cl_distinct_values = cl.entries.size();

  std::filesystem::create_directories(config.out_dir);
  {
    auto out = open_csv(config.out_dir / "skg_spectrum.csv");
    out << "value,multiplicity\n";
    for (const SpectrumEntry& e : skg.entries) {
      out << format_double(e.value) << "," << e.multiplicity.str() << "\n";
    }
  }
  {
    auto out = open_csv(config.out_dir / "cl_spectrum.csv");
    out << "value,multiplicity\n";
    for (const SpectrumEntry& e : cl.entries) {
      out << format_double(e.value) << "," << e.multiplicity.str() << "\n";
    }
  }
  {
    auto out = open_csv(config.out_dir / "skg_classes.csv");
    out << "source_zeros,sink_zeros,common_zeros,value,multiplicity\n";
    for (const SpectrumClass& c : skg.classes) {
      out << c.source_zeros << "," << c.sink_zeros << "," << c.common_zeros << ","
          << format_double(c.value) << "," << c.multiplicity.str() << "\n";
    }
  }
  {
    auto out = open_csv(config.out_dir / "cl_classes.csv");
    out << "source_zeros,sink_zeros,value,multiplicity\n";
    for (const SpectrumClass& c : cl.classes) {
      out << c.source_zeros << "," << c.sink_zeros << "," << format_double(c.value) << ","
          << c.multiplicity.str() << "\n";
    }
  }
  {
    auto out = open_csv(config.out_dir / "bins.csv");
    out << "bin_value,cl_count,skg_count,cl_mass,skg_mass\n";
    for (const BinRow& row : bins.bins) {
      out << format_double(row.bin_value) << "," << row.cl_multiplicity.str() << ","
          << row.skg_count.str() << "," << format_double(row.cl_mass) << ","
          << format_double(row.skg_mass) << "\n";
    }
  }
  {
    auto out = open_csv(config.out_dir / "summary.csv");
    out << "key,value\n";
    out << "levels," << config.levels << "\n";
    out << "theorem_gap," << format_double(summary.theorem_gap) << "\n";
    out << "mass_threshold," << format_double(config.mass_threshold) << "\n";
    out << "skg_mass_below_threshold," << format_double(summary.skg_mass_below) << "\n";
    out << "cl_mass_below_threshold," << format_double(summary.cl_mass_below) << "\n";
    out << "skg_distinct_values," << summary.skg_distinct_values << "\n";
    out << "cl_distinct_values," << summary.cl_distinct_values << "\n";
  }
  return summary;
}

}  // namespace krongraph
