#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "krongraph/commands.hpp"
#include "krongraph/edge_io.hpp"
#include "krongraph/errors.hpp"
#include "krongraph/presets.hpp"

namespace {

// KRONGRAPH_THREADS caps worker threads for generation; default is 1 so runs
// are cheap to reason about (output is thread-count independent either way).
int thread_budget() {
  const char* env = std::getenv("KRONGRAPH_THREADS");
  if (env == nullptr) return 1;
  const int cap = std::atoi(env);
  if (cap <= 0) return 1;
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  return hw > 0 ? std::min(cap, hw) : cap;
}

struct MatrixArgs {
  double t1 = -1, t2 = -1, t3 = -1, t4 = -1;

  bool any() const { return t1 >= 0 || t2 >= 0 || t3 >= 0 || t4 >= 0; }
  krongraph::GeneratorMatrix validated() const {
    return krongraph::validate_generator(t1, t2, t3, t4);
  }
};

void add_matrix_options(CLI::App* cmd, MatrixArgs& args) {
  cmd->add_option("--t1", args.t1, "generator entry t1");
  cmd->add_option("--t2", args.t2, "generator entry t2");
  cmd->add_option("--t3", args.t3, "generator entry t3");
  cmd->add_option("--t4", args.t4, "generator entry t4");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic Kronecker / Chung-Lu graph generation and comparison"};
  app.require_subcommand(1);

  using namespace krongraph;

  // generate
  auto* generate = app.add_subcommand("generate", "sample a graph and write an edge-list file");
  std::string model_name = "skg";
  std::string preset_name;
  MatrixArgs matrix;
  int levels = 0;
  std::uint64_t edges = 0;
  double noise = 0.1;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  std::uint64_t chunk_size = 1 << 16;
  generate->add_option("--model", model_name, "skg, nskg, or cl")
      ->check(CLI::IsMember({"skg", "nskg", "cl"}));
  generate->add_option("--preset", preset_name, "parameter preset (see `presets`)");
  add_matrix_options(generate, matrix);
  generate->add_option("--levels", levels, "levels l; n = 2^l");
  generate->add_option("--edges", edges, "edge insertions m");
  generate->add_option("--noise", noise, "nskg noise level b");
  std::string degree_file;
  generate->add_option("--degrees", degree_file,
                       "degree-sequence file driving model cl (one 'out [in]' line per vertex)");
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--out-dir", out_dir, "output directory");
  generate->add_option("--chunk-size", chunk_size, "edges per random-stream chunk");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "compute the metric battery of a graph file");
  std::string input;
  std::vector<std::string> metrics;
  int eigs = 25;
  std::uint64_t spy = 0;
  analyze->add_option("input", input, "edge-list file")->required();
  analyze->add_option("--metrics", metrics, "subset of: degree cc eig assort core");
  analyze->add_option("--eigs", eigs, "eigenvalue count (default 25)");
  analyze->add_option("--spy", spy, "also write a spy raster at this resolution");
  analyze->add_option("--out-dir", out_dir, "output directory");

  // compare
  auto* compare = app.add_subcommand("compare", "paired metric comparison of two graph files");
  std::string input_b;
  compare->add_option("input_a", input, "first edge-list file")->required();
  compare->add_option("input_b", input_b, "second edge-list file")->required();
  compare->add_option("--metrics", metrics, "subset of: degree cc eig assort core");
  compare->add_option("--eigs", eigs, "eigenvalue count (default 25)");
  compare->add_option("--out-dir", out_dir, "output directory");

  // fit-cl
  auto* fit = app.add_subcommand("fit-cl", "sample the CL fit of a real graph");
  fit->add_option("input", input, "edge-list file")->required();
  fit->add_option("--edges", edges, "insertions m' (default: observed edge count)");
  fit->add_option("--seed", seed, "random seed");
  fit->add_option("--out-dir", out_dir, "output directory");
  fit->add_option("--chunk-size", chunk_size, "edges per random-stream chunk");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "closed-form value spectra, bins, theorem gap");
  spectrum->add_option("--preset", preset_name, "parameter preset");
  add_matrix_options(spectrum, matrix);
  spectrum->add_option("--levels", levels, "levels l (<= 40)");
  spectrum->add_option("--out-dir", out_dir, "output directory");

  // presets
  auto* presets = app.add_subcommand("presets", "list built-in parameter presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      GenerateConfig config;
      config.model = model_name == "skg"    ? ModelChoice::skg
                     : model_name == "nskg" ? ModelChoice::nskg
                                            : ModelChoice::cl;
      config.preset = preset_name;
      if (matrix.any()) config.generator = matrix.validated();
      if (generate->count("--levels") > 0) config.levels = levels;
      if (generate->count("--edges") > 0) config.edges = edges;
      config.noise = noise;
      if (!degree_file.empty()) config.degree_file = degree_file;
      config.seed = seed;
      config.out_dir = out_dir;
      config.chunk_size = chunk_size;
      config.threads = thread_budget();
      const auto path = cmd_generate(config);
      std::cout << path.string() << "\n";
    } else if (analyze->parsed()) {
      AnalyzeConfig config;
      config.input = input;
      config.metrics = metrics;
      config.eigenvalue_count = eigs;
      config.spy_resolution = spy;
      config.out_dir = out_dir;
      cmd_analyze(config);
      std::cout << out_dir << "\n";
    } else if (compare->parsed()) {
      CompareConfig config;
      config.input_a = input;
      config.input_b = input_b;
      config.metrics = metrics;
      config.eigenvalue_count = eigs;
      config.out_dir = out_dir;
      const auto summary = cmd_compare(config);
      std::cout << "max_cc_gap=" << format_double(summary.max_cc_gap)
                << " degree_tv=" << format_double(summary.degree_tv_distance) << "\n";
    } else if (fit->parsed()) {
      FitClConfig config;
      config.input = input;
      if (fit->count("--edges") > 0) config.edges = edges;
      config.seed = seed;
      config.out_dir = out_dir;
      config.chunk_size = chunk_size;
      config.threads = thread_budget();
      const auto path = cmd_fit_cl(config);
      std::cout << path.string() << "\n";
    } else if (spectrum->parsed()) {
      SpectrumConfig config;
      if (!preset_name.empty()) {
        const Preset* preset = find_preset(preset_name);
        if (preset == nullptr) {
          throw InvalidParamsError("unknown preset \"" + preset_name + "\"");
        }
        config.generator = preset->generator;
        config.levels = spectrum->count("--levels") > 0 ? levels : preset->default_levels;
      } else {
        config.generator = matrix.validated();
        if (spectrum->count("--levels") == 0) {
          throw InvalidParamsError("--levels is required with explicit parameters");
        }
        config.levels = levels;
      }
      config.out_dir = out_dir;
      const auto summary = cmd_spectrum(config);
      std::cout << "theorem_gap=" << format_double(summary.theorem_gap)
                << " skg_mass_below_1e-20=" << format_double(summary.skg_mass_below) << "\n";
    } else if (presets->parsed()) {
      char t[128];
      for (const Preset& p : builtin_presets()) {
        std::snprintf(t, sizeof t, "T=[%.6g, %.6g; %.6g, %.6g]", p.generator.t1, p.generator.t2,
                      p.generator.t3, p.generator.t4);
        std::cout << p.name << ": " << t << " levels=" << p.default_levels;
        if (!p.listed_levels.empty()) {
          std::cout << " (also";
          for (int l : p.listed_levels) std::cout << " " << l;
          std::cout << ")";
        }
        if (p.edges_per_vertex) {
          std::cout << " edges=" << *p.edges_per_vertex << "*2^levels";
        } else {
          std::cout << " edges=" << p.edges;
        }
        if (p.noise) std::cout << " noise=" << *p.noise;
        std::cout << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
