#include "krongraph/presets.hpp"

namespace krongraph {

namespace {

std::vector<Preset> make_presets() {
  std::vector<Preset> presets;

  Preset graph500;
  graph500.name = "graph500";
  graph500.generator = GeneratorMatrix{0.57, 0.19, 0.19, 0.05};
  graph500.default_levels = 18;
  graph500.listed_levels = {26, 29, 32, 36, 39, 42};
  graph500.edges_per_vertex = 16;  // m = 16 * 2^l
  graph500.noise = 0.1;
  presets.push_back(graph500);

  Preset epinions;
  epinions.name = "soc-epinions";
  epinions.generator = GeneratorMatrix{0.4668, 0.2486, 0.2243, 0.0603};
  epinions.default_levels = 17;
  epinions.edges = 811480;
  presets.push_back(epinions);

  // The published fit sums to 1.000001; normalize so the matrix is a valid
  // quadrant distribution.
  Preset hepth;
  hepth.name = "ca-hepth";
  {
    const double raw[4] = {0.469455, 0.127350, 0.127350, 0.275846};
    const double s = raw[0] + raw[1] + raw[2] + raw[3];
    hepth.generator = GeneratorMatrix{raw[0] / s, raw[1] / s, raw[2] / s, raw[3] / s};
  }
  hepth.default_levels = 14;
  hepth.edges = 51946;
  presets.push_back(hepth);

  Preset hepph;
  hepph.name = "cit-hepph";
  hepph.generator = GeneratorMatrix{0.429559, 0.189715, 0.153414, 0.227312};
  hepph.default_levels = 15;
  hepph.edges = 841754;
  presets.push_back(hepph);

  return presets;
}

}  // namespace

const std::vector<Preset>& builtin_presets() {
  static const std::vector<Preset> presets = make_presets();
  return presets;
}

const Preset* find_preset(std::string_view name) {
  for (const Preset& preset : builtin_presets()) {
    if (preset.name == name) return &preset;
  }
  return nullptr;
}

std::uint64_t preset_edge_count(const Preset& preset, int levels) {
  if (preset.edges_per_vertex) {
    return *preset.edges_per_vertex << levels;
  }
  return preset.edges;
}

}  // namespace krongraph
