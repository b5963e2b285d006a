#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "krongraph/generator_matrix.hpp"

namespace krongraph {

struct Preset {
  std::string name;
  GeneratorMatrix generator;
  int default_levels = 0;
  std::vector<int> listed_levels;        // documented alternatives, may be empty
  std::uint64_t edges = 0;               // fixed m; ignored when edges_per_vertex set
  std::optional<std::uint64_t> edges_per_vertex;  // m = factor * 2^l
  std::optional<double> noise;           // suggested NSKG noise level
};

const std::vector<Preset>& builtin_presets();

// nullptr when the name is unknown.
const Preset* find_preset(std::string_view name);

// m for the chosen level count (resolves edges_per_vertex scaling).
std::uint64_t preset_edge_count(const Preset& preset, int levels);

}  // namespace krongraph
