#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "krongraph/generator_matrix.hpp"
#include "krongraph/rng.hpp"

namespace krongraph {

using VertexId = std::uint64_t;

struct Edge {
  VertexId source = 0;
  VertexId sink = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Raw directed insertions; duplicates and self-loops are kept until
// symmetrize() builds the simple graph.
using EdgeList = std::vector<Edge>;

struct SkgParams {
  GeneratorMatrix generator;
  int levels = 1;            // l, with n = 2^l
  std::uint64_t edges = 0;   // insertion count m

  VertexId vertex_count() const noexcept { return VertexId{1} << levels; }
};

// Throws InvalidParamsError unless 1 <= levels <= 63.
SkgParams make_skg_params(const GeneratorMatrix& t, int levels, std::uint64_t edges);

// Zero-bit structure of a vertex pair over l-bit ids.
struct BitProfile {
  int source_zeros = 0;  // z_i
  int sink_zeros = 0;    // z_j
  int common_zeros = 0;  // c_z
};

BitProfile bit_profile(int levels, VertexId i, VertexId j);

// Closed-form matrix entry t1^cz * t2^(zi-cz) * t3^(zj-cz) * t4^(l-zi-zj+cz)
// without forming the Kronecker power. Equal generator entries share one
// power table, so classes that coincide by symmetry evaluate bit-identically.
// Build one evaluator when scanning many entries.
class SkgEntryEvaluator {
 public:
  SkgEntryEvaluator(const GeneratorMatrix& t, int levels);

  double operator()(VertexId i, VertexId j) const;
  double class_value(const BitProfile& profile) const;
  double class_log_value(const BitProfile& profile) const;

  int levels() const noexcept { return levels_; }

 private:
  int levels_;
  int group_of_[4];                        // quadrant -> power-table index
  std::vector<std::vector<double>> pow_;   // one table per distinct entry value
  std::vector<double> log_base_;           // log of each table's base
};

double skg_entry(const GeneratorMatrix& t, int levels, VertexId i, VertexId j);

struct NoiseSchedule {
  double noise_level = 0.0;
  std::vector<GeneratorMatrix> per_level;  // T_1..T_l, level 1 first
};

struct GenerateOptions {
  std::uint64_t chunk_size = 1 << 16;  // edges per independent random stream
  int threads = 1;
};

namespace detail {

struct LevelThresholds {
  double c1, c2, c3;  // cumulative t1, t1+t2, t1+t2+t3
};

std::vector<LevelThresholds> descent_thresholds(std::span<const GeneratorMatrix> per_level);

// One recursive-descent insertion over the given level thresholds. Consumes
// one uniform draw per level; level 1 sets the most significant bit.
template <class U01>
Edge sample_edge(std::span<const LevelThresholds> levels, U01&& u01) {
  VertexId source = 0;
  VertexId sink = 0;
  for (const LevelThresholds& t : levels) {
    const double u = u01();
    const int quadrant = u < t.c2 ? (u < t.c1 ? 0 : 1) : (u < t.c3 ? 2 : 3);
    source = (source << 1) | static_cast<VertexId>(quadrant >> 1);
    sink = (sink << 1) | static_cast<VertexId>(quadrant & 1);
  }
  return Edge{source, sink};
}

// Runs fill(chunk, begin, end) for every chunk of the edge index space
// [0, edge_count). Chunks map to fixed index ranges, so output is identical
// for any thread count.
void run_chunks(std::uint64_t edge_count, const GenerateOptions& options,
                const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& fill);

}  // namespace detail

// Single edge insertion; consumes exactly params.levels draws from rng.
Edge skg_sample_edge(const SkgParams& params, RandomStream& rng);

// m independent insertions. Deterministic in (params, seed, chunk_size);
// thread count only affects scheduling, never output.
EdgeList generate_skg(const SkgParams& params, std::uint64_t seed,
                      const GenerateOptions& options = {});

// Draws the per-level perturbed matrices, then samples every edge with matrix
// T_i at descent level i. The schedule is returned so a run can be audited
// and reproduced. Throws NoiseOutOfRangeError when some mu in [-b, b] could
// drive an entry negative.
std::pair<NoiseSchedule, EdgeList> generate_nskg(const SkgParams& params, double noise_level,
                                                 std::uint64_t seed,
                                                 const GenerateOptions& options = {});

// The perturbation used by generate_nskg: per level draw mu ~ U[-b, b] and set
// T_i = [t1 - 2*mu*t1/(t1+t4), t2 + mu; t3 + mu, t4 - 2*mu*t4/(t1+t4)],
// which preserves the sum at 1.
NoiseSchedule draw_noise_schedule(const GeneratorMatrix& t, int levels, double noise_level,
                                  std::uint64_t seed);

}  // namespace krongraph
