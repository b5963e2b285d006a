#include "krongraph/skg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

#include "krongraph/errors.hpp"

namespace krongraph {

SkgParams make_skg_params(const GeneratorMatrix& t, int levels, std::uint64_t edges) {
  if (levels < 1 || levels > 63) {
    throw InvalidParamsError("levels must be in [1, 63], got " + std::to_string(levels));
  }
  return SkgParams{t, levels, edges};
}

BitProfile bit_profile(int levels, VertexId i, VertexId j) {
  const VertexId mask = levels == 64 ? ~VertexId{0} : (VertexId{1} << levels) - 1;
  const int ones_i = std::popcount(i & mask);
  const int ones_j = std::popcount(j & mask);
  const int zeros_both = levels - std::popcount((i | j) & mask);
  return BitProfile{levels - ones_i, levels - ones_j, zeros_both};
}

namespace {

// Power tables shared between quadrants with exactly equal values, so that
// classes whose entries coincide by symmetry (t2 = t3, uniform T, ...)
// evaluate to the same double.
void build_grouped_tables(const double (&bases)[4], int levels, int (&group_of)[4],
                          std::vector<std::vector<double>>& pow, std::vector<double>& log_base) {
  pow.clear();
  log_base.clear();
  std::vector<double> distinct;
  for (int q = 0; q < 4; ++q) {
    auto it = std::find(distinct.begin(), distinct.end(), bases[q]);
    if (it == distinct.end()) {
      distinct.push_back(bases[q]);
      group_of[q] = static_cast<int>(distinct.size()) - 1;
    } else {
      group_of[q] = static_cast<int>(it - distinct.begin());
    }
  }
  for (double base : distinct) {
    std::vector<double> table(static_cast<std::size_t>(levels) + 1);
    table[0] = 1.0;
    for (int k = 1; k <= levels; ++k) table[k] = table[k - 1] * base;
    pow.push_back(std::move(table));
    log_base.push_back(std::log(base));  // -inf for a zero base; exponent 0 never consults it
  }
}

}  // namespace

SkgEntryEvaluator::SkgEntryEvaluator(const GeneratorMatrix& t, int levels) : levels_(levels) {
  if (levels < 1 || levels > 63) {
    throw InvalidParamsError("levels must be in [1, 63], got " + std::to_string(levels));
  }
  const double bases[4] = {t.t1, t.t2, t.t3, t.t4};
  build_grouped_tables(bases, levels, group_of_, pow_, log_base_);
}

double SkgEntryEvaluator::class_value(const BitProfile& p) const {
  const int exponents[4] = {p.common_zeros, p.source_zeros - p.common_zeros,
                            p.sink_zeros - p.common_zeros,
                            levels_ - p.source_zeros - p.sink_zeros + p.common_zeros};
  int grouped[4] = {0, 0, 0, 0};
  for (int q = 0; q < 4; ++q) grouped[group_of_[q]] += exponents[q];
  double value = 1.0;
  for (std::size_t g = 0; g < pow_.size(); ++g) {
    value *= pow_[g][grouped[g]];
  }
  return value;
}

double SkgEntryEvaluator::class_log_value(const BitProfile& p) const {
  const int exponents[4] = {p.common_zeros, p.source_zeros - p.common_zeros,
                            p.sink_zeros - p.common_zeros,
                            levels_ - p.source_zeros - p.sink_zeros + p.common_zeros};
  int grouped[4] = {0, 0, 0, 0};
  for (int q = 0; q < 4; ++q) grouped[group_of_[q]] += exponents[q];
  double log_value = 0.0;
  for (std::size_t g = 0; g < pow_.size(); ++g) {
    if (grouped[g] > 0) log_value += grouped[g] * log_base_[g];
  }
  return log_value;
}

double SkgEntryEvaluator::operator()(VertexId i, VertexId j) const {
  return class_value(bit_profile(levels_, i, j));
}

double skg_entry(const GeneratorMatrix& t, int levels, VertexId i, VertexId j) {
  return SkgEntryEvaluator(t, levels)(i, j);
}

namespace detail {

std::vector<LevelThresholds> descent_thresholds(std::span<const GeneratorMatrix> per_level) {
  std::vector<LevelThresholds> thresholds;
  thresholds.reserve(per_level.size());
  for (const GeneratorMatrix& t : per_level) {
    thresholds.push_back({t.t1, t.t1 + t.t2, t.t1 + t.t2 + t.t3});
  }
  return thresholds;
}

}  // namespace detail

Edge skg_sample_edge(const SkgParams& params, RandomStream& rng) {
  const detail::LevelThresholds t{params.generator.t1, params.generator.t1 + params.generator.t2,
                                  params.generator.t1 + params.generator.t2 + params.generator.t3};
  const std::vector<detail::LevelThresholds> levels(static_cast<std::size_t>(params.levels), t);
  return detail::sample_edge(std::span<const detail::LevelThresholds>(levels),
                             [&rng] { return rng.next_double(); });
}

namespace detail {

void run_chunks(std::uint64_t edge_count, const GenerateOptions& options,
                const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& fill) {
  const std::uint64_t chunk_size = std::max<std::uint64_t>(1, options.chunk_size);
  const std::uint64_t chunk_count = edge_count == 0 ? 0 : (edge_count - 1) / chunk_size + 1;
  const int threads = std::max(1, options.threads);
  if (threads == 1 || chunk_count <= 1) {
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
      fill(c, c * chunk_size, std::min(edge_count, (c + 1) * chunk_size));
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t c = static_cast<std::uint64_t>(w); c < chunk_count;
           c += static_cast<std::uint64_t>(threads)) {
        fill(c, c * chunk_size, std::min(edge_count, (c + 1) * chunk_size));
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace detail

namespace {

EdgeList generate_from_levels(std::span<const GeneratorMatrix> per_level, std::uint64_t edges,
                              std::uint64_t seed, const GenerateOptions& options) {
  const std::vector<detail::LevelThresholds> thresholds = detail::descent_thresholds(per_level);
  EdgeList out(edges);
  detail::run_chunks(edges, options,
                     [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
                       RandomStream rng(seed, chunk);
                       for (std::uint64_t e = begin; e < end; ++e) {
                         out[e] = detail::sample_edge(
                             std::span<const detail::LevelThresholds>(thresholds),
                             [&rng] { return rng.next_double(); });
                       }
                     });
  return out;
}

}  // namespace

EdgeList generate_skg(const SkgParams& params, std::uint64_t seed, const GenerateOptions& options) {
  const std::vector<GeneratorMatrix> per_level(static_cast<std::size_t>(params.levels),
                                               params.generator);
  return generate_from_levels(per_level, params.edges, seed, options);
}

NoiseSchedule draw_noise_schedule(const GeneratorMatrix& t, int levels, double noise_level,
                                  std::uint64_t seed) {
  // Entries stay nonnegative for every mu in [-b, b] iff b <= min(t2, t3)
  // and 2b <= t1 + t4.
  if (!(noise_level >= 0.0) || noise_level > std::min(t.t2, t.t3) ||
      2.0 * noise_level > t.t1 + t.t4) {
    throw NoiseOutOfRangeError("noise level " + std::to_string(noise_level) +
                               " outside the safe range [0, min(t2, t3)] with 2b <= t1 + t4");
  }
  NoiseSchedule schedule;
  schedule.noise_level = noise_level;
  schedule.per_level.reserve(static_cast<std::size_t>(levels));
  RandomStream rng(seed, kNoiseStreamBase);
  const double diag = t.t1 + t.t4;
  for (int i = 0; i < levels; ++i) {
    const double mu = (2.0 * rng.next_double() - 1.0) * noise_level;
    if (diag == 0.0) {  // then b = 0 was enforced above; no perturbation possible
      schedule.per_level.push_back(t);
    } else {
      schedule.per_level.push_back(GeneratorMatrix{t.t1 - 2.0 * mu * t.t1 / diag, t.t2 + mu,
                                                   t.t3 + mu, t.t4 - 2.0 * mu * t.t4 / diag});
    }
  }
  return schedule;
}

std::pair<NoiseSchedule, EdgeList> generate_nskg(const SkgParams& params, double noise_level,
                                                 std::uint64_t seed,
                                                 const GenerateOptions& options) {
  NoiseSchedule schedule =
      draw_noise_schedule(params.generator, params.levels, noise_level, seed);
  EdgeList edges = generate_from_levels(schedule.per_level, params.edges, seed, options);
  return {std::move(schedule), std::move(edges)};
}

}  // namespace krongraph
