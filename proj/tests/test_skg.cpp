#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include <doctest.h>

#include "krongraph/errors.hpp"
#include "krongraph/presets.hpp"
#include "krongraph/skg.hpp"
#include "oracles.hpp"

using namespace krongraph;

namespace {

const GeneratorMatrix kGraph500{0.57, 0.19, 0.19, 0.05};
const GeneratorMatrix kUniform{0.25, 0.25, 0.25, 0.25};

// Feeds a fixed sequence of uniforms into the descent.
Edge trace_edge(const GeneratorMatrix& t, const std::vector<double>& draws) {
  const std::vector<GeneratorMatrix> per_level(draws.size(), t);
  const auto thresholds = detail::descent_thresholds(per_level);
  std::size_t next = 0;
  return detail::sample_edge(std::span<const detail::LevelThresholds>(thresholds),
                             [&] { return draws[next++]; });
}

}  // namespace

TEST_SUITE("skg") {

TEST_CASE("params validate the level range") {
  CHECK_THROWS_AS(make_skg_params(kUniform, 0, 1), InvalidParamsError);
  CHECK_THROWS_AS(make_skg_params(kUniform, 64, 1), InvalidParamsError);
  CHECK(make_skg_params(kUniform, 18, 1).vertex_count() == 262144);
}

TEST_CASE("descent into the first quadrant lands on (0, 0)") {
  CHECK(trace_edge(kGraph500, {0.0, 0.0}) == Edge{0, 0});
}

TEST_CASE("descent into the last quadrant lands on (3, 3)") {
  CHECK(trace_edge(kGraph500, {0.99, 0.99}) == Edge{3, 3});
}

TEST_CASE("quadrants (t2, t3, t1) produce source 2 and sink 4 at three levels") {
  // Uniform thresholds are 0.25/0.50/0.75, so the draws pick t2, t3, t1:
  // source bits 0,1,0 and sink bits 1,0,0 from the most significant end.
  CHECK(trace_edge(kUniform, {0.30, 0.60, 0.10}) == Edge{2, 4});
}

TEST_CASE("bit profile counts zeros over l-bit ids") {
  const BitProfile p = bit_profile(3, 2, 4);  // 010, 100
  CHECK(p.source_zeros == 2);
  CHECK(p.sink_zeros == 2);
  CHECK(p.common_zeros == 1);
}

TEST_CASE("single-level entries are the matrix itself") {
  const SkgEntryEvaluator entry(kGraph500, 1);
  CHECK(entry(0, 0) == doctest::Approx(0.57).epsilon(1e-15));
  CHECK(entry(0, 1) == doctest::Approx(0.19).epsilon(1e-15));
  CHECK(entry(1, 0) == doctest::Approx(0.19).epsilon(1e-15));
  CHECK(entry(1, 1) == doctest::Approx(0.05).epsilon(1e-15));
}

TEST_CASE("uniform entries are 1/16 at two levels") {
  const SkgEntryEvaluator entry(kUniform, 2);
  for (VertexId i = 0; i < 4; ++i) {
    for (VertexId j = 0; j < 4; ++j) {
      CHECK(entry(i, j) == doctest::Approx(1.0 / 16).epsilon(1e-15));
    }
  }
}

TEST_CASE("entries match the explicit Kronecker power at six levels") {
  const int levels = 6;
  const std::size_t n = std::size_t{1} << levels;
  const std::vector<double> matrix = testing::kron_power(kGraph500, levels);
  const SkgEntryEvaluator entry(kGraph500, levels);
  double max_gap = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      max_gap = std::max(max_gap, std::abs(entry(i, j) - matrix[i * n + j]));
    }
  }
  CHECK(max_gap <= 1e-12);
}

TEST_CASE("entries sum to one over all pairs") {
  const SkgEntryEvaluator entry(kGraph500, 4);
  double sum = 0.0;
  for (VertexId i = 0; i < 16; ++i) {
    for (VertexId j = 0; j < 16; ++j) sum += entry(i, j);
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("zero insertions give an empty edge list") {
  CHECK(generate_skg(make_skg_params(kGraph500, 4, 0), 1).empty());
}

TEST_CASE("graph500 l=18 produces 16 * 2^18 edges in range") {
  const SkgParams params = make_skg_params(kGraph500, 18, std::uint64_t{16} << 18);
  const EdgeList edges = generate_skg(params, 1);
  CHECK(edges.size() == 4194304);
  for (std::size_t probe = 0; probe < edges.size(); probe += 9973) {
    CHECK(edges[probe].source < params.vertex_count());
    CHECK(edges[probe].sink < params.vertex_count());
  }
}

TEST_CASE("same params and seed reproduce the identical edge list") {
  const SkgParams params = make_skg_params(kGraph500, 10, 20000);
  CHECK(generate_skg(params, 42) == generate_skg(params, 42));
  CHECK(generate_skg(params, 42) != generate_skg(params, 43));
}

TEST_CASE("thread count never changes the output") {
  const SkgParams params = make_skg_params(kGraph500, 12, 100000);
  GenerateOptions one;
  one.threads = 1;
  GenerateOptions four;
  four.threads = 4;
  CHECK(generate_skg(params, 9, one) == generate_skg(params, 9, four));
}

TEST_CASE("noise schedule stays a valid perturbation") {
  const int levels = 18;
  const double b = 0.1;
  const NoiseSchedule schedule = draw_noise_schedule(kGraph500, levels, b, 3);
  REQUIRE(schedule.per_level.size() == 18);
  for (const GeneratorMatrix& level : schedule.per_level) {
    CHECK(level.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(level.t1 >= 0.0);
    CHECK(level.t2 >= 0.0);
    CHECK(level.t3 >= 0.0);
    CHECK(level.t4 >= 0.0);
    CHECK(std::abs(level.t1 - kGraph500.t1) <= 2.0 * b + 1e-15);
    CHECK(std::abs(level.t2 - kGraph500.t2) <= b + 1e-15);
    CHECK(std::abs(level.t3 - kGraph500.t3) <= b + 1e-15);
    CHECK(std::abs(level.t4 - kGraph500.t4) <= 2.0 * b + 1e-15);
  }
}

TEST_CASE("nskg rejects out-of-range noise") {
  const SkgParams params = make_skg_params(kGraph500, 4, 16);
  CHECK_THROWS_AS(generate_nskg(params, 5.0, 1), NoiseOutOfRangeError);
  CHECK_THROWS_AS(generate_nskg(params, -0.1, 1), NoiseOutOfRangeError);
  CHECK_THROWS_AS(generate_nskg(params, 0.2, 1), NoiseOutOfRangeError);  // > min(t2, t3)
}

TEST_CASE("nskg with zero noise reproduces skg exactly") {
  const SkgParams params = make_skg_params(kGraph500, 10, 30000);
  const auto [schedule, edges] = generate_nskg(params, 0.0, 17);
  CHECK(edges == generate_skg(params, 17));
  for (const GeneratorMatrix& level : schedule.per_level) {
    CHECK(level.t1 == kGraph500.t1);
    CHECK(level.t2 == kGraph500.t2);
    CHECK(level.t3 == kGraph500.t3);
    CHECK(level.t4 == kGraph500.t4);
  }
}

TEST_CASE("nskg at graph500 noise keeps the edge count and schedule length") {
  const SkgParams params = make_skg_params(kGraph500, 12, std::uint64_t{16} << 12);
  const auto [schedule, edges] = generate_nskg(params, 0.1, 5);
  CHECK(edges.size() == params.edges);
  CHECK(schedule.per_level.size() == 12);
}

TEST_CASE("vertex 0 out-degree sits within four binomial deviations") {
  const int levels = 14;
  const std::uint64_t m = std::uint64_t{16} << levels;
  const SkgParams params = make_skg_params(kGraph500, levels, m);
  const EdgeList edges = generate_skg(params, 2024);
  std::uint64_t observed = 0;
  for (const Edge& e : edges) {
    if (e.source == 0) ++observed;
  }
  const double p = std::pow(kGraph500.row0(), levels);
  const double mean = static_cast<double>(m) * p;
  const double sigma = std::sqrt(static_cast<double>(m) * p * (1.0 - p));
  CHECK(std::abs(static_cast<double>(observed) - mean) <= 4.0 * sigma);
}

}  // TEST_SUITE
