#include <cmath>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "krongraph/chung_lu.hpp"
#include "krongraph/errors.hpp"
#include "oracles.hpp"

using namespace krongraph;

namespace {

const GeneratorMatrix kGraph500{0.57, 0.19, 0.19, 0.05};
const GeneratorMatrix kUniform{0.25, 0.25, 0.25, 0.25};

}  // namespace

TEST_SUITE("chung_lu") {

TEST_CASE("uniform generator spreads the expected degree evenly") {
  const DegreeSequence degrees = expected_degrees(kUniform, 5, 320);
  for (double w : degrees.out_weights) CHECK(w == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("vertex 0 expected out-degree is m*(t1+t2)^l") {
  const DegreeSequence degrees = expected_degrees(kGraph500, 2, 64);
  CHECK(degrees.out_weights[0] == doctest::Approx(36.9664).epsilon(1e-12));
}

TEST_CASE("expected degrees sum to m on both sides") {
  const std::uint64_t m = std::uint64_t{16} << 10;
  const DegreeSequence degrees = expected_degrees(kGraph500, 10, m);
  const double out = std::accumulate(degrees.out_weights.begin(), degrees.out_weights.end(), 0.0);
  const double in = std::accumulate(degrees.in_weights.begin(), degrees.in_weights.end(), 0.0);
  CHECK(out == doctest::Approx(static_cast<double>(m)).epsilon(1e-9));
  CHECK(in == doctest::Approx(static_cast<double>(m)).epsilon(1e-9));
}

TEST_CASE("expected degrees match m times the Kronecker row and column sums") {
  const int levels = 5;
  const std::size_t n = std::size_t{1} << levels;
  const std::uint64_t m = 1000;
  const std::vector<double> matrix = testing::kron_power(kGraph500, levels);
  const std::vector<double> rows = testing::row_sums(matrix, n);
  const std::vector<double> cols = testing::col_sums(matrix, n);
  const DegreeSequence degrees = expected_degrees(kGraph500, levels, m);
  for (std::size_t v = 0; v < n; ++v) {
    CHECK(degrees.out_weights[v] == doctest::Approx(m * rows[v]).epsilon(1e-12));
    CHECK(degrees.in_weights[v] == doctest::Approx(m * cols[v]).epsilon(1e-12));
  }
}

TEST_CASE("equal weights give the flat cl entry") {
  DegreeSequence degrees;
  degrees.out_weights.assign(8, 2.0);
  degrees.in_weights.assign(8, 2.0);
  degrees.total = 16.0;
  for (VertexId i = 0; i < 8; ++i) {
    CHECK(cl_entry(degrees, i, i) == doctest::Approx(1.0 / 64).epsilon(1e-15));
  }
}

TEST_CASE("associated cl entries follow the closed marginal form") {
  const int levels = 6;
  const DegreeSequence degrees = associated_cl(kGraph500, levels, 4096);
  const ClEntryEvaluator entry(kGraph500, levels);
  const VertexId probes[] = {0, 1, 7, 21, 42, 63};
  for (VertexId i : probes) {
    for (VertexId j : probes) {
      CHECK(cl_entry(degrees, i, j) == doctest::Approx(entry(i, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("cl entries sum to one over all pairs") {
  const int levels = 5;
  const ClEntryEvaluator entry(kGraph500, levels);
  const VertexId n = VertexId{1} << levels;
  double sum = 0.0;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = 0; j < n; ++j) sum += entry(i, j);
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("zero insertions give an empty list") {
  DegreeSequence degrees;
  degrees.out_weights = {1.0, 1.0};
  degrees.in_weights = {1.0, 1.0};
  degrees.total = 2.0;
  CHECK(generate_cl(degrees, 0, 1).empty());
}

TEST_CASE("a single vertex with all weight receives every insertion") {
  DegreeSequence degrees;
  degrees.out_weights = {5.0};
  degrees.in_weights = {5.0};
  degrees.total = 5.0;
  const EdgeList edges = generate_cl(degrees, 7, 3);
  REQUIRE(edges.size() == 7);
  for (const Edge& e : edges) CHECK(e == Edge{0, 0});
}

TEST_CASE("zero total weight is rejected") {
  DegreeSequence degrees;
  degrees.out_weights = {0.0, 0.0};
  degrees.in_weights = {0.0, 0.0};
  degrees.total = 0.0;
  CHECK_THROWS_AS(generate_cl(degrees, 3, 1), ZeroTotalWeightError);
}

TEST_CASE("alias sampling reproduces the weight proportions") {
  const std::vector<double> weights = {1.0, 0.0, 3.0, 6.0};
  const AliasTable table(weights);
  RandomStream rng(11, 0);
  std::vector<std::uint64_t> counts(weights.size(), 0);
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) ++counts[table.sample(rng)];
  CHECK(counts[1] == 0);
  for (std::size_t v = 0; v < weights.size(); ++v) {
    const double expected = draws * weights[v] / 10.0;
    CHECK(std::abs(static_cast<double>(counts[v]) - expected) <=
          4.0 * std::sqrt(expected + 1.0) + 4.0);
  }
}

TEST_CASE("cl generation is deterministic and thread-independent") {
  const DegreeSequence degrees = associated_cl(kGraph500, 10, 16384);
  GenerateOptions one;
  one.threads = 1;
  GenerateOptions four;
  four.threads = 4;
  const EdgeList a = generate_cl(degrees, 16384, 5, one);
  const EdgeList b = generate_cl(degrees, 16384, 5, four);
  CHECK(a == b);
}

}  // TEST_SUITE
