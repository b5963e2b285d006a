#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "krongraph/generator_matrix.hpp"
#include "krongraph/rng.hpp"
#include "krongraph/skg.hpp"

namespace krongraph {

// Directed weight sequences driving CL sampling; sums of both sides equal
// total (within rounding).
struct DegreeSequence {
  std::vector<double> out_weights;
  std::vector<double> in_weights;
  double total = 0.0;  // m
};

// Expected raw in/out insertion counts implied by an SKG parameterization:
// out(i) = m*(t1+t2)^zi*(t3+t4)^(l-zi), in(j) = m*(t1+t3)^zj*(t2+t4)^(l-zj).
DegreeSequence expected_degrees(const GeneratorMatrix& t, int levels, std::uint64_t edges);

// The CL model induced by an SKG parameterization is exactly its expected
// degree sequence.
DegreeSequence associated_cl(const GeneratorMatrix& t, int levels, std::uint64_t edges);

// P_CL(i,j) = out(i)*in(j)/m^2.
double cl_entry(const DegreeSequence& degrees, VertexId i, VertexId j);

// Closed-form CL entry straight from (T, l); usable for levels far beyond
// what an explicit weight vector could hold.
class ClEntryEvaluator {
 public:
  ClEntryEvaluator(const GeneratorMatrix& t, int levels);

  double operator()(VertexId i, VertexId j) const;
  double class_value(int source_zeros, int sink_zeros) const;
  double class_log_value(int source_zeros, int sink_zeros) const;

  int levels() const noexcept { return levels_; }

 private:
  int levels_;
  int group_of_[4];                       // factor index (row0,row1,col0,col1) -> table
  std::vector<std::vector<double>> pow_;
  std::vector<double> log_base_;
};

// Walker alias table; O(n) build, O(1) per draw (two uniforms).
// Throws ZeroTotalWeightError if the weights sum to zero (or are not finite).
class AliasTable {
 public:
  explicit AliasTable(std::span<const double> weights);

  std::uint64_t size() const noexcept { return threshold_.size(); }
  double total_weight() const noexcept { return total_; }

  std::uint64_t sample(RandomStream& rng) const {
    const std::uint64_t slot =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(rng.next_double() * size()), size() - 1);
    return rng.next_double() < threshold_[slot] ? slot : alias_[slot];
  }

 private:
  std::vector<double> threshold_;
  std::vector<std::uint64_t> alias_;
  double total_ = 0.0;
};

// m edges, source from the out-weight distribution and sink independently
// from the in-weight distribution. Same chunked determinism contract as
// generate_skg.
EdgeList generate_cl(const DegreeSequence& degrees, std::uint64_t edges, std::uint64_t seed,
                     const GenerateOptions& options = {});

}  // namespace krongraph
