#include "krongraph/chung_lu.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "krongraph/errors.hpp"

namespace krongraph {

namespace {

// Shared-table setup as in SkgEntryEvaluator, over the four marginal factors.
// Row and column factors can share a base, so grouped exponents reach 2l.
void build_grouped_tables(const double (&bases)[4], int max_exponent, int (&group_of)[4],
                          std::vector<std::vector<double>>& pow, std::vector<double>& log_base) {
  pow.clear();
  log_base.clear();
  std::vector<double> distinct;
  for (int q = 0; q < 4; ++q) {
    bool found = false;
    for (std::size_t g = 0; g < distinct.size(); ++g) {
      if (distinct[g] == bases[q]) {
        group_of[q] = static_cast<int>(g);
        found = true;
        break;
      }
    }
    if (!found) {
      distinct.push_back(bases[q]);
      group_of[q] = static_cast<int>(distinct.size()) - 1;
    }
  }
  for (double base : distinct) {
    std::vector<double> table(static_cast<std::size_t>(max_exponent) + 1);
    table[0] = 1.0;
    for (int k = 1; k <= max_exponent; ++k) table[k] = table[k - 1] * base;
    pow.push_back(std::move(table));
    log_base.push_back(std::log(base));
  }
}

}  // namespace

DegreeSequence expected_degrees(const GeneratorMatrix& t, int levels, std::uint64_t edges) {
  if (levels < 1 || levels > 30) {
    throw InvalidParamsError("expected_degrees needs levels in [1, 30] to hold 2^l weights, got " +
                             std::to_string(levels));
  }
  const VertexId n = VertexId{1} << levels;
  const double m = static_cast<double>(edges);

  std::vector<double> out_by_zeros(static_cast<std::size_t>(levels) + 1);
  std::vector<double> in_by_zeros(static_cast<std::size_t>(levels) + 1);
  for (int z = 0; z <= levels; ++z) {
    out_by_zeros[z] = m * std::pow(t.row0(), z) * std::pow(t.row1(), levels - z);
    in_by_zeros[z] = m * std::pow(t.col0(), z) * std::pow(t.col1(), levels - z);
  }

  DegreeSequence degrees;
  degrees.total = m;
  degrees.out_weights.resize(n);
  degrees.in_weights.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    const int zeros = levels - std::popcount(v);
    degrees.out_weights[v] = out_by_zeros[zeros];
    degrees.in_weights[v] = in_by_zeros[zeros];
  }
  return degrees;
}

DegreeSequence associated_cl(const GeneratorMatrix& t, int levels, std::uint64_t edges) {
  return expected_degrees(t, levels, edges);
}

double cl_entry(const DegreeSequence& degrees, VertexId i, VertexId j) {
  return degrees.out_weights[i] * degrees.in_weights[j] / (degrees.total * degrees.total);
}

ClEntryEvaluator::ClEntryEvaluator(const GeneratorMatrix& t, int levels) : levels_(levels) {
  if (levels < 1 || levels > 63) {
    throw InvalidParamsError("levels must be in [1, 63], got " + std::to_string(levels));
  }
  const double bases[4] = {t.row0(), t.row1(), t.col0(), t.col1()};
  build_grouped_tables(bases, 2 * levels, group_of_, pow_, log_base_);
}

double ClEntryEvaluator::class_value(int source_zeros, int sink_zeros) const {
  const int exponents[4] = {source_zeros, levels_ - source_zeros, sink_zeros,
                            levels_ - sink_zeros};
  int grouped[4] = {0, 0, 0, 0};
  for (int q = 0; q < 4; ++q) grouped[group_of_[q]] += exponents[q];
  double value = 1.0;
  for (std::size_t g = 0; g < pow_.size(); ++g) {
    value *= pow_[g][grouped[g]];
  }
  return value;
}

double ClEntryEvaluator::class_log_value(int source_zeros, int sink_zeros) const {
  const int exponents[4] = {source_zeros, levels_ - source_zeros, sink_zeros,
                            levels_ - sink_zeros};
  int grouped[4] = {0, 0, 0, 0};
  for (int q = 0; q < 4; ++q) grouped[group_of_[q]] += exponents[q];
  double log_value = 0.0;
  for (std::size_t g = 0; g < pow_.size(); ++g) {
    if (grouped[g] > 0) log_value += grouped[g] * log_base_[g];
  }
  return log_value;
}

double ClEntryEvaluator::operator()(VertexId i, VertexId j) const {
  const VertexId mask = (VertexId{1} << levels_) - 1;
  return class_value(levels_ - std::popcount(i & mask), levels_ - std::popcount(j & mask));
}

AliasTable::AliasTable(std::span<const double> weights) {
  const std::uint64_t n = weights.size();
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ZeroTotalWeightError("weights must be finite and nonnegative");
    }
    total += w;
  }
  if (n == 0 || !(total > 0.0)) {
    throw ZeroTotalWeightError("total weight is zero");
  }
  total_ = total;

  threshold_.assign(n, 0.0);
  alias_.assign(n, 0);
  std::vector<double> scaled(n);
  for (std::uint64_t i = 0; i < n; ++i) scaled[i] = weights[i] * n / total;

  // Vose's method; the two worklists are processed in ascending index order,
  // so construction is deterministic.
  std::vector<std::uint64_t> small, large;
  small.reserve(n);
  large.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  std::size_t si = 0, li = 0;
  while (si < small.size() && li < large.size()) {
    const std::uint64_t s = small[si++];
    const std::uint64_t l = large[li];
    threshold_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      small.push_back(l);
      ++li;
    }
  }
  for (; li < large.size(); ++li) {
    threshold_[large[li]] = 1.0;
    alias_[large[li]] = large[li];
  }
  for (; si < small.size(); ++si) {  // leftovers from rounding
    threshold_[small[si]] = 1.0;
    alias_[small[si]] = small[si];
  }
}

EdgeList generate_cl(const DegreeSequence& degrees, std::uint64_t edges, std::uint64_t seed,
                     const GenerateOptions& options) {
  const AliasTable sources(degrees.out_weights);
  const AliasTable sinks(degrees.in_weights);

  EdgeList out(edges);
  detail::run_chunks(edges, options,
                     [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
                       RandomStream rng(seed, chunk);
                       for (std::uint64_t e = begin; e < end; ++e) {
                         const VertexId source = sources.sample(rng);
                         const VertexId sink = sinks.sample(rng);
                         out[e] = Edge{source, sink};
                       }
                     });
  return out;
}

}  // namespace krongraph
