#include "krongraph/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace krongraph {

std::map<std::uint64_t, std::uint64_t> degree_distribution(const Graph& g) {
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (VertexId v = 0; v < g.n; ++v) ++histogram[g.degree(v)];
  return histogram;
}

std::map<std::uint64_t, ClusteringClass> clustering_by_degree(const Graph& g) {
  // Each triangle is counted once from its lowest-ranked vertex, with rank =
  // (degree, id). Forward lists hold only higher-ranked neighbors, keeping
  // the intersection cost near the graph's arboricity.
  std::vector<std::uint64_t> triangles(g.n, 0);

  auto rank_less = [&g](VertexId a, VertexId b) {
    const std::uint64_t da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  };

  std::vector<std::uint64_t> forward_offsets(g.n + 1, 0);
  for (VertexId v = 0; v < g.n; ++v) {
    std::uint64_t count = 0;
    for (VertexId w : g.neighbors(v)) {
      if (rank_less(v, w)) ++count;
    }
    forward_offsets[v + 1] = forward_offsets[v] + count;
  }
  std::vector<VertexId> forward(forward_offsets[g.n]);
  for (VertexId v = 0; v < g.n; ++v) {
    std::uint64_t cursor = forward_offsets[v];
    for (VertexId w : g.neighbors(v)) {
      if (rank_less(v, w)) forward[cursor++] = w;
    }
    std::sort(forward.begin() + static_cast<std::ptrdiff_t>(forward_offsets[v]),
              forward.begin() + static_cast<std::ptrdiff_t>(cursor), rank_less);
  }

  auto forward_span = [&](VertexId v) {
    return std::span<const VertexId>(forward.data() + forward_offsets[v],
                                     forward.data() + forward_offsets[v + 1]);
  };
  for (VertexId u = 0; u < g.n; ++u) {
    const auto fu = forward_span(u);
    for (std::size_t i = 0; i < fu.size(); ++i) {
      const VertexId v = fu[i];
      const auto fv = forward_span(v);
      // Merge by rank order; common entries close a triangle {u, v, w}.
      std::size_t a = i + 1, b = 0;
      while (a < fu.size() && b < fv.size()) {
        if (fu[a] == fv[b]) {
          ++triangles[u];
          ++triangles[v];
          ++triangles[fu[a]];
          ++a;
          ++b;
        } else if (rank_less(fu[a], fv[b])) {
          ++a;
        } else {
          ++b;
        }
      }
    }
  }

  std::map<std::uint64_t, ClusteringClass> by_degree;
  for (VertexId v = 0; v < g.n; ++v) {
    const std::uint64_t d = g.degree(v);
    if (d < 2) continue;
    const double cc =
        2.0 * static_cast<double>(triangles[v]) / (static_cast<double>(d) * (d - 1));
    ClusteringClass& cls = by_degree[d];
    cls.mean_cc += cc;
    ++cls.vertex_count;
  }
  for (auto& [d, cls] : by_degree) cls.mean_cc /= static_cast<double>(cls.vertex_count);
  return by_degree;
}

std::map<std::uint64_t, double> assortativity_profile(const Graph& g) {
  std::map<std::uint64_t, double> sums;
  std::map<std::uint64_t, std::uint64_t> counts;
  for (VertexId v = 0; v < g.n; ++v) {
    const std::uint64_t d = g.degree(v);
    if (d == 0) continue;
    double neighbor_degree_sum = 0.0;
    for (VertexId w : g.neighbors(v)) neighbor_degree_sum += static_cast<double>(g.degree(w));
    sums[d] += neighbor_degree_sum / static_cast<double>(d);
    ++counts[d];
  }
  std::map<std::uint64_t, double> profile;
  for (const auto& [d, sum] : sums) profile[d] = sum / static_cast<double>(counts[d]);
  return profile;
}

CoreDecomposition core_decomposition(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling.
  CoreDecomposition result;
  result.core_numbers.assign(g.n, 0);
  if (g.n == 0) return result;

  std::uint64_t max_degree = 0;
  for (VertexId v = 0; v < g.n; ++v) max_degree = std::max(max_degree, g.degree(v));

  std::vector<std::uint64_t> degree(g.n);
  std::vector<std::uint64_t> bin(max_degree + 2, 0);
  for (VertexId v = 0; v < g.n; ++v) {
    degree[v] = g.degree(v);
    ++bin[degree[v]];
  }
  std::uint64_t start = 0;
  for (std::uint64_t d = 0; d <= max_degree; ++d) {
    const std::uint64_t count = bin[d];
    bin[d] = start;
    start += count;
  }
  std::vector<VertexId> order(g.n);
  std::vector<std::uint64_t> position(g.n);
  for (VertexId v = 0; v < g.n; ++v) {
    position[v] = bin[degree[v]];
    order[position[v]] = v;
    ++bin[degree[v]];
  }
  for (std::uint64_t d = max_degree + 1; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::uint64_t i = 0; i < g.n; ++i) {
    const VertexId v = order[i];
    result.core_numbers[v] = degree[v];
    for (VertexId w : g.neighbors(v)) {
      if (degree[w] > degree[v]) {
        // Swap w to the front of its bucket, then shrink its degree.
        const std::uint64_t dw = degree[w];
        const std::uint64_t pw = position[w];
        const std::uint64_t pfront = bin[dw];
        const VertexId front = order[pfront];
        if (w != front) {
          std::swap(order[pw], order[pfront]);
          position[w] = pfront;
          position[front] = pw;
        }
        ++bin[dw];
        --degree[w];
      }
    }
  }

  std::uint64_t max_core = 0;
  for (VertexId v = 0; v < g.n; ++v) max_core = std::max(max_core, result.core_numbers[v]);
  std::vector<std::uint64_t> with_core(max_core + 1, 0);
  for (VertexId v = 0; v < g.n; ++v) ++with_core[result.core_numbers[v]];
  std::uint64_t cumulative = 0;
  for (std::uint64_t k = max_core; k >= 1; --k) {
    cumulative += with_core[k];
    result.core_sizes[k] = cumulative;
  }
  return result;
}

ComparisonSummary compare_reports(const MetricReport& a, const MetricReport& b) {
  ComparisonSummary summary;

  for (const auto& [d, cls_a] : a.clustering) {
    auto it = b.clustering.find(d);
    if (it == b.clustering.end()) continue;
    const double gap = std::abs(cls_a.mean_cc - it->second.mean_cc);
    summary.cc_gaps[d] = gap;
    summary.max_cc_gap = std::max(summary.max_cc_gap, gap);
  }

  const std::size_t shared_ranks = std::min(a.top_eigenvalues.size(), b.top_eigenvalues.size());
  for (std::size_t r = 0; r < shared_ranks; ++r) {
    const double va = a.top_eigenvalues[r];
    const double vb = b.top_eigenvalues[r];
    const double denom = std::max({std::abs(va), std::abs(vb), 1e-300});
    const double gap = std::abs(va - vb) / denom;
    summary.eigenvalue_rel_gaps.push_back(gap);
    summary.max_eigenvalue_rel_gap = std::max(summary.max_eigenvalue_rel_gap, gap);
  }

  for (const auto& [k, size_a] : a.cores.core_sizes) {
    auto it = b.cores.core_sizes.find(k);
    if (it == b.cores.core_sizes.end()) continue;
    const double denom = static_cast<double>(std::max(size_a, it->second));
    if (denom == 0.0) continue;
    const double gap =
        std::abs(static_cast<double>(size_a) - static_cast<double>(it->second)) / denom;
    summary.max_core_size_rel_gap = std::max(summary.max_core_size_rel_gap, gap);
  }

  double n_a = 0.0, n_b = 0.0;
  for (const auto& [d, count] : a.degree_histogram) n_a += static_cast<double>(count);
  for (const auto& [d, count] : b.degree_histogram) n_b += static_cast<double>(count);
  if (n_a > 0.0 && n_b > 0.0) {
    double tv = 0.0;
    auto ia = a.degree_histogram.begin();
    auto ib = b.degree_histogram.begin();
    while (ia != a.degree_histogram.end() || ib != b.degree_histogram.end()) {
      if (ib == b.degree_histogram.end() ||
          (ia != a.degree_histogram.end() && ia->first < ib->first)) {
        tv += static_cast<double>(ia->second) / n_a;
        ++ia;
      } else if (ia == a.degree_histogram.end() || ib->first < ia->first) {
        tv += static_cast<double>(ib->second) / n_b;
        ++ib;
      } else {
        tv += std::abs(static_cast<double>(ia->second) / n_a -
                       static_cast<double>(ib->second) / n_b);
        ++ia;
        ++ib;
      }
    }
    summary.degree_tv_distance = 0.5 * tv;
  }
  return summary;
}

double max_clustering_gap(const MetricReport& a, const MetricReport& b,
                          std::uint64_t min_class_size) {
  double gap = 0.0;
  for (const auto& [d, cls_a] : a.clustering) {
    if (cls_a.vertex_count < min_class_size) continue;
    auto it = b.clustering.find(d);
    if (it == b.clustering.end() || it->second.vertex_count < min_class_size) continue;
    gap = std::max(gap, std::abs(cls_a.mean_cc - it->second.mean_cc));
  }
  return gap;
}

}  // namespace krongraph
